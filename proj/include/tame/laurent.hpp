#pragma once

// Sparse Laurent polynomials with arbitrary-precision integer coefficients.

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace tame {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kMaxVars = 16;

/// Exponent vector; entries past nvars are zero.
using Monomial = std::array<std::int16_t, kMaxVars>;

struct Term {
    Monomial exps{};
    BigInt coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Canonical form: terms sorted lexicographically by exponent vector,
/// no zero coefficients.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(int nvars) : nvars_(nvars) { check_nvars(); }

    static LaurentPolynomial constant(int nvars, const BigInt& c);
    static LaurentPolynomial variable(int nvars, int i);
    static LaurentPolynomial monomial(int nvars, const std::vector<int>& exps, const BigInt& c = 1);
    /// Builds from arbitrary terms; sorts and merges duplicates.
    static LaurentPolynomial from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    LaurentPolynomial operator-() const;
    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;
    /// Total order on canonical forms, for deterministic output.
    friend bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b);

    /// Multiplies by the monomial x^e.
    LaurentPolynomial shifted(const std::vector<int>& e) const;
    LaurentPolynomial pow(unsigned e) const;

    /// Componentwise minimum exponent over all terms. Requires nonzero.
    std::vector<int> min_exponents() const;

    std::string to_string() const;

private:
    void check_nvars() const;

    int nvars_ = 0;
    std::vector<Term> terms_;
};

/// Exact quotient p / q in the Laurent ring. Throws InexactDivision.
LaurentPolynomial div_exact(const LaurentPolynomial& p, const LaurentPolynomial& q);

/// d_i = -(minimum exponent of variable i). Throws InvariantViolation on zero.
std::vector<int> denominator_vector(const LaurentPolynomial& p);

}  // namespace tame
