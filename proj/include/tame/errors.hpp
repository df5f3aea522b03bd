#pragma once

#include <stdexcept>
#include <string>

namespace tame {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

/// Malformed user input (quiver files, builtin names, mutation words).
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// The quiver is not a connected acyclic extended Dynkin quiver.
class NotExtendedDynkin : public Error {
public:
    using Error::Error;
};

/// Laurent division that does not come out exact.
class InexactDivision : public Error {
public:
    using Error::Error;
};

/// No complement found among the enumerated objects; enlarge the window.
class WindowExhausted : public Error {
public:
    using Error::Error;
};

class AmbiguousComplement : public Error {
public:
    using Error::Error;
};

class MIsShiftedSummand : public Error {
public:
    using Error::Error;
};

/// Subfactor at a regular object of quasi-length rank - 1.
class UncoveredCase : public Error {
public:
    using Error::Error;
};

/// A mathematical invariant failed to hold. Always a bug or a counterexample.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace tame
