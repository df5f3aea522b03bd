#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "tame/errors.hpp"
#include "tame/repcat.hpp"

using namespace tame;

namespace {

using Obj = IndRigidObject;

const ClusterCategory& category(const std::string& name) {
    static std::map<std::string, std::unique_ptr<ClusterCategory>> cache;
    auto& slot = cache[name];
    if (!slot) {
        Quiver q = name == "A2" ? parse_quiver_text("1 2\n") : builtin_quiver(name);
        slot = std::make_unique<ClusterCategory>(std::move(q), 1);
    }
    return *slot;
}

std::vector<int> hom_fingerprint(const ClusterCategory& cat, const Representation& m) {
    std::vector<int> f;
    const auto& alg = cat.algebra();
    for (int i = 0; i < cat.size(); ++i) {
        f.push_back(static_cast<int>(alg.hom_dim(m, alg.injective(i))));
        f.push_back(static_cast<int>(alg.hom_dim(alg.projective(i), m)));
        f.push_back(static_cast<int>(alg.hom_dim(m, alg.simple(i))));
        f.push_back(static_cast<int>(alg.hom_dim(alg.simple(i), m)));
    }
    return f;
}

}  // namespace

TEST_SUITE("repcat") {

TEST_CASE("projectives of 1 -> 2") {
    const auto& alg = category("A2").algebra();
    const auto p1 = alg.projective(0), p2 = alg.projective(1);
    CHECK(p1.dims == std::vector<int>{1, 1});
    CHECK(p2.dims == std::vector<int>{0, 1});
    CHECK(alg.hom_dim(p2, p1) == 1);
    CHECK(alg.hom_dim(p1, p2) == 0);
    CHECK(alg.hom_dim_intertwiner(p2, p1) == 1);
    CHECK(alg.hom_dim_intertwiner(p1, p2) == 0);
    CHECK(alg.hom_dim(p1, alg.zero()) == 0);
    CHECK(alg.hom_dim(alg.zero(), p1) == 0);
}

TEST_CASE("Ext between simples of 1 -> 2") {
    const auto& alg = category("A2").algebra();
    CHECK(alg.ext1_dim(alg.simple(0), alg.simple(1)) == 1);
    CHECK(alg.ext1_dim(alg.simple(1), alg.simple(0)) == 0);
}

TEST_CASE("projectives have no extensions") {
    std::mt19937_64 rng(4);
    for (const char* name : {"A(2,1)", "D(4)"}) {
        const auto& alg = category(name).algebra();
        for (int rep = 0; rep < 10; ++rep) {
            std::vector<int> dims(alg.size());
            for (auto& d : dims) d = static_cast<int>(rng() % 3);
            const auto n = alg.random(dims, rng);
            for (int i = 0; i < alg.size(); ++i) CHECK(alg.ext1_dim(alg.projective(i), n) == 0);
        }
    }
}

TEST_CASE("translate of the simple at the source of 1 -> 2") {
    const auto& cat = category("A2");
    const auto t = cat.theory().tau(cat.algebra().simple(0));
    REQUIRE(t.has_value());
    CHECK(t->dims == std::vector<int>{0, 1});
    for (int i = 0; i < 2; ++i) CHECK_FALSE(cat.theory().tau(cat.algebra().projective(i)).has_value());
    for (int i = 0; i < 2; ++i) CHECK_FALSE(cat.theory().tau_inv(cat.algebra().injective(i)).has_value());
}

TEST_CASE("tau_inv undoes tau on non-projective bricks") {
    for (const char* name : {"A(2,1)", "A(3,2)", "D(4)"}) {
        const auto& cat = category(name);
        for (const auto& x : cat.enumerate_rigid(2)) {
            if (!x.is_module()) continue;
            const auto& m = cat.module(x);
            const auto t = cat.theory().tau(m);
            if (!t) continue;
            const auto back = cat.theory().tau_inv(*t);
            REQUIRE(back.has_value());
            CHECK(back->dims == m.dims);
            CHECK(hom_fingerprint(cat, *back) == hom_fingerprint(cat, m));
            CHECK(t->dims == cat.quiver().coxeter(m.dims));
        }
    }
}

TEST_CASE("shift on the fundamental domain") {
    for (const char* name : {"A2", "A(2,1)", "D(5)"}) {
        const auto& cat = category(name);
        for (int i = 0; i < cat.size(); ++i) {
            CHECK(cat.shift(Obj::preprojective(i, 0)) == Obj::shifted_projective(i));
            const Obj inj = cat.shift(Obj::shifted_projective(i));
            REQUIRE(inj.is_module());
            CHECK(cat.is_injective(inj));
            CHECK(cat.dim_vector(inj) == cat.algebra().injective(i).dims);
            CHECK(hom_fingerprint(cat, cat.module(inj)) == hom_fingerprint(cat, cat.algebra().injective(i)));
        }
        for (const auto& x : cat.enumerate_rigid(3)) {
            CHECK(cat.unshift(cat.shift(x)) == x);
            CHECK(cat.shift(cat.unshift(x)) == x);
        }
    }
}

TEST_CASE("cluster homs from the fundamental domain") {
    const auto& cat = category("A(2,1)");
    for (int i = 0; i < cat.size(); ++i) CHECK(cat.hom_dim_C(Obj::preprojective(i, 0), Obj::shifted_projective(i)) == 0);
    const auto& c32 = category("A(3,2)");
    REQUIRE(c32.tube_rank(0) == 3);
    CHECK(c32.hom_dim_C(Obj::regular(0, 1, 1), Obj::regular(0, 1, 2)) == 2);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int a2 = 1; a2 <= 2; ++a2) {
                CHECK(c32.hom_dim_C(Obj::regular(0, a, b), Obj::regular(1, a2, 1)) == 0);
                CHECK(c32.hom_dim_C(Obj::regular(1, a2, 1), Obj::regular(0, a, b)) == 0);
            }
}

TEST_CASE("tubes of the small affine quivers") {
    const auto& a21 = category("A(2,1)");
    REQUIRE(a21.tubes().size() == 1);
    CHECK(a21.tubes()[0].rank == 2);
    const auto& d4 = category("D(4)");
    REQUIRE(d4.tubes().size() == 3);
    for (const auto& t : d4.tubes()) {
        CHECK(t.rank == 2);
        std::vector<int> sum(5, 0);
        for (const auto& r : t.quasi_simples)
            for (int i = 0; i < 5; ++i) sum[i] += r.dims[i];
        CHECK(sum == std::vector<int>{2, 1, 1, 1, 1});
    }
    const auto& a2 = category("A2");
    CHECK(a2.tubes().empty());
    CHECK_FALSE(a2.is_affine());
    CHECK_THROWS_AS(a2.profile(), NotExtendedDynkin);
}

TEST_CASE("tube invariants across the catalogue") {
    for (const char* name : {"A(3,2)", "D(5)", "D(6)", "E6", "E7", "E8"}) {
        CAPTURE(name);
        const auto& cat = category(name);
        std::vector<int> ranks;
        const auto& alg = cat.algebra();
        for (const auto& t : cat.tubes()) {
            ranks.push_back(t.rank);
            std::vector<int> sum(cat.size(), 0);
            for (int i = 0; i < t.rank; ++i) {
                const auto& r = t.quasi_simples[i];
                for (int v = 0; v < cat.size(); ++v) sum[v] += r.dims[v];
                CHECK(alg.hom_dim(r, r) == 1);
                const auto tr = cat.theory().tau(r);
                REQUIRE(tr.has_value());
                const auto& prev = t.quasi_simples[(i + t.rank - 1) % t.rank];
                CHECK(tr->dims == prev.dims);
                CHECK(alg.hom_dim(*tr, prev) == 1);
            }
            CHECK(sum == cat.profile().delta);
        }
        CHECK(ranks == cat.profile().ranks);
    }
}

TEST_CASE("quasi-simple roots") {
    const auto q = builtin_quiver("D(4)");
    const auto roots = quasi_simple_roots(q, affine_profile(q));
    CHECK(roots.size() == 6);
    for (const auto& r : roots) {
        CHECK(affine_profile(q).defect(r) == 0);
        CHECK(q.euler(r, r) == 1);
    }
}

TEST_CASE("enumerated inventory") {
    const auto& a21 = category("A(2,1)");
    std::vector<Obj> regular;
    for (const auto& x : a21.enumerate_rigid(4))
        if (x.is_regular()) regular.push_back(x);
    CHECK(regular == std::vector<Obj>{Obj::regular(0, 1, 1), Obj::regular(0, 2, 1)});

    for (const char* name : {"A(2,1)", "A(3,2)", "D(4)", "E6"}) {
        CAPTURE(name);
        const auto& cat = category(name);
        const auto inv = cat.enumerate_rigid(3);
        CHECK(std::is_sorted(inv.begin(), inv.end()));
        std::set<std::vector<int>> dims;
        for (const auto& x : inv) {
            CHECK(cat.ext1_dim_C(x, x) == 0);
            if (!x.is_module()) continue;
            CHECK(cat.hom_dim_mod(x, x) == 1);
            CHECK(cat.ext1_dim_mod(x, x) == 0);
            CHECK(dims.insert(cat.dim_vector(x)).second);
            const int def = cat.profile().defect(cat.dim_vector(x));
            if (x.kind == ObjectKind::Preprojective) CHECK(def < 0);
            if (x.kind == ObjectKind::Preinjective) CHECK(def > 0);
            if (x.is_regular()) CHECK(def == 0);
        }
    }
}

TEST_CASE("window zero inventory") {
    const auto& cat = category("D(4)");
    const auto inv = cat.enumerate_rigid(0);
    int sp = 0, pp = 0, pi = 0, reg = 0;
    for (const auto& x : inv) {
        if (x.kind == ObjectKind::ShiftedProjective) ++sp;
        if (x.kind == ObjectKind::Preprojective || x.kind == ObjectKind::Preinjective) CHECK(x.power == 0);
        if (x.kind == ObjectKind::Preprojective) ++pp;
        if (x.kind == ObjectKind::Preinjective) ++pi;
        if (x.is_regular()) ++reg;
    }
    CHECK(sp == 5);
    CHECK(pp == 5);
    CHECK(pi == 5);
    CHECK(reg == 6);
}

TEST_CASE("Dynkin inventory is complete") {
    const auto& cat = category("A2");
    const auto inv = cat.enumerate_rigid(0);
    CHECK(inv.size() == 5);
    CHECK(cat.enumerate_rigid(7) == inv);
    const auto a3 = ClusterCategory(parse_quiver_text("1 2\n3 2\n"), 1);
    CHECK(a3.enumerate_rigid(0).size() == 9);
    const auto d4 = ClusterCategory(parse_quiver_text("1 2\n3 2\n4 2\n"), 1);
    CHECK(d4.enumerate_rigid(0).size() == 16);
}

TEST_CASE("quasi-length d objects are not rigid") {
    for (const char* name : {"A(2,1)", "A(3,2)"}) {
        const auto& cat = category(name);
        for (const auto& t : cat.tubes())
            for (int a = 1; a <= t.rank; ++a) {
                const auto x = Obj::regular(t.id, a, t.rank);
                CHECK(cat.ext1_dim_mod(x, x) > 0);
                CHECK(cat.ext1_dim_C(x, x) > 0);
            }
    }
}

TEST_CASE("2-Calabi-Yau symmetry") {
    for (const char* name : {"A(2,1)", "A(3,2)", "D(4)"}) {
        const auto& cat = category(name);
        const auto inv = cat.enumerate_rigid(3);
        for (const auto& x : inv)
            for (const auto& y : inv) CHECK(cat.ext1_dim_C(x, y) == cat.ext1_dim_C(y, x));
    }
}

TEST_CASE("presentation and intertwiner Hom agree") {
    for (const char* name : {"A(2,1)", "D(4)", "A(3,2)"}) {
        const auto& cat = category(name);
        const auto inv = cat.enumerate_rigid(2);
        const auto& alg = cat.algebra();
        for (const auto& x : inv) {
            if (!x.is_module()) continue;
            for (const auto& y : inv) {
                if (!y.is_module()) continue;
                CHECK(alg.hom_dim(cat.module(x), cat.module(y)) == alg.hom_dim_intertwiner(cat.module(x), cat.module(y)));
            }
        }
    }
}

TEST_CASE("Ext agrees with the Euler form") {
    std::mt19937_64 rng(8);
    const auto& cat = category("A(2,1)");
    const auto& alg = cat.algebra();
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<int> d1(3), d2(3);
        for (auto& d : d1) d = static_cast<int>(rng() % 3);
        for (auto& d : d2) d = static_cast<int>(rng() % 3);
        const auto m = alg.random(d1, rng), n = alg.random(d2, rng);
        CHECK(static_cast<std::int64_t>(alg.hom_dim(m, n)) - static_cast<std::int64_t>(alg.ext1_dim(m, n)) ==
              cat.quiver().euler(d1, d2));
    }
}

TEST_CASE("object labels") {
    CHECK(Obj::shifted_projective(0).label() == "P1[1]");
    CHECK(Obj::preprojective(0, 0).label() == "P1");
    CHECK(Obj::preprojective(1, 2).label() == "tau^-2 P2");
    CHECK(Obj::preprojective(1, 1).label() == "tau^-1 P2");
    CHECK(Obj::preinjective(0, 0).label() == "I1");
    CHECK(Obj::preinjective(2, 1).label() == "tau I3");
    CHECK(Obj::preinjective(0, 2).label() == "tau^2 I1");
    CHECK(Obj::regular(0, 1, 2).label() == "T0(1,2)");
}

}  // TEST_SUITE
