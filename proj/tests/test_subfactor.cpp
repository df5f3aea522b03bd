#include <doctest.h>

#include <map>
#include <set>

#include "tame/errors.hpp"
#include "tame/subfactor.hpp"

using namespace tame;

namespace {

using Obj = IndRigidObject;

const ClusterCategory& category(const std::string& name) {
    static std::map<std::string, std::unique_ptr<ClusterCategory>> cache;
    auto& slot = cache[name];
    if (!slot) slot = std::make_unique<ClusterCategory>(builtin_quiver(name), 1);
    return *slot;
}

std::set<std::pair<int, int>> pairs(const std::vector<TubeCoord>& xs) {
    std::set<std::pair<int, int>> out;
    for (const auto& x : xs) out.emplace(x.a, x.b);
    return out;
}

}  // namespace

TEST_SUITE("subfactor") {

TEST_CASE("deleting a shifted projective removes the objects P_i maps to") {
    const auto& cat = category("A(2,1)");
    for (int i = 0; i < cat.size(); ++i) {
        const Obj z = Obj::shifted_projective(i);
        const auto inv = perp_inventory(cat, z, 8);
        const std::set<Obj> in(inv.begin(), inv.end());
        for (const auto& x : cat.enumerate_rigid(8)) {
            if (x == z) continue;
            CHECK(in.count(x) == (cat.hom_dim_C(Obj::preprojective(i, 0), x) == 0 ? 1u : 0u));
        }
        CHECK_FALSE(in.count(Obj::preprojective(i, 0)));
        CHECK(inv.size() == 5);
    }
}

TEST_CASE("quasi-simple deletion in a rank 3 tube") {
    const auto& cat = category("A(3,2)");
    REQUIRE(cat.tube_rank(0) == 3);
    const auto inv = perp_inventory(cat, Obj::regular(0, 1, 1), 4);
    const std::set<Obj> in(inv.begin(), inv.end());
    CHECK_FALSE(in.count(Obj::regular(0, 2, 1)));
    for (const auto& x : inv) CHECK(cat.hom_dim_C(x, cat.shift(Obj::regular(0, 1, 1))) == 0);
}

TEST_CASE("transjective deletion stabilizes") {
    const auto& cat = category("A(2,1)");
    for (int i = 0; i < cat.size(); ++i) {
        const Obj z = Obj::preprojective(i, 1);
        CHECK(perp_inventory(cat, z, 6) == perp_inventory(cat, z, 12));
    }
}

TEST_CASE("tube split for d = 3, t = 1") {
    const auto s = tube_split_prediction({0, 1, 1}, 3);
    CHECK(s.wing.empty());
    CHECK(pairs(s.reduced) == std::set<std::pair<int, int>>{{1, 1}, {1, 2}, {3, 2}});
    for (const auto& x : s.reduced) {
        CHECK_FALSE(in_coray(x, {0, 3, 1}, 3));
        CHECK_FALSE(in_ray(x, {0, 2, 1}, 3));
    }
    CHECK(s.relabeled.size() == 2);
    for (const auto& [x, ql] : s.relabeled) CHECK(ql == 1);
}

TEST_CASE("tube split for d = 3, t = 2") {
    const auto s = tube_split_prediction({0, 1, 2}, 3);
    CHECK(pairs(s.wing) == std::set<std::pair<int, int>>{{1, 1}, {2, 1}});
    CHECK(s.suspension.size() == 1);
    CHECK(s.suspension[0].first == TubeCoord{0, 1, 1});
    CHECK(s.suspension[0].second == TubeCoord{0, 2, 1});
}

TEST_CASE("rotated tube splits agree with the perpendicular inventory") {
    for (const char* name : {"A(3,2)", "A(4,1)", "D(6)"}) {
        const auto& cat = category(name);
        for (const auto& tube : cat.tubes())
            for (int b = 1; b + 1 < tube.rank; ++b)
                for (int a = 1; a <= tube.rank; ++a) {
                    const Obj z = Obj::regular(tube.id, a, b);
                    const auto s = tube_split_prediction(z.coord, tube.rank);
                    const int d = tube.rank;
                    CHECK(static_cast<int>(s.reduced.size()) - 1 == (d - b) * (d - b - 1));
                    CHECK(static_cast<int>(s.wing.size()) == b * (b + 1) / 2 - 1);
                    std::set<TubeCoord> predicted(s.wing.begin(), s.wing.end());
                    for (const auto& x : s.reduced)
                        if (!(x == z.coord)) predicted.insert(x);
                    std::set<TubeCoord> observed;
                    for (const auto& x : perp_inventory(cat, z, 1))
                        if (x.is_regular() && x.coord.tube == tube.id) observed.insert(x.coord);
                    CHECK(observed == predicted);
                }
    }
}

TEST_CASE("other tubes survive untouched") {
    const auto& cat = category("D(5)");
    REQUIRE(cat.tubes().size() == 3);
    const Obj z = Obj::regular(0, 1, 1);
    const auto inv = perp_inventory(cat, z, 2);
    const std::set<Obj> in(inv.begin(), inv.end());
    for (const auto& x : cat.enumerate_rigid(2))
        if (x.is_regular() && x.coord.tube != 0) CHECK(in.count(x));
}

TEST_CASE("classification: quasi-simple in the rank 3 tube of A(3,2)") {
    const auto& cat = category("A(3,2)");
    const auto rep = classify_subfactor(cat, Obj::regular(0, 1, 1), 4);
    CHECK(rep.rank_pattern == std::vector<int>{2, 2});
    CHECK(rep.wing.empty());
    CHECK_FALSE(rep.finite_type);
    CHECK(rep.passed());
    for (const auto& c : rep.checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.pass);
    }
    for (const auto& x : rep.inventory) CHECK(cat.hom_dim_C(x, cat.shift(rep.deleted)) == 0);
}

TEST_CASE("classification: transjective deletion gives finite type") {
    const auto& cat = category("A(2,1)");
    for (int i = 0; i < cat.size(); ++i) {
        const auto rep = classify_subfactor(cat, Obj::preprojective(i, 0), 5);
        CHECK(rep.finite_type);
        CHECK(rep.passed());
        CHECK(rep.inventory.size() == 5);
    }
    CHECK(vertex_deletion_count(builtin_quiver("D(4)"), 0) == 8);
    CHECK(vertex_deletion_count(builtin_quiver("D(4)"), 1) == 16);
}

TEST_CASE("classification: quasi-length d-1 is uncovered") {
    const auto& cat = category("D(4)");
    CHECK_THROWS_AS(classify_subfactor(cat, Obj::regular(0, 1, 1), 2), UncoveredCase);
    const auto& a32 = category("A(3,2)");
    CHECK_THROWS_AS(classify_subfactor(a32, Obj::regular(0, 2, 2), 2), UncoveredCase);
    CHECK_THROWS_AS(classify_subfactor(a32, Obj::regular(1, 1, 1), 2), UncoveredCase);
}

TEST_CASE("classification over larger tubes") {
    const auto& cat = category("A(4,1)");
    REQUIRE(cat.tube_rank(0) == 4);
    for (int b = 1; b <= 2; ++b) {
        const auto rep = classify_subfactor(cat, Obj::regular(0, 2, b), 2);
        CHECK(rep.passed());
        if (b == 1) CHECK(rep.rank_pattern == std::vector<int>{3});
        if (b == 2) CHECK(rep.rank_pattern == std::vector<int>{2});
    }
}

}  // TEST_SUITE
