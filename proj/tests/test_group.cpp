#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "frobtsct/group.hpp"
#include "frobtsct/numtheory.hpp"

using namespace frobtsct;

TEST_CASE("spec validation accepts the covered families") {
    FrobSpec s = validate_spec(3, 8, Fusion::Maximal);
    CHECK(s.d == 2);
    CHECK(s.e == 1);
    CHECK(s.order() == 72);
    CHECK(s.num_vertices() == 3);

    FrobSpec t = validate_spec(5, 4, Fusion::Minimal);
    CHECK(t.a == 1);
    CHECK(t.order() == 100);
    CHECK(t.num_vertices() == 8);

    CHECK(validate_spec(5, 24, Fusion::Maximal).d == 4);
    CHECK(validate_spec(7, 16, Fusion::Maximal).e == 3);
    CHECK(validate_spec(7, 3, Fusion::Minimal).num_vertices() == 10);
}

TEST_CASE("spec validation names the violated condition") {
    CHECK_THROWS_WITH_AS(validate_spec(4, 3, Fusion::Minimal),
                         doctest::Contains("p must be an odd prime"), std::invalid_argument);
    CHECK_THROWS_AS(validate_spec(9, 8, Fusion::Maximal), std::invalid_argument);
    CHECK_THROWS_AS(validate_spec(3, 1, Fusion::Minimal), std::invalid_argument);
    // 3 != (5+1) * gcd(4, 3)
    CHECK_THROWS_AS(validate_spec(5, 3, Fusion::Maximal), std::invalid_argument);
    // 3 does not divide 5 - 1
    CHECK_THROWS_AS(validate_spec(5, 3, Fusion::Minimal), std::invalid_argument);
}

TEST_CASE("every valid spec up to order 2000") {
    auto specs = all_valid_specs(2000);
    CHECK(specs.size() == 23);
    int maximal = 0;
    for (const auto& s : specs) {
        CHECK(s.order() <= 2000);
        CHECK((s.p * s.p - 1) % s.m == 0); // m divides |F| - 1
        if (s.fusion == Fusion::Maximal) ++maximal;
    }
    CHECK(maximal == 3); // (3,8), (5,24), (7,16)
}

TEST_CASE("deterministic action for (3,8)") {
    Group g = Group::build(validate_spec(3, 8, Fusion::Maximal));
    // F_9 = F_3[t]/(t^2-2), generator 1+t: alpha(f1,f2) = (f1+2f2, f1+f2)
    CHECK(g.alpha_pow(1) == std::array<long, 4>{1, 2, 1, 1});
    CHECK(g.alpha_pow(0) == std::array<long, 4>{1, 0, 0, 1});
    CHECK(g.alpha_pow(4) == std::array<long, 4>{2, 0, 0, 2}); // (1+t)^4 = 2
    CHECK(g.act(1, {1, 0}) == std::array<long, 2>{1, 1});
}

TEST_CASE("group law") {
    for (auto spec : {validate_spec(3, 8, Fusion::Maximal), validate_spec(5, 4, Fusion::Minimal)}) {
        Group g = Group::build(spec);
        Elt e{0, 0, 0};
        CHECK(g.mul(e, e) == e);
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<long> pick(0, g.order() - 1);
        for (int iter = 0; iter < 200; ++iter) {
            Elt a = g.elt(pick(rng)), b = g.elt(pick(rng)), c = g.elt(pick(rng));
            CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
            CHECK(g.mul(a, g.inv(a)) == e);
            CHECK(g.mul(g.inv(a), a) == e);
        }
        CHECK(g.id(g.elt(17)) == 17);
    }
}

TEST_CASE("element orders") {
    Group g = Group::build(validate_spec(3, 8, Fusion::Maximal));
    CHECK(g.elt_order({0, 0, 0}) == 1);
    CHECK(g.elt_order({0, 0, 1}) == 8); // h
    CHECK(g.elt_order({0, 0, 4}) == 2); // h^4
    CHECK(g.elt_order({1, 0, 0}) == 3); // x
    CHECK(g.elt_order({1, 2, 0}) == 3);
}

TEST_CASE("conjugacy classes of (3,8)") {
    Group g = Group::build(validate_spec(3, 8, Fusion::Maximal));
    auto closed = g.classes_closed();
    auto brute = g.classes_brute();
    REQUIRE(closed.size() == 9);
    REQUIRE(brute.size() == 9);
    long total = 0;
    for (size_t i = 0; i < closed.size(); ++i) {
        CHECK(closed[i].rep == brute[i].rep);
        CHECK(closed[i].size == brute[i].size);
        CHECK(closed[i].elem_ids == brute[i].elem_ids);
        total += closed[i].size;
    }
    CHECK(total == 72);
    CHECK(closed[0].rep == Elt{0, 0, 0});
    CHECK(closed[0].size == 1);
    // the class of h has size |G : C_G(h)| = |G : H| = 9
    for (const auto& c : closed)
        if (c.rep == Elt{0, 0, 1}) CHECK(c.size == 9);
}

TEST_CASE("conjugacy classes of (5,4)") {
    Group g = Group::build(validate_spec(5, 4, Fusion::Minimal));
    auto classes = g.classes_closed();
    REQUIRE(classes.size() == 10);
    int in_f = 0;
    for (const auto& c : classes)
        if (c.rep.j == 0 && !(c.rep == Elt{0, 0, 0})) {
            CHECK(c.size == 4);
            ++in_f;
        }
    CHECK(in_f == 6);
    auto brute = g.classes_brute();
    REQUIRE(brute.size() == 10);
    for (size_t i = 0; i < classes.size(); ++i) CHECK(classes[i].elem_ids == brute[i].elem_ids);
}

TEST_CASE("order-p subgroups and vertices") {
    Group g = Group::build(validate_spec(3, 8, Fusion::Maximal));
    auto lines = g.order_p_subgroups();
    CHECK(lines.size() == 4); // p + 1
    for (const auto& line : lines) {
        CHECK(line.size() == 3);
        // closed under multiplication
        for (long a : line)
            for (long b : line) {
                long prod = g.id(g.mul(g.elt(a), g.elt(b)));
                CHECK(std::find(line.begin(), line.end(), prod) != line.end());
            }
    }
    CHECK(g.vertex_subgroup(1) == std::vector<long>{0});
    CHECK(g.vertex_order(1) == 1);
    CHECK(g.vertex_order(2) == 3);
    CHECK(g.vertex_order(3) == 9);
    CHECK(g.vertex_subgroup(3).size() == 9);
}

TEST_CASE("normalizers, closed form vs brute force") {
    Group g = Group::build(validate_spec(3, 8, Fusion::Maximal));
    CHECK(g.normalizer(g.vertex_subgroup(2)).size() == 18);
    CHECK(g.normalizer_order_closed(2) == 18);
    CHECK(g.normalizer_order_closed(1) == 72);
    CHECK(g.normalizer_order_closed(3) == 72);

    Group h = Group::build(validate_spec(5, 4, Fusion::Minimal));
    for (int v = 1; v <= 8; ++v) {
        CHECK(h.normalizer_order_closed(v) == 100);
        CHECK(h.normalizer(h.vertex_subgroup(v)).size() == 100);
    }
}

TEST_CASE("p-regular class representatives") {
    Group g = Group::build(validate_spec(3, 8, Fusion::Maximal));
    auto reps = g.p_regular_representatives();
    REQUIRE(reps.size() == 8);
    for (long j = 0; j < 8; ++j) CHECK(reps[j] == Elt{0, 0, j});

    Group t = Group::build(validate_spec(3, 2, Fusion::Minimal));
    auto reps2 = t.p_regular_representatives();
    REQUIRE(reps2.size() == 2);
    CHECK(reps2[0] == Elt{0, 0, 0});
    CHECK(reps2[1] == Elt{0, 0, 1});
}

TEST_CASE("the action is fixed-point-free away from the identity") {
    for (auto spec : {validate_spec(5, 4, Fusion::Minimal), validate_spec(3, 8, Fusion::Maximal)}) {
        Group g = Group::build(spec);
        for (long j = 1; j < g.m(); ++j)
            for (long f1 = 0; f1 < g.p(); ++f1)
                for (long f2 = 0; f2 < g.p(); ++f2) {
                    if (f1 == 0 && f2 == 0) continue;
                    CHECK(g.act(j, {f1, f2}) != std::array<long, 2>{f1, f2});
                }
    }
}

TEST_CASE("commutator subgroup equals the kernel F") {
    Group g = Group::build(validate_spec(3, 8, Fusion::Maximal));
    std::vector<long> f_ids(9);
    for (long i = 0; i < 9; ++i) f_ids[i] = i;
    CHECK(g.commutator_set() == f_ids);
}

TEST_CASE("kernel orbits partition F minus the identity") {
    Group g = Group::build(validate_spec(5, 4, Fusion::Minimal));
    auto orbits = g.kernel_orbits();
    CHECK(orbits.size() == 6); // (p^2 - 1) / m
    std::set<long> seen;
    for (const auto& orb : orbits) {
        CHECK(orb.size() == 4);
        for (long id : orb) {
            CHECK(g.elt(id).j == 0);
            CHECK(seen.insert(id).second);
        }
    }
    CHECK(seen.size() == 24);
}
