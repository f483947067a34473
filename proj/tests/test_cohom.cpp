#include <doctest.h>

#include "reflex/cohom.hpp"
#include "reflex/fan.hpp"
#include "reflex/tri.hpp"

using namespace reflex;

namespace {

Relation rel(std::vector<long> v) {
    Relation r;
    for (long x : v) r.emplace_back(x);
    return r;
}

CohomRing p1_ring() { return CohomRing(fan_from_triangulation(appendix_triangulation(1))); }

}  // namespace

TEST_CASE("graded dimensions") {
    CohomRing r1 = p1_ring();
    CHECK(r1.graded_dims() == std::vector<size_t>{1, 1});

    CohomRing rp2(coarse_fan(dual_polytope(pn_polytope(2))));
    CHECK(rp2.graded_dims() == std::vector<size_t>{1, 1, 1});

    CohomRing r2(fan_from_triangulation(appendix_triangulation(2)));
    CHECK(r2.graded_dims() == std::vector<size_t>{1, 7, 1});
    CHECK(r2.total_dim() == 9);
}

TEST_CASE("non-smooth fan rejected") {
    CHECK_THROWS(CohomRing(coarse_fan(pn_polytope(2))));
}

TEST_CASE("brute-force quotient agrees") {
    Fan f1 = fan_from_triangulation(appendix_triangulation(1));
    CHECK(brute_force_graded_dims(f1, 1) == std::vector<size_t>{1, 1});

    Fan fp2 = coarse_fan(dual_polytope(pn_polytope(2)));
    CHECK(brute_force_graded_dims(fp2, 2) == std::vector<size_t>{1, 1, 1});

    Fan f2 = fan_from_triangulation(appendix_triangulation(2));
    CHECK(brute_force_graded_dims(f2, 2) == std::vector<size_t>{1, 7, 1});
}

TEST_CASE("cup with divisors on P^1") {
    CohomRing r = p1_ring();
    RingClass one = r.one();
    RingClass h = r.cup_divisor(one, 1);
    CHECK_FALSE(h.is_zero());
    CHECK(r.cup_divisor(h, 1).is_zero());  // H^2 = 0
    // D_1 and D_2 are linearly equivalent
    CHECK(r.cup_divisor(one, 2) == h);
    // D_0 . 1 = -2H
    RingClass d0 = r.cup_divisor(one, 0);
    RingClass m2h = Rat(-2) * h;
    CHECK(d0 == m2h);
}

TEST_CASE("Stanley-Reisner vanishing") {
    Triangulation t = appendix_triangulation(2);
    Fan f = fan_from_triangulation(t);
    CohomRing r(f);
    for (const auto& col : primitive_collections(f)) {
        RingClass x = r.one();
        for (size_t ray : col) x = r.cup_divisor(x, ray + 1);
        CHECK(x.is_zero());
    }
}

TEST_CASE("divisor multiplications commute") {
    Triangulation t = appendix_triangulation(2);
    CohomRing r(fan_from_triangulation(t));
    for (size_t i = 1; i <= 3; ++i)
        for (size_t j = i + 1; j <= 4; ++j) {
            RingClass a = r.cup_divisor(r.cup_divisor(r.one(), i), j);
            RingClass b = r.cup_divisor(r.cup_divisor(r.one(), j), i);
            CHECK(a == b);
        }
}

TEST_CASE("anticanonical cup ranks") {
    CupRank r1 = anticanonical_cup_rank(p1_ring());
    CHECK(r1.total == 1);
    CHECK(r1.per_degree == std::vector<size_t>{1, 0});

    CupRank r2 = anticanonical_cup_rank(CohomRing(fan_from_triangulation(appendix_triangulation(2))));
    CHECK(r2.total == 2);
    CHECK(r2.per_degree == std::vector<size_t>{1, 1, 0});
}

TEST_CASE("sparse route agrees with the materialized ring") {
    for (unsigned n = 1; n <= 3; ++n) {
        Fan f = fan_from_triangulation(appendix_triangulation(n));
        CupRank a = anticanonical_cup_rank(CohomRing(f));
        CupRank b = anticanonical_cup_rank_sparse(f);
        CHECK(a.total == b.total);
        CHECK(a.per_degree == b.per_degree);
    }
}

TEST_CASE("o_ell on P^1") {
    CohomRing r = p1_ring();
    // ell = 0 -> 1
    CHECK(o_ell(r, rel({0, 0, 0})) == r.one());
    // ell = (-2,1,1) -> 2 + 2H
    RingClass x = o_ell(r, rel({-2, 1, 1}));
    RingClass h = r.cup_divisor(r.one(), 1);
    RingClass expect = Rat(2) * r.one();
    expect += Rat(2) * h;
    CHECK(x == expect);
    CHECK_THROWS(o_ell(r, rel({1, -1, 0})));
}

TEST_CASE("o_ell divisibility for negative entries") {
    // ell_i < 0 (i >= 1) puts a D_i factor in the numerator, so cupping the
    // result against the complementary top-degree class detects it; here we
    // just check the class lies in the image of D_i.
    Triangulation t = appendix_triangulation(2);
    CohomRing r(fan_from_triangulation(t));
    Fan f = fan_from_triangulation(t);
    MoriCone mc = build_mori_cone(t.points, f, t);
    // find a generator with a negative entry at i >= 1
    for (const auto& g : mc.generators) {
        for (size_t i = 1; i < g.size(); ++i) {
            if (g[i] >= 0) continue;
            RingClass x = o_ell(r, g);
            // strip one D_i: x == D_i . y for y = o_ell with entry bumped
            Relation g2 = g;
            g2[i] += 1;
            RingClass y = o_ell(r, g2);
            // o_ell(g) = o_ell(g2 with last factor (D_i + g2_i...)) ... the
            // falling factorial ends at D_i + ell_i + 1, so
            // o_ell(g) = o_ell(g2) * (D_i + g[i] + 1).
            RingClass z = r.cup_divisor(y, i);
            z += Rat(Int(g[i] + 1)) * y;
            CHECK(x == z);
        }
    }
}

TEST_CASE("shift identity O_ell (D_i + ell_i) = O_{ell - e_i} on P^1") {
    // For i = 0 the series prefactor 1/a_0 shows up as an extra -1 in the
    // shift: O_ell (D_0 + ell_0 - 1) = O_{ell - e_0}.
    CohomRing r = p1_ring();
    std::vector<Relation> ells = {rel({0, 0, 0}), rel({-2, 1, 1}), rel({-4, 2, 2})};
    for (const auto& ell : ells)
        for (size_t i = 0; i < 3; ++i) {
            Rat shift = Rat(ell[i]) - (i == 0 ? 1 : 0);
            RingClass lhs = r.cup_divisor(o_ell(r, ell), i);
            lhs += shift * o_ell(r, ell);
            Relation em = ell;
            em[i] -= 1;
            CHECK(lhs == o_ell(r, em));
        }
}

TEST_CASE("brute-force quotient validates the orbit basis at n=3") {
    Fan f = fan_from_triangulation(appendix_triangulation(3));
    CHECK(brute_force_graded_dims(f, 3) == std::vector<size_t>{1, 31, 31, 1});
    CHECK(CohomRing(f).graded_dims() == std::vector<size_t>{1, 31, 31, 1});
}
