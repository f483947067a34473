#include <doctest.h>

#include <random>
#include <set>

#include "reflex/fan.hpp"
#include "reflex/gkz.hpp"
#include "reflex/geom.hpp"
#include "reflex/tri.hpp"

using namespace reflex;

namespace {

LatticeVec vec(std::vector<long> v) {
    LatticeVec r;
    for (long x : v) r.emplace_back(x);
    return r;
}

Relation rel(std::vector<long> v) { return vec(std::move(v)); }

}  // namespace

TEST_CASE("relation lattice basis") {
    // P^1: points 0, -1, 1 in indexed order.
    auto basis = relation_lattice_basis(indexed_points(pn_polytope(1)));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == rel({-2, 1, 1}));

    auto basis2 = relation_lattice_basis(indexed_points(pn_polytope(2)));
    CHECK(basis2.size() == 7);  // p - n = 10 - 1 - 2

    CHECK_THROWS(relation_lattice_basis({vec({0, 0}), vec({1, 0}), vec({2, 0})}));
}

TEST_CASE("fan from triangulation") {
    Triangulation t1 = appendix_triangulation(1);
    Fan f1 = fan_from_triangulation(t1);
    CHECK(f1.rays == std::vector<LatticeVec>{vec({-1}), vec({1})});
    CHECK(f1.max_cones.size() == 2);
    CHECK(is_smooth(f1));
    CHECK(is_complete_check(f1));

    Triangulation t2 = appendix_triangulation(2);
    Fan f2 = fan_from_triangulation(t2);
    CHECK(f2.rays.size() == 9);
    CHECK(f2.max_cones.size() == 9);
    CHECK(is_smooth(f2));
}

TEST_CASE("coarse fan cone counts") {
    Fan f2 = coarse_fan(pn_polytope(2));
    auto cones2 = cones_by_dimension(f2);
    CHECK(cones2[0].size() == 1);
    CHECK(cones2[1].size() == 3);
    CHECK(cones2[2].size() == 3);

    Fan f3 = coarse_fan(pn_polytope(3));
    auto cones3 = cones_by_dimension(f3);
    CHECK(cones3[1].size() == 4);
    CHECK(cones3[2].size() == 6);
    CHECK(cones3[3].size() == 4);

    Fan fp = coarse_fan(dual_polytope(pn_polytope(3)));
    CHECK(fp.rays.size() == 4);
    CHECK(is_smooth(fp));
    CHECK_THROWS(coarse_fan(pn_polytope(2).dilate(2)));
}

TEST_CASE("primitive collections") {
    // Fan of P^1: the two rays form the only collection.
    Fan f1 = fan_from_triangulation(appendix_triangulation(1));
    auto c1 = primitive_collections(f1);
    CHECK(c1 == std::vector<std::vector<size_t>>{{0, 1}});

    // Fan of P^n: all n+1 rays.
    Fan fp = coarse_fan(dual_polytope(pn_polytope(2)));
    auto cp = primitive_collections(fp);
    CHECK(cp == std::vector<std::vector<size_t>>{{0, 1, 2}});

    // P^1 x P^1: two opposite ray pairs.
    Fan fq;
    fq.rays = {vec({-1, 0}), vec({0, -1}), vec({0, 1}), vec({1, 0})};
    fq.max_cones = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    fq.complete = true;
    auto cq = primitive_collections(fq);
    CHECK(cq == std::vector<std::vector<size_t>>{{0, 3}, {1, 2}});

    // 2-dimensional smooth complete fan with r rays has r(r-1)/2 - r
    // non-adjacent pairs as collections.
    Fan f2 = fan_from_triangulation(appendix_triangulation(2));
    CHECK(primitive_collections(f2).size() == 27);
    CHECK(sr_generators(f2).size() == 27);
}

TEST_CASE("primitive relations") {
    Triangulation t1 = appendix_triangulation(1);
    CHECK(primitive_relation(t1, {1, 2}) == rel({-2, 1, 1}));

    // Triangulated P^2 polytope: opposite boundary points sum to the origin.
    Triangulation t2 = appendix_triangulation(2);
    // locate points (1,-1) and (-1,1)
    size_t a = SIZE_MAX, b = SIZE_MAX;
    for (size_t i = 0; i < t2.points.size(); ++i) {
        if (t2.points[i] == vec({1, -1})) a = i;
        if (t2.points[i] == vec({-1, 1})) b = i;
    }
    REQUIRE(a != SIZE_MAX);
    REQUIRE(b != SIZE_MAX);
    Relation r = primitive_relation(t2, {a, b});
    CHECK(r[0] == -2);
    CHECK(r[a] == 1);
    CHECK(r[b] == 1);
    Int nonzero = 0;
    for (const Int& x : r) nonzero += (x != 0);
    CHECK(nonzero == 3);

    // Coarse fan of P^2 via the dual polytope triangulation: all three rays.
    Polytope dp = dual_polytope(pn_polytope(2));
    Triangulation dt;
    dt.points = indexed_points(dp);
    dt.maximal = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}};
    Relation rp = primitive_relation(dt, {1, 2, 3});
    CHECK(rp == rel({-3, 1, 1, 1}));
}

TEST_CASE("mori generators") {
    Triangulation t1 = appendix_triangulation(1);
    Fan f1 = fan_from_triangulation(t1);
    CHECK(mori_generators(f1, t1) == std::vector<Relation>{rel({-2, 1, 1})});

    Triangulation t2 = appendix_triangulation(2);
    Fan f2 = fan_from_triangulation(t2);
    auto gens = mori_generators(f2, t2);
    CHECK(gens.size() >= 9);
    for (const auto& g : gens) CHECK(g[0] <= 0);
}

TEST_CASE("cone_dualize on known cones") {
    std::vector<std::vector<Rat>> quad = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    CHECK(cone_dualize(quad) == std::vector<std::vector<Int>>{{0, 1}, {1, 0}});
    std::vector<std::vector<Rat>> c = {{Rat(1), Rat(0)}, {Rat(1), Rat(2)}};
    CHECK(cone_dualize(c) == std::vector<std::vector<Int>>{{0, 1}, {2, -1}});
}

TEST_CASE("mori cone and mori points for P^1") {
    Triangulation t = appendix_triangulation(1);
    Fan f = fan_from_triangulation(t);
    MoriCone mc = build_mori_cone(t.points, f, t);
    CHECK(mc.generators.size() == 1);
    CHECK(mc.lbasis.size() == 1);

    CHECK(mc.contains(rel({-2, 1, 1})));
    CHECK(mc.contains(rel({0, 0, 0})));
    CHECK_FALSE(mc.contains(rel({2, -1, -1})));
    CHECK_FALSE(mc.contains(rel({1, 1, 1})));  // not even in L

    std::vector<Rat> omega = {Rat(0), Rat(1), Rat(1)};
    auto pts = mori_points(mc, omega, Int(6));
    CHECK(pts == std::vector<Relation>{rel({0, 0, 0}), rel({-2, 1, 1}), rel({-4, 2, 2}),
                                       rel({-6, 3, 3})});
    CHECK(mori_points(mc, omega, Int(0)) == std::vector<Relation>{rel({0, 0, 0})});
    for (const auto& l : pts) CHECK(l[0] <= 0);
}

TEST_CASE("mori points closed under in-bound addition") {
    Triangulation t = appendix_triangulation(1);
    Fan f = fan_from_triangulation(t);
    MoriCone mc = build_mori_cone(t.points, f, t);
    std::vector<Rat> omega = {Rat(0), Rat(1), Rat(1)};
    Int bound(8);
    auto pts = mori_points(mc, omega, bound);
    for (const auto& a : pts)
        for (const auto& b : pts) {
            Relation s(a.size());
            for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
            if (omega_degree(omega, s) <= bound)
                CHECK(std::find(pts.begin(), pts.end(), s) != pts.end());
        }
}

TEST_CASE("default degree functional fails on the n=2 fan") {
    // The exceptional-curve relations have vanishing anticanonical degree, so
    // the sum-of-positive-entries functional is not strictly positive and the
    // enumeration contract rejects it.
    Triangulation t = appendix_triangulation(2);
    Fan f = fan_from_triangulation(t);
    MoriCone mc = build_mori_cone(t.points, f, t);
    std::vector<Rat> omega(t.points.size(), Rat(1));
    omega[0] = 0;
    CHECK_THROWS(mori_points(mc, omega, Int(2)));
}

TEST_CASE("coherence heights give a positive functional for n=2") {
    Triangulation t = appendix_triangulation(2);
    Fan f = fan_from_triangulation(t);
    MoriCone mc = build_mori_cone(t.points, f, t);
    CoherenceResult c = coherence_certificate(t);
    REQUIRE(c.coherent);
    for (const auto& g : mc.generators) {
        Rat s = 0;
        for (size_t i = 0; i < g.size(); ++i) s += c.heights[i] * Rat(g[i]);
        CHECK(s > 0);
    }
}

TEST_CASE("relations outside the Mori cone expose a primitive collection") {
    // For gamma in L \ M, some primitive collection sits inside the negative
    // support {i >= 1 : gamma_i < 0} (the initial-ideal argument).
    for (unsigned n = 1; n <= 2; ++n) {
        Triangulation t = appendix_triangulation(n);
        Fan f = fan_from_triangulation(t);
        MoriCone mc = build_mori_cone(t.points, f, t);
        auto collections = sr_generators(f);  // point-indexed
        std::mt19937 rng(101 + n);
        std::uniform_int_distribution<int> coeff(-2, 2);
        int tested = 0;
        for (int trial = 0; trial < 200 && tested < 25; ++trial) {
            Relation gamma(t.points.size(), Int(0));
            for (const auto& b : mc.lbasis) {
                int c = coeff(rng);
                for (size_t i = 0; i < gamma.size(); ++i) gamma[i] += Int(c) * b[i];
            }
            if (is_zero(gamma) || mc.contains(gamma)) continue;
            ++tested;
            bool witness = false;
            for (const auto& col : collections) {
                bool inside = true;
                for (size_t i : col)
                    if (gamma[i] >= 0) { inside = false; break; }
                if (inside) { witness = true; break; }
            }
            CHECK(witness);
        }
        CHECK(tested > 0);
    }
}

TEST_CASE("mori points additivity and rejection on the n=2 fan") {
    Triangulation t = appendix_triangulation(2);
    Fan f = fan_from_triangulation(t);
    MoriCone mc = build_mori_cone(t.points, f, t);
    std::vector<Rat> omega = choose_degree_functional(mc, t);
    CHECK_THROWS(mori_points(mc, omega, Int(-1)));
    Int bound(2);
    auto pts = mori_points(mc, omega, bound);
    CHECK(pts.size() > 1);
    std::set<Relation> in_set(pts.begin(), pts.end());
    for (const auto& a : pts)
        for (const auto& b : pts) {
            Relation s(a.size());
            for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
            if (omega_degree(omega, s) <= bound) CHECK(in_set.count(s) == 1);
        }
}
