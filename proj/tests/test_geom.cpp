#include <doctest.h>

#include "reflex/geom.hpp"
#include "reflex/poset.hpp"

using namespace reflex;

namespace {

LatticeVec vec(std::vector<long> v) {
    LatticeVec r;
    for (long x : v) r.emplace_back(x);
    return r;
}

Polytope square() {
    return Polytope({vec({1, 1}), vec({1, -1}), vec({-1, 1}), vec({-1, -1})});
}

Polytope cube() {
    std::vector<LatticeVec> v;
    for (int a : {-1, 1})
        for (int b : {-1, 1})
            for (int c : {-1, 1}) v.push_back(vec({a, b, c}));
    return Polytope(v);
}

}  // namespace

TEST_CASE("pn_polytope vertices") {
    Polytope p1 = pn_polytope(1);
    CHECK(p1.vertices() == std::vector<LatticeVec>{vec({-1}), vec({1})});
    Polytope p2 = pn_polytope(2);
    CHECK(p2.vertices() ==
          std::vector<LatticeVec>{vec({-1, -1}), vec({-1, 2}), vec({2, -1})});
    CHECK(pn_polytope(3).vertices().size() == 4);
    CHECK_THROWS(pn_polytope(0));
}

TEST_CASE("degenerate input rejected") {
    CHECK_THROWS(Polytope({vec({0, 0}), vec({1, 0}), vec({2, 0})}));
    CHECK_THROWS(Polytope({vec({1, 2})}));
}

TEST_CASE("non-extreme input points are dropped") {
    Polytope p({vec({0, 0}), vec({2, 0}), vec({0, 2}), vec({1, 1}), vec({1, 0})});
    CHECK(p.vertices() == std::vector<LatticeVec>{vec({0, 0}), vec({0, 2}), vec({2, 0})});
}

TEST_CASE("lattice point counts") {
    CHECK(lattice_points(pn_polytope(1)) ==
          std::vector<LatticeVec>{vec({-1}), vec({0}), vec({1})});
    CHECK(lattice_points(pn_polytope(2)).size() == 10);  // C(5,2)
    CHECK(lattice_points(pn_polytope(3)).size() == 35);  // C(7,3)
    CHECK(count_lattice_points(pn_polytope(2)) == 10);
    CHECK(count_lattice_points(pn_polytope(3)) == 35);
    CHECK(count_lattice_points(pn_polytope(4)) == binomial(9, 4));
}

TEST_CASE("counting kernel matches enumeration and the serial reference") {
    for (unsigned n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 3; ++k) {
            Polytope d = pn_polytope(n).dilate(k);
            Int by_enum(lattice_points(d).size());
            CHECK(count_lattice_points(d) == by_enum);
            CHECK(count_lattice_points_serial(d) == by_enum);
        }
    }
    Polytope s = square();
    CHECK(count_lattice_points(s) == 9);
    CHECK(count_lattice_points_serial(s) == 9);
}

TEST_CASE("indexed points put the origin first, rest lex") {
    auto pts = indexed_points(pn_polytope(2));
    CHECK(pts.size() == 10);
    CHECK(is_zero(pts[0]));
    for (size_t i = 2; i < pts.size(); ++i) CHECK(lex_less(pts[i - 1], pts[i]));
}

TEST_CASE("reflexivity") {
    CHECK(is_reflexive(pn_polytope(1)));
    CHECK(is_reflexive(pn_polytope(2)));
    CHECK(is_reflexive(pn_polytope(3)));
    CHECK(is_reflexive(pn_polytope(4)));
    CHECK(is_reflexive(square()));
    CHECK_FALSE(is_reflexive(pn_polytope(2).dilate(2)));
    // 0 not interior:
    CHECK_FALSE(is_reflexive(Polytope({vec({0, 0}), vec({1, 0}), vec({0, 1})})));
}

TEST_CASE("dual polytope") {
    Polytope d = dual_polytope(pn_polytope(2));
    CHECK(d.vertices() ==
          std::vector<LatticeVec>{vec({-1, -1}), vec({0, 1}), vec({1, 0})});
    CHECK(dual_polytope(d) == pn_polytope(2));
    CHECK(dual_polytope(dual_polytope(pn_polytope(3))) == pn_polytope(3));

    Polytope ds = dual_polytope(square());
    CHECK(ds.vertices() == std::vector<LatticeVec>{vec({-1, 0}), vec({0, -1}),
                                                   vec({0, 1}), vec({1, 0})});
    CHECK_THROWS(dual_polytope(pn_polytope(2).dilate(2)));
}

TEST_CASE("reflexive dual has the origin as unique interior point") {
    for (unsigned n = 1; n <= 3; ++n) {
        Polytope d = dual_polytope(pn_polytope(n));
        int interior = 0;
        for (const auto& x : lattice_points(d)) {
            bool strict = true;
            for (size_t f = 0; f < d.facets().size(); ++f)
                if (d.on_facet(f, x)) strict = false;
            if (strict) {
                ++interior;
                CHECK(is_zero(x));
            }
        }
        CHECK(interior == 1);
    }
}

TEST_CASE("face poset ranks") {
    FacePoset t(pn_polytope(2));
    std::vector<int> counts(4, 0);
    for (size_t a = 0; a < t.size(); ++a) ++counts[t.rank(a)];
    CHECK(counts == std::vector<int>{1, 3, 3, 1});

    FacePoset c(cube());
    std::vector<int> cc(5, 0);
    for (size_t a = 0; a < c.size(); ++a) ++cc[c.rank(a)];
    CHECK(cc == std::vector<int>{1, 8, 12, 6, 1});

    CHECK(is_eulerian(face_poset(pn_polytope(3)).poset()));
    CHECK(is_eulerian(t.poset()));
    CHECK(is_eulerian(c.poset()));
}

TEST_CASE("cone counts over proper faces of pn_polytope") {
    for (unsigned n = 2; n <= 4; ++n) {
        FacePoset fp(pn_polytope(n));
        for (unsigned i = 0; i <= n; ++i) {
            int count = 0;
            for (size_t a = 0; a < fp.size(); ++a)
                if (fp.rank(a) == static_cast<int>(i) && a != fp.top()) ++count;
            CHECK(Int(count) == binomial(n + 1, i));
        }
    }
}

TEST_CASE("normalized volume") {
    CHECK(normalized_volume_simplex({vec({0, 0}), vec({1, 0}), vec({0, 1})}) == 1);
    CHECK(normalized_volume_simplex({vec({0, 0}), vec({1, 0}), vec({2, 0})}) == 0);
    CHECK(normalized_volume(Polytope({vec({-1}), vec({1})})) == 2);
    CHECK(normalized_volume(pn_polytope(2)) == 9);
    CHECK(normalized_volume(pn_polytope(3)) == 64);
    CHECK(normalized_volume(pn_polytope(4)) == 625);
    CHECK(normalized_volume(square()) == 8);
    CHECK(normalized_volume(cube()) == 48);
}

TEST_CASE("volume in own lattice") {
    CHECK(normalized_volume_in_own_lattice({vec({2, -1}), vec({-1, 2})}) == 3);
    CHECK(normalized_volume_in_own_lattice({vec({0, 0}), vec({1, 0})}) == 1);
    CHECK(normalized_volume_in_own_lattice({vec({0, 0, 0})}) == 1);
}

TEST_CASE("face polytopes live in their own lattice") {
    FacePoset fp(pn_polytope(2));
    for (size_t a = 0; a < fp.size(); ++a) {
        if (fp.faces()[a].dim != 1) continue;
        Polytope e = fp.face_polytope(a);
        CHECK(e.dim() == 1);
        CHECK(lattice_points(e).size() == 4);  // lattice length 3 edge
    }
}

TEST_CASE("json-free dilation consistency") {
    Polytope p = pn_polytope(2);
    Polytope d = p.dilate(3);
    CHECK(normalized_volume(d) == 9 * 9);
    CHECK_FALSE(is_reflexive(d));
}
