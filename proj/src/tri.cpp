#include "reflex/tri.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "reflex/fan.hpp"
#include "reflex/linalg.hpp"
#include "reflex/lp.hpp"

namespace reflex {

bool Triangulation::origin_in_every_maximal() const {
    if (!origin_first()) return false;
    for (const auto& s : maximal)
        if (s.empty() || s[0] != 0) return false;
    return true;
}

namespace {

std::vector<LatticeVec> simplex_coords(const Triangulation& t, const Simplex& s) {
    std::vector<LatticeVec> pts;
    for (size_t i : s) pts.push_back(t.points[i]);
    return pts;
}

// Affine coordinates of x with respect to the n+1 points of a full
// simplex: solve sum mu_i p_i = x with sum mu_i = 1.
std::vector<Rat> affine_coordinates(const std::vector<LatticeVec>& pts, const LatticeVec& x) {
    size_t n = x.size();
    check(pts.size() == n + 1, "affine_coordinates: not a full simplex");
    QMatrix m(n + 1, n + 1);
    std::vector<Rat> rhs(n + 1);
    for (size_t j = 0; j <= n; ++j) {
        for (size_t i = 0; i < n; ++i) m[i][j] = Rat(pts[j][i]);
        m[n][j] = 1;
    }
    for (size_t i = 0; i < n; ++i) rhs[i] = Rat(x[i]);
    rhs[n] = 1;
    auto sol = solve(m, rhs);
    check(sol.has_value(), "affine_coordinates: degenerate simplex");
    return *sol;
}

}  // namespace

void validate_triangulation(const Triangulation& t) {
    require(!t.points.empty() && !t.maximal.empty(), "triangulation: empty");
    size_t n = t.dim();
    Int total = 0;
    for (const auto& s : t.maximal) {
        require(s.size() == n + 1, "triangulation: cell is not full-dimensional");
        Int v = normalized_volume_simplex(simplex_coords(t, s));
        require(v > 0, "triangulation: degenerate cell");
        total += v;
    }
    Polytope hull(t.points);
    require(total == normalized_volume(hull), "triangulation: volumes do not cover the hull");

    // Interior walls shared by exactly two cells, boundary walls by one.
    std::map<Simplex, int> wall_count;
    for (const auto& s : t.maximal)
        for (size_t drop = 0; drop < s.size(); ++drop) {
            Simplex w;
            for (size_t i = 0; i < s.size(); ++i)
                if (i != drop) w.push_back(s[i]);
            ++wall_count[w];
        }
    for (const auto& [w, cnt] : wall_count) {
        require(cnt <= 2, "triangulation: wall shared by more than two cells");
        bool boundary = false;
        for (size_t f = 0; f < hull.facets().size() && !boundary; ++f) {
            bool all = true;
            for (size_t i : w)
                if (!hull.on_facet(f, t.points[i])) { all = false; break; }
            boundary = all;
        }
        require(cnt == (boundary ? 1 : 2), "triangulation: wall multiplicity mismatch");
    }
}

bool is_unimodular(const Triangulation& t) {
    size_t n = t.maximal.size();
    bool uni = true;
#pragma omp parallel for schedule(static) reduction(&& : uni)
    for (size_t i = 0; i < n; ++i)
        uni = uni && (normalized_volume_simplex(simplex_coords(t, t.maximal[i])) == 1);
    return uni;
}

namespace {

// Strict convexity rows: one per interior wall (fold) plus one per unused
// point (lies strictly above the envelope). Coefficient rows sum to zero, so
// adding a constant to all heights never changes them.
std::vector<std::vector<Rat>> coherence_rows(const Triangulation& t) {
    size_t np = t.points.size();
    std::map<Simplex, std::vector<size_t>> wall_cells;
    for (size_t ci = 0; ci < t.maximal.size(); ++ci) {
        const Simplex& s = t.maximal[ci];
        for (size_t drop = 0; drop < s.size(); ++drop) {
            Simplex w;
            for (size_t i = 0; i < s.size(); ++i)
                if (i != drop) w.push_back(s[i]);
            wall_cells[w].push_back(ci);
        }
    }
    std::vector<std::vector<Rat>> rows;
    for (const auto& [w, cells] : wall_cells) {
        if (cells.size() != 2) continue;
        const Simplex& s1 = t.maximal[cells[0]];
        const Simplex& s2 = t.maximal[cells[1]];
        size_t apex = SIZE_MAX;
        for (size_t i : s2)
            if (!std::binary_search(s1.begin(), s1.end(), i)) apex = i;
        check(apex != SIZE_MAX, "coherence: wall bookkeeping");
        std::vector<Rat> mu = affine_coordinates(simplex_coords(t, s1), t.points[apex]);
        std::vector<Rat> row(np, Rat(0));
        row[apex] += 1;
        for (size_t j = 0; j < s1.size(); ++j) row[s1[j]] -= mu[j];
        rows.push_back(std::move(row));
    }
    std::vector<bool> used(np, false);
    for (const auto& s : t.maximal)
        for (size_t i : s) used[i] = true;
    for (size_t q = 0; q < np; ++q) {
        if (used[q]) continue;
        size_t host = SIZE_MAX;
        for (size_t ci = 0; ci < t.maximal.size() && host == SIZE_MAX; ++ci) {
            auto mu = affine_coordinates(simplex_coords(t, t.maximal[ci]), t.points[q]);
            if (std::all_of(mu.begin(), mu.end(), [](const Rat& x) { return x >= 0; }))
                host = ci;
        }
        check(host != SIZE_MAX, "coherence: unused point outside the support");
        auto mu = affine_coordinates(simplex_coords(t, t.maximal[host]), t.points[q]);
        std::vector<Rat> row(np, Rat(0));
        row[q] += 1;
        const Simplex& s = t.maximal[host];
        for (size_t j = 0; j < s.size(); ++j) row[s[j]] -= mu[j];
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

CoherenceResult coherence_certificate(const Triangulation& t) {
    std::vector<std::vector<Rat>> rows = coherence_rows(t);
    CoherenceResult res;
    if (rows.empty()) {  // single cell, nothing to fold
        res.coherent = true;
        res.heights.assign(t.points.size(), Rat(0));
        return res;
    }
    std::vector<LpRow> lprows(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        lprows[i].coeff = rows[i];
        lprows[i].rel = Rel::Ge;
        lprows[i].rhs = 1;
    }
    std::vector<Rat> witness;
    res.coherent = lp_feasible_free(lprows, &witness);
    if (res.coherent) res.heights = std::move(witness);
    return res;
}

bool is_coherent(const Triangulation& t) { return coherence_certificate(t).coherent; }

bool heights_certify_coherence(const Triangulation& t, const std::vector<Rat>& heights) {
    require(heights.size() == t.points.size(), "heights: size mismatch");
    for (const auto& row : coherence_rows(t))
        if (dotq(row, heights) <= 0) return false;
    return true;
}

namespace {

struct AppendixBuilder {
    unsigned n;
    FaceLabeling labeling;
    SubdivisionLog* log;
    Fan fan;
    std::map<LatticeVec, size_t> point_index;   // into the indexed point list

    void subdivide(const LatticeVec& v) {
        size_t before = fan.rays.size();
        fan = star_subdivide(fan, v);
        check(fan.rays.size() == before + 1, "appendix: subdivision point not new");
    }

    void check_piece(const std::vector<LatticeVec>& a, const std::vector<LatticeVec>& b) {
        if (!log) return;
        Cone c;
        for (const auto& v : a) c.push_back(fan.ray_index(v));
        for (const auto& v : b) c.push_back(fan.ray_index(v));
        for (size_t i : c) check(i != SIZE_MAX, "appendix: piece vertex is not a ray");
        std::sort(c.begin(), c.end());
        check(fan.has_face(c), "appendix: predicted join piece absent from fan");
        log->joins.push_back({a, b});
    }

    // Second construction: subdivide the simplex with vertices
    // base + l*dirs[j] (and base itself) by descending levels, then recurse
    // into the layer simplices.
    void second_construction(const LatticeVec& base, const std::vector<LatticeVec>& dirs, unsigned l) {
        size_t k = dirs.size();
        if (k == 0 || l <= 1) return;
        for (unsigned i = l - 1; i >= 1; --i)
            for (size_t j = 0; j < k; ++j)
                subdivide(vadd(base, vscale(Int(i), dirs[j])));
        if (log) {
            for (unsigned i = 1; i + 1 <= l; ++i)
                for (size_t j = 1; j <= k; ++j) {
                    std::vector<LatticeVec> a, b;
                    for (size_t q = 0; q < j; ++q)
                        a.push_back(vadd(base, vscale(Int(i), dirs[q])));
                    for (size_t q = j - 1; q < k; ++q)
                        b.push_back(vadd(base, vscale(Int(i + 1), dirs[q])));
                    check_piece(a, b);
                }
        }
        for (unsigned i = 2; i <= l; ++i) {
            LatticeVec base2 = vadd(base, vscale(Int(i), dirs[0]));
            std::vector<LatticeVec> dirs2;
            for (size_t j = 1; j < k; ++j) dirs2.push_back(vsub(dirs[j], dirs[0]));
            second_construction(base2, dirs2, i);
        }
    }

    void subdivide_face(const std::vector<LatticeVec>& verts_in) {
        std::vector<LatticeVec> verts = verts_in;
        if (labeling == FaceLabeling::Reversed)
            std::reverse(verts.begin(), verts.end());
        size_t k = verts.size() - 1;
        std::vector<LatticeVec> dirs;  // lattice basis of the face, edge/(n+1)
        for (size_t i = 1; i <= k; ++i) {
            LatticeVec d = vsub(verts[i], verts[0]);
            for (Int& c : d) {
                check(c % Int(n + 1) == 0, "appendix: face is not an (n+1)-dilated simplex");
                c /= Int(n + 1);
            }
            dirs.push_back(std::move(d));
        }
        LatticeVec w0 = verts[0];
        for (const auto& d : dirs) w0 = vadd(w0, d);
        std::vector<LatticeVec> w{w0};
        for (size_t i = 0; i < k; ++i)
            w.push_back(vadd(w0, vscale(Int(n - k), dirs[i])));
        for (const auto& wi : w) subdivide(wi);
        if (log) {
            for (size_t r = 1; r <= k; ++r)
                for (size_t i = 0; i < r; ++i) {
                    std::vector<LatticeVec> a, b;
                    for (size_t q = 0; q <= r; ++q)
                        if (q != i) a.push_back(w[q]);
                    for (size_t q = r; q <= k; ++q) b.push_back(verts[q]);
                    check_piece(a, b);
                }
            for (size_t r = 0; r <= k; ++r)
                for (size_t j = r + 1; j <= k; ++j) {
                    std::vector<LatticeVec> a, b;
                    for (size_t q = 0; q <= r; ++q) a.push_back(w[q]);
                    for (size_t q = r; q <= k; ++q)
                        if (q != j) b.push_back(verts[q]);
                    check_piece(a, b);
                }
        }
        // Interior simplex <w_0, ..., w_k> is the face scaled to n-k.
        second_construction(w0, dirs, n - k);
    }
};

}  // namespace

Triangulation appendix_triangulation(unsigned n, FaceLabeling labeling, SubdivisionLog* log) {
    require(n >= 1 && n <= 5, "appendix_triangulation: n out of desk range");
    Polytope poly = pn_polytope(n);
    std::vector<LatticeVec> pts = indexed_points(poly);
    FacePoset fp(poly);

    AppendixBuilder b;
    b.n = n;
    b.labeling = labeling;
    b.log = log;
    b.fan = coarse_fan(poly);
    for (size_t i = 0; i < pts.size(); ++i) b.point_index[pts[i]] = i;

    for (int k = static_cast<int>(n) - 1; k >= 1; --k)
        for (size_t a = 0; a < fp.size(); ++a) {
            if (fp.faces()[a].dim != k) continue;
            b.subdivide_face(fp.face_vertices(a));
        }
    check(b.fan.rays.size() == pts.size() - 1,
          "appendix: not all boundary lattice points became rays");

    Triangulation t;
    t.points = pts;
    for (const Cone& c : b.fan.max_cones) {
        Simplex s{0};
        for (size_t r : c) {
            auto it = b.point_index.find(b.fan.rays[r]);
            check(it != b.point_index.end(), "appendix: ray is not a lattice point");
            s.push_back(it->second);
        }
        std::sort(s.begin(), s.end());
        t.maximal.push_back(std::move(s));
    }
    std::sort(t.maximal.begin(), t.maximal.end());
    return t;
}

Triangulation pinwheel_triangulation() {
    Triangulation t;
    auto pt = [](long x, long y) { return LatticeVec{Int(x), Int(y)}; };
    t.points = {pt(0, 0), pt(0, 4), pt(1, 1), pt(1, 2), pt(2, 1), pt(4, 0)};
    t.maximal = {{0, 2, 5}, {2, 4, 5}, {1, 4, 5}, {1, 3, 4}, {0, 1, 3}, {0, 2, 3}, {2, 3, 4}};
    std::sort(t.maximal.begin(), t.maximal.end());
    return t;
}

}  // namespace reflex
