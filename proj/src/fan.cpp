#include "reflex/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "reflex/cone.hpp"
#include "reflex/linalg.hpp"
#include "reflex/lp.hpp"

namespace reflex {

bool Fan::has_face(const Cone& c) const {
    for (const Cone& mc : max_cones)
        if (std::includes(mc.begin(), mc.end(), c.begin(), c.end())) return true;
    return false;
}

size_t Fan::ray_index(const LatticeVec& v) const {
    for (size_t i = 0; i < rays.size(); ++i)
        if (rays[i] == v) return i;
    return SIZE_MAX;
}

bool cone_contains(const Fan& f, const Cone& sigma, const LatticeVec& x) {
    size_t n = f.dim();
    std::vector<std::vector<Int>> m(n, std::vector<Int>(sigma.size()));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < sigma.size(); ++j) m[i][j] = f.rays[sigma[j]][i];
    auto sol = zsolve(m, x);
    if (!sol) return false;
    for (const Rat& c : *sol)
        if (c < 0) return false;
    return true;
}

std::vector<std::vector<Cone>> cones_by_dimension(const Fan& f) {
    size_t n = f.dim();
    std::vector<std::set<Cone>> sets(n + 1);
    sets[0].insert(Cone{});
    for (const Cone& mc : f.max_cones) {
        size_t k = mc.size();
        for (size_t mask = 1; mask < (size_t(1) << k); ++mask) {
            Cone c;
            for (size_t j = 0; j < k; ++j)
                if (mask & (size_t(1) << j)) c.push_back(mc[j]);
            sets[c.size()].insert(std::move(c));
        }
    }
    std::vector<std::vector<Cone>> out(n + 1);
    for (size_t k = 0; k <= n; ++k) out[k].assign(sets[k].begin(), sets[k].end());
    return out;
}

bool is_smooth(const Fan& f) {
    size_t n = f.dim();
    for (const Cone& mc : f.max_cones) {
        if (mc.size() != n) return false;
        std::vector<std::vector<Int>> m;
        for (size_t r : mc) m.push_back(f.rays[r]);
        Int d = zdet(m);
        if (d != 1 && d != -1) return false;
    }
    return true;
}

bool is_complete_check(const Fan& f) {
    std::map<Cone, int> wall_count;
    for (const Cone& mc : f.max_cones)
        for (size_t drop = 0; drop < mc.size(); ++drop) {
            Cone w;
            for (size_t i = 0; i < mc.size(); ++i)
                if (i != drop) w.push_back(mc[i]);
            ++wall_count[w];
        }
    for (const auto& [w, c] : wall_count)
        if (c != 2) return false;
    return true;
}

Fan star_subdivide(const Fan& f, const LatticeVec& v) {
    require(!is_zero(v), "star_subdivide: zero vector");
    require(primitivize(v) == v, "star_subdivide: v is not primitive");
    if (f.ray_index(v) != SIZE_MAX) return f;  // already a ray: cone set unchanged

    size_t n = f.dim();
    std::vector<size_t> containing;
    for (size_t ci = 0; ci < f.max_cones.size(); ++ci)
        if (cone_contains(f, f.max_cones[ci], v)) containing.push_back(ci);
    require(!containing.empty(), "star_subdivide: v outside the support");

    Fan g;
    g.rays = f.rays;
    g.complete = f.complete;
    g.rays.push_back(v);
    size_t rv = g.rays.size() - 1;

    std::set<Cone> cones;
    std::set<size_t> split(containing.begin(), containing.end());
    for (size_t ci = 0; ci < f.max_cones.size(); ++ci) {
        const Cone& mc = f.max_cones[ci];
        if (!split.count(ci)) {
            cones.insert(mc);
            continue;
        }
        // Minimal face holding v: rays with positive barycentric weight.
        std::vector<std::vector<Int>> m(n, std::vector<Int>(mc.size()));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < mc.size(); ++j) m[i][j] = f.rays[mc[j]][i];
        auto sol = zsolve(m, v);
        check(sol.has_value(), "star_subdivide: containment bookkeeping");
        for (size_t j = 0; j < mc.size(); ++j) {
            if ((*sol)[j] <= 0) continue;
            Cone c;
            for (size_t q = 0; q < mc.size(); ++q)
                if (q != j) c.push_back(mc[q]);
            c.push_back(rv);
            std::sort(c.begin(), c.end());
            cones.insert(std::move(c));
        }
    }
    g.max_cones.assign(cones.begin(), cones.end());
    return g;
}

Fan coarse_fan(const Polytope& p) {
    require(is_reflexive(p), "coarse_fan: polytope is not reflexive");
    Fan f;
    f.complete = true;
    for (const auto& v : p.vertices()) {
        require(primitivize(v) == v, "coarse_fan: non-primitive vertex unsupported");
        f.rays.push_back(v);
    }
    size_t n = p.dim();
    for (size_t fi = 0; fi < p.facets().size(); ++fi) {
        Cone c;
        for (size_t vi = 0; vi < p.vertices().size(); ++vi)
            if (p.on_facet(fi, p.vertices()[vi])) c.push_back(vi);
        require(c.size() == n, "coarse_fan: non-simplicial face fan unsupported");
        std::vector<std::vector<Int>> m;
        for (size_t r : c) m.push_back(f.rays[r]);
        require(zdet(m) != 0, "coarse_fan: degenerate facet cone");
        f.max_cones.push_back(std::move(c));
    }
    std::sort(f.max_cones.begin(), f.max_cones.end());
    return f;
}

Fan fan_from_triangulation(const Triangulation& t) {
    require(t.origin_in_every_maximal(),
            "fan_from_triangulation: origin must be a vertex of every maximal cell");
    Fan f;
    f.complete = true;
    for (size_t i = 1; i < t.points.size(); ++i) {
        require(primitivize(t.points[i]) == t.points[i],
                "fan_from_triangulation: non-primitive boundary point");
        f.rays.push_back(t.points[i]);
    }
    for (const Simplex& s : t.maximal) {
        Cone c;
        for (size_t i : s)
            if (i != 0) c.push_back(i - 1);
        require(c.size() == t.dim(), "fan_from_triangulation: bad cell");
        f.max_cones.push_back(std::move(c));
    }
    std::sort(f.max_cones.begin(), f.max_cones.end());
    check(is_complete_check(f), "fan_from_triangulation: fan is not complete");
    return f;
}

std::vector<Relation> relation_lattice_basis(const std::vector<LatticeVec>& points) {
    require(!points.empty(), "relation_lattice_basis: no points");
    size_t n = points[0].size(), p1 = points.size();
    std::vector<std::vector<Int>> m(n + 1, std::vector<Int>(p1));
    for (size_t j = 0; j < p1; ++j) {
        m[0][j] = 1;
        for (size_t i = 0; i < n; ++i) m[i + 1][j] = points[j][i];
    }
    require(zrank(m) == n + 1, "relation_lattice_basis: points do not span affinely");
    std::vector<Relation> basis = zkernel(m);
    for (Relation& b : basis) {
        bool flip = false;
        if (b[0] > 0) flip = true;
        if (b[0] == 0) {
            for (size_t i = 1; i < b.size(); ++i) {
                if (b[i] == 0) continue;
                flip = b[i] < 0;
                break;
            }
        }
        if (flip)
            for (Int& x : b) x = -x;
    }
    std::sort(basis.begin(), basis.end(), lex_less);
    return basis;
}

std::vector<std::vector<size_t>> primitive_collections(const Fan& f) {
    size_t n = f.dim();
    std::vector<std::set<Cone>> faces(n + 2);
    faces[0].insert(Cone{});
    for (const Cone& mc : f.max_cones)
        for (size_t mask = 1; mask < (size_t(1) << mc.size()); ++mask) {
            Cone c;
            for (size_t j = 0; j < mc.size(); ++j)
                if (mask & (size_t(1) << j)) c.push_back(mc[j]);
            faces[c.size()].insert(std::move(c));
        }
    check(faces[1].size() == f.rays.size(), "primitive_collections: ray not in any cone");

    std::vector<std::vector<size_t>> out;
    for (size_t s = 2; s <= n + 1; ++s) {
        std::set<Cone> candidates;
        for (const Cone& fc : faces[s - 1])
            for (size_t v = 0; v < f.rays.size(); ++v) {
                if (std::binary_search(fc.begin(), fc.end(), v)) continue;
                Cone c = fc;
                c.push_back(v);
                std::sort(c.begin(), c.end());
                candidates.insert(std::move(c));
            }
        for (const Cone& c : candidates) {
            if (faces[s].count(c)) continue;
            bool all_faces = true;
            for (size_t drop = 0; drop < s && all_faces; ++drop) {
                Cone sub;
                for (size_t i = 0; i < s; ++i)
                    if (i != drop) sub.push_back(c[i]);
                if (!faces[s - 1].count(sub)) all_faces = false;
            }
            if (all_faces) out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Relation primitive_relation(const Triangulation& t, const std::vector<size_t>& collection_pts) {
    require(!collection_pts.empty(), "primitive_relation: empty collection");
    size_t n = t.dim(), p1 = t.points.size();
    Int k(collection_pts.size());
    LatticeVec s(n, Int(0));
    for (size_t i : collection_pts) {
        require(i >= 1 && i < p1, "primitive_relation: bad point index");
        s = vadd(s, t.points[i]);
    }

    // Locate s/k in its unique containing simplex via any covering cell.
    std::vector<Rat> target(n);
    for (size_t i = 0; i < n; ++i) target[i] = make_rat(s[i], k);
    const Simplex* cell = nullptr;
    std::vector<Rat> lam;
    for (const Simplex& cand : t.maximal) {
        QMatrix m(n + 1, cand.size());
        std::vector<Rat> rhs(n + 1);
        for (size_t j = 0; j < cand.size(); ++j) {
            for (size_t i = 0; i < n; ++i) m[i][j] = Rat(t.points[cand[j]][i]);
            m[n][j] = 1;
        }
        for (size_t i = 0; i < n; ++i) rhs[i] = target[i];
        rhs[n] = 1;
        auto sol = solve(m, rhs);
        if (!sol) continue;
        if (std::all_of(sol->begin(), sol->end(), [](const Rat& x) { return x >= 0; })) {
            cell = &cand;
            lam = *sol;
            break;
        }
    }
    check(cell != nullptr, "primitive_relation: barycenter escaped the triangulation");

    Relation ell(p1, Int(0));
    for (size_t i : collection_pts) ell[i] += 1;
    for (size_t j = 0; j < cell->size(); ++j) {
        if (lam[j] == 0) continue;
        Rat c = Rat(k) * lam[j];
        check(c.get_den() == 1, "primitive_relation: non-integral coefficient (input not unimodular?)");
        size_t idx = (*cell)[j];
        check(std::find(collection_pts.begin(), collection_pts.end(), idx) == collection_pts.end(),
              "primitive_relation: carrier simplex meets the collection");
        ell[idx] -= c.get_num();
    }

    Int sum = 0;
    LatticeVec vsum(n, Int(0));
    for (size_t i = 0; i < p1; ++i) {
        sum += ell[i];
        vsum = vadd(vsum, vscale(ell[i], t.points[i]));
    }
    check(sum == 0 && is_zero(vsum), "primitive_relation: not an affine relation");
    check(ell[0] <= 0, "primitive_relation: positive origin coefficient");
    return ell;
}

std::vector<Relation> mori_generators(const Fan& f, const Triangulation& t) {
    std::set<Relation> uniq;
    for (const auto& col : primitive_collections(f)) {
        std::vector<size_t> pts;
        for (size_t r : col) pts.push_back(r + 1);
        uniq.insert(primitive_relation(t, pts));
    }
    std::vector<Relation> out(uniq.begin(), uniq.end());
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<std::vector<size_t>> sr_generators(const Fan& f) {
    std::vector<std::vector<size_t>> out = primitive_collections(f);
    for (auto& c : out)
        for (size_t& i : c) i += 1;  // point indexing
    return out;
}

std::vector<std::vector<Int>> cone_dualize(const std::vector<std::vector<Rat>>& generators) {
    std::vector<std::vector<Int>> zgens;
    for (const auto& g : generators) zgens.push_back(primitivize(g));
    return dual_cone_rays(zgens);
}

bool MoriCone::in_relation_lattice(const Relation& ell) const {
    if (ell.size() != points.size()) return false;
    Int s = 0;
    LatticeVec v(points[0].size(), Int(0));
    for (size_t i = 0; i < ell.size(); ++i) {
        if (ell[i] == 0) continue;
        s += ell[i];
        v = vadd(v, vscale(ell[i], points[i]));
    }
    return s == 0 && is_zero(v);
}

std::optional<std::vector<Int>> MoriCone::coords_of(const Relation& ell) const {
    if (!in_relation_lattice(ell)) return std::nullopt;
    size_t m = lbasis.size();
    std::vector<Int> c(m);
    for (size_t j = 0; j < m; ++j) {
        Rat s = 0;
        for (size_t i = 0; i < ell.size(); ++i)
            if (ell[i] != 0) s += projection[j][i] * Rat(ell[i]);
        check(s.get_den() == 1, "mori cone: non-integral coordinates on L");
        c[j] = s.get_num();
    }
    return c;
}

Relation MoriCone::from_coords(const std::vector<Int>& c) const {
    Relation ell(points.size(), Int(0));
    for (size_t j = 0; j < lbasis.size(); ++j)
        for (size_t i = 0; i < points.size(); ++i) ell[i] += c[j] * lbasis[j][i];
    return ell;
}

bool MoriCone::contains(const Relation& ell) const {
    auto c = coords_of(ell);
    if (!c) return false;
    for (const auto& fct : facets)
        if (dot(fct, *c) < 0) return false;
    return true;
}

MoriCone build_mori_cone(const std::vector<LatticeVec>& points, const Fan& f,
                         const Triangulation& t) {
    MoriCone mc;
    mc.points = points;
    mc.generators = mori_generators(f, t);
    mc.lbasis = relation_lattice_basis(points);
    // Left inverse of lbasis^T: coords(ell) = (B B^T)^{-1} B ell.
    size_t m = mc.lbasis.size(), p1 = points.size();
    QMatrix gram(m, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) gram[i][j] = Rat(dot(mc.lbasis[i], mc.lbasis[j]));
    mc.projection.assign(m, std::vector<Rat>(p1, Rat(0)));
    for (size_t col = 0; col < p1; ++col) {
        std::vector<Rat> rhs(m);
        for (size_t i = 0; i < m; ++i) rhs[i] = Rat(mc.lbasis[i][col]);
        auto x = solve(gram, rhs);
        check(x.has_value(), "mori cone: gram solve failed");
        for (size_t i = 0; i < m; ++i) mc.projection[i][col] = (*x)[i];
    }
    for (const auto& g : mc.generators) {
        auto c = mc.coords_of(g);
        check(c.has_value(), "mori cone: generator outside the relation lattice");
        mc.gen_coords.push_back(*c);
    }
    mc.facets = dual_cone_rays(mc.gen_coords);
    for (const auto& g : mc.gen_coords)
        for (const auto& fct : mc.facets)
            check(dot(fct, g) >= 0, "mori cone: facet/generator sign error");
    return mc;
}

Int omega_degree(const std::vector<Rat>& omega, const Relation& ell) {
    check(omega.size() == ell.size(), "omega_degree: size mismatch");
    Rat s = 0;
    for (size_t i = 0; i < ell.size(); ++i) s += omega[i] * Rat(ell[i]);
    check(s.get_den() == 1, "omega_degree: functional not integral on this relation");
    return s.get_num();
}

namespace {

// Integer points of {x : coeffs.x + offset >= 0 for all rows} inside a box,
// prefix-pruned recursion.
void enum_rec(const std::vector<std::pair<std::vector<Int>, Int>>& rows,
              const std::vector<Int>& lo, const std::vector<Int>& hi,
              const std::vector<std::vector<Int>>& tail_max, std::vector<Int>& x,
              std::vector<Int>& partial, size_t depth, std::vector<std::vector<Int>>& out) {
    size_t m = lo.size();
    if (depth == m) {
        out.push_back(x);
        return;
    }
    for (Int v = lo[depth]; v <= hi[depth]; ++v) {
        bool ok = true;
        std::vector<Int> np(partial);
        for (size_t r = 0; r < rows.size(); ++r) {
            np[r] += rows[r].first[depth] * v;
            if (np[r] + tail_max[r][depth + 1] < 0) { ok = false; break; }
        }
        if (ok) {
            x[depth] = v;
            enum_rec(rows, lo, hi, tail_max, x, np, depth + 1, out);
        }
    }
}

}  // namespace

std::vector<Relation> mori_points(const MoriCone& mc, const std::vector<Rat>& omega,
                                  const Int& bound) {
    require(bound >= 0, "mori_points: negative bound");
    size_t m = mc.lbasis.size();
    // Functional in lattice coordinates; must be integral on L.
    std::vector<Int> fvec(m);
    for (size_t j = 0; j < m; ++j) {
        Rat s = 0;
        for (size_t i = 0; i < mc.points.size(); ++i) s += omega[i] * Rat(mc.lbasis[j][i]);
        require(s.get_den() == 1, "mori_points: functional is not integral on L");
        fvec[j] = s.get_num();
    }
    for (const auto& g : mc.gen_coords)
        require(dot(fvec, g) > 0, "mori_points: functional not strictly positive on a generator");

    // Inequality system: facets >= 0 and degree <= bound.
    std::vector<std::pair<std::vector<Int>, Int>> rows;
    for (const auto& f : mc.facets) rows.push_back({f, Int(0)});
    std::vector<Int> negf(m);
    for (size_t j = 0; j < m; ++j) negf[j] = -fvec[j];
    rows.push_back({negf, bound});

    // Box bounds per coordinate by exact LP.
    std::vector<LpRow> lprows;
    for (const auto& [coef, off] : rows) {
        LpRow r;
        r.rel = Rel::Ge;
        r.rhs = Rat(-off);
        for (const Int& c : coef) r.coeff.push_back(Rat(c));
        lprows.push_back(std::move(r));
    }
    auto lp_max = [&](const std::vector<Rat>& obj) {
        LpResult r = lp_solve_free(lprows, obj);
        check(r.status == LpStatus::Optimal, "mori_points: degree slice unbounded");
        return r.value;
    };
    std::vector<Int> lo(m), hi(m);
    for (size_t j = 0; j < m; ++j) {
        std::vector<Rat> obj(m, Rat(0));
        obj[j] = 1;
        Rat mx = lp_max(obj);
        mpz_fdiv_q(hi[j].get_mpz_t(), mx.get_num().get_mpz_t(), mx.get_den().get_mpz_t());
        obj[j] = -1;
        Rat mn = -lp_max(obj);
        mpz_cdiv_q(lo[j].get_mpz_t(), mn.get_num().get_mpz_t(), mn.get_den().get_mpz_t());
    }

    // Narrow coordinates first cuts the recursion hard.
    std::vector<size_t> order(m);
    for (size_t j = 0; j < m; ++j) order[j] = j;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return hi[a] - lo[a] < hi[b] - lo[b]; });
    std::vector<std::pair<std::vector<Int>, Int>> prows(rows.size());
    std::vector<Int> plo(m), phi(m);
    for (size_t r = 0; r < rows.size(); ++r) {
        prows[r].second = rows[r].second;
        prows[r].first.resize(m);
        for (size_t j = 0; j < m; ++j) prows[r].first[j] = rows[r].first[order[j]];
    }
    for (size_t j = 0; j < m; ++j) {
        plo[j] = lo[order[j]];
        phi[j] = hi[order[j]];
    }

    // Per-facet suffix bounds from the LP over the whole slice, tighter than
    // box arithmetic.
    std::vector<std::vector<Int>> tail_max(prows.size(), std::vector<Int>(m + 1, Int(0)));
    for (size_t r = 0; r < prows.size(); ++r)
        for (size_t j = m; j-- > 0;) {
            std::vector<Rat> obj(m, Rat(0));
            bool nonzero = false;
            for (size_t q = j; q < m; ++q) {
                obj[order[q]] = Rat(prows[r].first[q]);
                if (prows[r].first[q] != 0) nonzero = true;
            }
            if (!nonzero) { tail_max[r][j] = 0; continue; }
            Rat v = lp_max(obj);
            mpz_fdiv_q(tail_max[r][j].get_mpz_t(), v.get_num().get_mpz_t(),
                       v.get_den().get_mpz_t());
        }

    std::vector<std::vector<Int>> coords;
    std::vector<Int> x(m), partial(prows.size());
    for (size_t r = 0; r < prows.size(); ++r) partial[r] = prows[r].second;
    enum_rec(prows, plo, phi, tail_max, x, partial, 0, coords);

    std::vector<Relation> out;
    for (const auto& cp : coords) {
        std::vector<Int> c(m);
        for (size_t j = 0; j < m; ++j) c[order[j]] = cp[j];
        out.push_back(mc.from_coords(c));
    }
    std::sort(out.begin(), out.end(), [&](const Relation& a, const Relation& b) {
        Int da = omega_degree(omega, a), db = omega_degree(omega, b);
        if (da != db) return da < db;
        return lex_less(a, b);
    });
    return out;
}

}  // namespace reflex
