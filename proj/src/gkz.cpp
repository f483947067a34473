#include "reflex/gkz.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace reflex {

std::vector<RootDatum> roots(const Polytope& p) {
    require(is_reflexive(p), "roots: polytope must be reflexive");
    std::vector<RootDatum> out;
    std::vector<LatticeVec> pts = lattice_points(p);
    for (size_t f = 0; f < p.facets().size(); ++f) {
        for (const auto& x : pts) {
            if (!p.on_facet(f, x)) continue;
            bool interior = true;
            for (size_t g = 0; g < p.facets().size() && interior; ++g)
                if (g != f && p.on_facet(g, x)) interior = false;
            if (!interior) continue;
            RootDatum rd;
            rd.v = x;
            rd.u = primitivize(p.facets()[f].normal);
            rd.facet = f;
            check(dot(rd.v, rd.u) + p.facets()[f].offset == 0, "roots: pairing error");
            out.push_back(std::move(rd));
        }
    }
    return out;
}

std::vector<Rat> choose_degree_functional(const MoriCone& mc, const Triangulation& t) {
    size_t p1 = mc.points.size();
    std::vector<Rat> omega(p1, Rat(1));
    omega[0] = 0;
    bool ok = true;
    for (const auto& g : mc.generators) {
        Rat s = 0;
        for (size_t i = 0; i < p1; ++i) s += omega[i] * Rat(g[i]);
        if (s <= 0) { ok = false; break; }
    }
    if (!ok) {
        CoherenceResult c = coherence_certificate(t);
        check(c.coherent, "degree functional: triangulation is not coherent");
        omega = c.heights;
        for (const auto& g : mc.generators) {
            Rat s = 0;
            for (size_t i = 0; i < p1; ++i) s += omega[i] * Rat(g[i]);
            check(s > 0, "degree functional: certificate heights not strictly convex");
        }
    }
    // Rescale so the functional is integral and primitive on L.
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& b : mc.lbasis) {
        Rat s = 0;
        for (size_t i = 0; i < p1; ++i) s += omega[i] * Rat(b[i]);
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), s.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), s.get_den().get_mpz_t());
    }
    if (num_gcd == 0) num_gcd = 1;
    Rat scale = make_rat(den_lcm, num_gcd);
    for (Rat& x : omega) x *= scale;
    return omega;
}

Int suggested_bound(const GkzSystem& sys, const Int& floor_bound) {
    Int dmin = 0;
    for (const auto& g : sys.mori.generators) {
        Int d = omega_degree(sys.omega, g);
        if (dmin == 0 || d < dmin) dmin = d;
    }
    if (dmin == 0) dmin = 1;
    Int req = 0;
    for (const auto& g : sys.mori.generators) {
        Rat plus = 0, minus = 0;
        for (size_t i = 0; i < g.size(); ++i) {
            if (g[i] > 0) plus += sys.omega[i] * Rat(g[i]);
            if (g[i] < 0) minus += sys.omega[i] * Rat(-g[i]);
        }
        Rat m = std::max(plus, minus);
        Int mi(m.get_num() / m.get_den());
        req = std::max(req, Int(mi + 1));
    }
    for (const RootDatum& rd : roots(sys.poly)) {
        for (size_t vi = 0; vi < sys.points.size(); ++vi) {
            if (dot(sys.points[vi], rd.u) + 1 == 0) continue;  // on the facet
            LatticeVec w = vadd(sys.points[vi], rd.v);
            for (size_t wi = 0; wi < sys.points.size(); ++wi)
                if (sys.points[wi] == w) {
                    Rat shift = sys.omega[wi] - sys.omega[vi];
                    if (shift > 0) {
                        Int si(shift.get_num() / shift.get_den());
                        req = std::max(req, Int(si + 1));
                    }
                }
        }
    }
    return std::max(floor_bound, Int(req + 2 * dmin));
}

GkzSystem build_gkz_system(unsigned n, const Int& min_bound, bool exact_bound) {
    Triangulation t = appendix_triangulation(n);
    Fan f = fan_from_triangulation(t);
    GkzSystem sys{t.points,           pn_polytope(n), t, f, CohomRing(f),
                  build_mori_cone(t.points, f, t), {},        Int(0)};
    sys.omega = choose_degree_functional(sys.mori, sys.tri);
    sys.bound = exact_bound ? min_bound : suggested_bound(sys, min_bound);
    return sys;
}

LogSeries b_series(const GkzSystem& sys) {
    require(sys.bound >= 0, "b_series: negative bound");
    LogSeries s;
    for (const Relation& ell : mori_points(sys.mori, sys.omega, sys.bound)) {
        Relation d = ell;
        d[0] -= 1;
        s.terms[d] = o_ell(sys.ring, ell);
    }
    return s;
}

LogSeries diff_a(const GkzSystem& sys, const LogSeries& s, size_t i) {
    LogSeries out;
    for (const auto& [d, c] : s.terms) {
        RingClass nc = sys.ring.cup_divisor(c, i);
        nc += Rat(d[i]) * c;
        Relation nd = d;
        nd[i] -= 1;
        auto it = out.terms.find(nd);
        if (it == out.terms.end())
            out.terms[nd] = nc;
        else
            it->second += nc;
    }
    return out;
}

bool source_known(const GkzSystem& sys, const Relation& src_exponent) {
    Relation ell = src_exponent;
    ell[0] += 1;
    if (!sys.mori.contains(ell)) return true;
    return omega_degree(sys.omega, ell) <= sys.bound;
}

CheckResult check_gkz(const GkzSystem& sys, const LogSeries& s, const Relation& ell) {
    Relation plus(ell.size(), Int(0)), minus(ell.size(), Int(0));
    for (size_t i = 0; i < ell.size(); ++i) {
        if (ell[i] > 0) plus[i] = ell[i];
        if (ell[i] < 0) minus[i] = -ell[i];
    }
    LogSeries s1 = s, s2 = s;
    for (size_t i = 0; i < ell.size(); ++i) {
        for (Int k = 0; k < plus[i]; ++k) s1 = diff_a(sys, s1, i);
        for (Int k = 0; k < minus[i]; ++k) s2 = diff_a(sys, s2, i);
    }
    CheckResult res;
    res.ok = true;
    std::set<Relation> keys;
    for (const auto& [d, c] : s1.terms) keys.insert(d);
    for (const auto& [d, c] : s2.terms) keys.insert(d);
    for (const Relation& d : keys) {
        Relation src1 = vadd(d, plus), src2 = vadd(d, minus);
        if (!source_known(sys, src1) || !source_known(sys, src2)) continue;
        ++res.exponents_checked;
        RingClass c = sys.ring.zero();
        auto i1 = s1.terms.find(d), i2 = s2.terms.find(d);
        if (i1 != s1.terms.end()) c += i1->second;
        if (i2 != s2.terms.end()) c -= i2->second;
        if (!c.is_zero()) res.ok = false;
    }
    return res;
}

CheckResult check_torus_euler(const GkzSystem& sys, const LogSeries& s) {
    size_t n = sys.poly.dim(), p1 = sys.points.size();
    CheckResult res;
    res.ok = true;
    for (const auto& [d, c] : s.terms) {
        ++res.exponents_checked;
        // torus equations, one per ambient coordinate
        for (size_t j = 0; j < n; ++j) {
            RingClass acc = sys.ring.zero();
            for (size_t i = 1; i < p1; ++i) {
                if (sys.points[i][j] == 0) continue;
                RingClass t = sys.ring.cup_divisor(c, i);
                t += Rat(d[i]) * c;
                acc += Rat(sys.points[i][j]) * t;
            }
            if (!acc.is_zero()) res.ok = false;
        }
        // Euler equation with the +1 from the prefactor
        RingClass acc = c;  // the +1 term
        for (size_t i = 0; i < p1; ++i) {
            RingClass t = sys.ring.cup_divisor(c, i);
            t += Rat(d[i]) * c;
            acc += t;
        }
        if (!acc.is_zero()) res.ok = false;
    }
    return res;
}

namespace {

size_t point_index_of(const GkzSystem& sys, const LatticeVec& v) {
    for (size_t i = 0; i < sys.points.size(); ++i)
        if (sys.points[i] == v) return i;
    return SIZE_MAX;
}

// The index pairs (v', v'+v) the operator touches.
std::vector<std::pair<size_t, size_t>> root_moves(const GkzSystem& sys, const RootDatum& rd) {
    std::vector<std::pair<size_t, size_t>> moves;
    for (size_t vi = 0; vi < sys.points.size(); ++vi) {
        Int pairing = dot(sys.points[vi], rd.u);
        if (pairing + 1 == 0) continue;  // v' on the facet: coefficient 0
        LatticeVec w = vadd(sys.points[vi], rd.v);
        size_t wi = point_index_of(sys, w);
        check(wi != SIZE_MAX, "root operator: shifted point left the polytope");
        moves.push_back({vi, wi});
    }
    return moves;
}

}  // namespace

LogSeries apply_root_operator(const GkzSystem& sys, const LogSeries& s, const RootDatum& rd) {
    LogSeries out;
    for (const auto& [vi, wi] : root_moves(sys, rd)) {
        Rat coeff(dot(sys.points[vi], rd.u) + 1);
        for (const auto& [d, c] : s.terms) {
            RingClass nc = sys.ring.cup_divisor(c, wi);
            nc += Rat(d[wi]) * c;
            nc = coeff * nc;
            Relation nd = d;
            nd[vi] += 1;
            nd[wi] -= 1;
            auto it = out.terms.find(nd);
            if (it == out.terms.end())
                out.terms[nd] = nc;
            else
                it->second += nc;
        }
    }
    return out;
}

namespace {

bool window_valid(const GkzSystem& sys, const Relation& d,
                  const std::vector<std::pair<size_t, size_t>>& moves) {
    for (const auto& [vi, wi] : moves) {
        Relation src = d;
        src[vi] -= 1;
        src[wi] += 1;
        if (!source_known(sys, src)) return false;
    }
    return true;
}

}  // namespace

CheckResult check_extended(const GkzSystem& sys, const LogSeries& s) {
    CheckResult res;
    res.ok = true;
    res.exponents_checked = SIZE_MAX;
    for (const RootDatum& rd : roots(sys.poly)) {
        auto moves = root_moves(sys, rd);
        LogSeries ls = apply_root_operator(sys, s, rd);
        size_t checked = 0;
        for (const auto& [d, c] : ls.terms) {
            if (!window_valid(sys, d, moves)) continue;
            ++checked;
            if (!sys.ring.cup_divisor(c, 0).is_zero()) res.ok = false;
        }
        res.exponents_checked = std::min(res.exponents_checked, checked);
    }
    return res;
}

bool root_residual_nonzero(const GkzSystem& sys, const LogSeries& s, const RootDatum& rd) {
    auto moves = root_moves(sys, rd);
    LogSeries ls = apply_root_operator(sys, s, rd);
    for (const auto& [d, c] : ls.terms)
        if (window_valid(sys, d, moves) && !c.is_zero()) return true;
    return false;
}

RingClass log_coefficient(const GkzSystem& sys, const LogSeries& s, const Relation& d,
                          const std::vector<unsigned>& m) {
    require(m.size() == sys.points.size(), "log_coefficient: multi-index length");
    auto it = s.terms.find(d);
    RingClass c = (it == s.terms.end()) ? sys.ring.zero() : it->second;
    Rat fact = 1;
    for (size_t i = 0; i < m.size(); ++i)
        for (unsigned k = 0; k < m[i]; ++k) {
            c = sys.ring.cup_divisor(c, i);
            fact *= Rat(static_cast<long>(k + 1));
        }
    return make_rat(1, fact.get_num()) * c;  // fact is an integer
}

size_t cupped_coefficient_rank(const GkzSystem& sys, const LogSeries& s) {
    size_t n = sys.ring.ambient_dim(), p1 = sys.points.size();
    // Incremental row basis of the expanded coefficient span.
    std::vector<std::vector<Rat>> basis;
    auto flatten = [&](const RingClass& c) {
        std::vector<Rat> v;
        for (const auto& deg : c.coords) v.insert(v.end(), deg.begin(), deg.end());
        return v;
    };
    auto reduce_add = [&](std::vector<Rat> v) {
        for (const auto& b : basis) {
            size_t lead = 0;
            while (lead < b.size() && b[lead] == 0) ++lead;
            if (lead < v.size() && v[lead] != 0) {
                Rat f = v[lead] / b[lead];
                for (size_t j = lead; j < v.size(); ++j)
                    if (b[j] != 0) v[j] -= f * b[j];
            }
        }
        if (std::any_of(v.begin(), v.end(), [](const Rat& x) { return x != 0; })) {
            // normalize leading entry for stable reduction order
            size_t lead = 0;
            while (v[lead] == 0) ++lead;
            Rat inv = v[lead];
            for (Rat& x : v) x /= inv;
            basis.push_back(std::move(v));
            std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
                size_t la = 0, lb = 0;
                while (la < a.size() && a[la] == 0) ++la;
                while (lb < b.size() && b[lb] == 0) ++lb;
                return la < lb;
            });
        }
    };
    // Enumerate log monomials of total degree <= n by recursion over indices.
    for (const auto& [d, c] : s.terms) {
        RingClass base = sys.ring.cup_divisor(c, 0);  // cup with D_0, sign immaterial
        std::function<void(size_t, const RingClass&, size_t)> rec =
            [&](size_t from, const RingClass& cur, size_t degree) {
                reduce_add(flatten(cur));
                if (degree == n) return;
                for (size_t i = from; i < p1; ++i) {
                    RingClass nxt = sys.ring.cup_divisor(cur, i);
                    if (nxt.is_zero()) continue;
                    rec(i, nxt, degree + 1);
                }
            };
        rec(0, base, 0);
    }
    return basis.size();
}

}  // namespace reflex
