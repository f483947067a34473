#include "reflex/hodge.hpp"

#include <algorithm>
#include <set>

namespace reflex {

GradedPoly ehrhart_s(const Polytope& p) {
    int d = static_cast<int>(p.dim()) + 1;
    std::vector<Int> counts{Int(1)};  // l(0 . p) = 1
    for (int k = 1; k <= d; ++k) counts.push_back(count_lattice_points(p.dilate(k)));
    GradedPoly s;
    for (int j = 0; j <= d; ++j) {
        Rat c = 0;
        for (int i = 0; i <= j && i <= d; ++i)
            c += Rat((i % 2 == 0 ? 1 : -1) * binomial(d, i)) * Rat(counts[j - i]);
        if (j == d)
            check(c == 0, "ehrhart_s: degree bound violated");
        else
            s.add_term(j, c);
    }
    return s;
}

const GradedPoly& HodgeData::s_face(size_t a) {
    auto it = s_face_memo_.find(a);
    if (it != s_face_memo_.end()) return it->second;
    GradedPoly s;
    if (fp_.faces()[a].dim <= 0)
        s = GradedPoly(Rat(1));  // empty face or vertex
    else
        s = ehrhart_s(fp_.face_polytope(a));
    return s_face_memo_[a] = std::move(s);
}

const GradedPoly& HodgeData::s_tilde(size_t a) {
    auto it = s_tilde_memo_.find(a);
    if (it != s_tilde_memo_.end()) return it->second;
    const EulerianPoset& p = fp_.poset();
    GradedPoly sum;
    for (size_t c : p.interval(p.bottom(), a)) {
        int sign = (p.rank(a) - p.rank(c)) % 2 == 0 ? 1 : -1;
        sum += Rat(sign) * (s_face(c) * stanley_->g(c, a));
    }
    return s_tilde_memo_[a] = std::move(sum);
}

GradedPoly s_a_polynomial(HodgeData& hd, size_t a) {
    return hd.s_tilde(a).substitute_power(2);
}

Int d_ell_counts(const Triangulation& t, const FacePoset& fp, size_t face, int ell) {
    int rho = fp.rank(face);
    if (fp.faces()[face].dim < 0) return ell == 0 ? 1 : 0;  // origin cone
    int target = rho - ell - 1;
    if (target < 0 || target > static_cast<int>(t.dim())) return 0;

    // facets of the face within the face lattice
    std::vector<size_t> face_facets;
    for (size_t c = 0; c < fp.size(); ++c)
        if (c != face && fp.leq(c, face) && fp.faces()[c].dim == fp.faces()[face].dim - 1)
            face_facets.push_back(c);

    std::vector<bool> on_face(t.points.size());
    for (size_t i = 0; i < t.points.size(); ++i)
        on_face[i] = fp.point_on_face(face, t.points[i]);

    std::set<Simplex> cells;
    size_t width = static_cast<size_t>(target) + 1;
    for (const Simplex& mc : t.maximal) {
        std::vector<size_t> in_face;
        for (size_t i : mc)
            if (on_face[i]) in_face.push_back(i);
        if (in_face.size() < width) continue;
        std::vector<bool> pick(in_face.size(), false);
        std::fill(pick.end() - width, pick.end(), true);
        do {
            Simplex s;
            for (size_t j = 0; j < in_face.size(); ++j)
                if (pick[j]) s.push_back(in_face[j]);
            cells.insert(std::move(s));
        } while (std::next_permutation(pick.begin(), pick.end()));
    }

    Int count = 0;
    for (const Simplex& s : cells) {
        bool in_boundary = false;
        for (size_t c : face_facets) {
            bool all = true;
            for (size_t i : s)
                if (!fp.point_on_face(c, t.points[i])) { all = false; break; }
            if (all) { in_boundary = true; break; }
        }
        if (!in_boundary) count += 1;
    }
    return count;
}

GradedPoly fiber_poincare(const Triangulation& t, const FacePoset& fp, size_t face) {
    GradedPoly sum;
    GradedPoly t2m1 = GradedPoly::term(2, Rat(1)) - GradedPoly(Rat(1));
    for (int ell = 0; ell <= fp.rank(face); ++ell) {
        Int d = d_ell_counts(t, fp, face, ell);
        if (d != 0) sum += Rat(d) * t2m1.pow(static_cast<unsigned>(ell));
    }
    return sum;
}

Int delta_multiplicity(const Triangulation& t, const FacePoset& fp, size_t face) {
    const EulerianPoset& p = fp.poset();
    Int sum = 0;
    for (size_t c : p.interval(p.bottom(), face)) {
        int sign = (p.rank(face) - p.rank(c)) % 2 == 0 ? 1 : -1;
        sum += Int(sign) * d_ell_counts(t, fp, c, 0);
    }
    return sum;
}

Int delta_from_poset(HodgeData& hd, size_t face) {
    Rat v = s_a_polynomial(hd, face).eval(Rat(1));
    check(v.get_den() == 1, "delta: S_a(1) not an integer");
    return v.get_num();
}

GradedPoly rank_series(HodgeData& hd) {
    const EulerianPoset& p = hd.faces().poset();
    int n = static_cast<int>(hd.polytope().dim());
    GradedPoly sum;
    for (size_t a = 0; a < p.size(); ++a) {
        int sign = (n + 1 - p.rank(a)) % 2 == 0 ? 1 : -1;
        sum += Rat(sign) *
               (hd.s_face(a).substitute_power(2) * hd.stanley().g(a, p.top()).substitute_power(2));
    }
    check(sum.coeff(0) == 0 && sum.low_degree() >= 0,
          "rank_series: singular part did not cancel");
    return sum.shift(-2);
}

GradedPoly rank_series(const Polytope& reflexive) {
    require(is_reflexive(reflexive), "rank_series: polytope must be reflexive");
    HodgeData hd(reflexive);
    return rank_series(hd);
}

std::vector<Int> a_numbers(unsigned n) {
    require(n >= 1, "a_numbers: n must be >= 1");
    GradedPoly p = geometric_sum(n).pow(n + 1);
    std::vector<Int> out;
    for (unsigned i = 0; i < n; ++i) {
        Rat c = p.coeff(static_cast<int>(i * (n + 1)));
        out.push_back(c.get_num());
    }
    return out;
}

Int nu(unsigned n) {
    require(n >= 1, "nu: n must be >= 1");
    Int power = ipow(Int(n), n);
    Int sign = (n % 2 == 0) ? 1 : -1;
    Int num = Int(n) * (power - sign);
    Int q;
    mpz_divexact_ui(q.get_mpz_t(), num.get_mpz_t(), n + 1);
    return q;
}

GradedPoly e_van_series(HodgeData& hd) {
    const EulerianPoset& p = hd.faces().poset();
    GradedPoly sum;
    for (size_t a = 0; a < p.size(); ++a) {
        int sign = p.rank(a) % 2 == 0 ? 1 : -1;
        sum += Rat(sign) * (hd.s_face(a) * hd.stanley().g(a, p.top()));
    }
    check(sum.coeff(0) == 0 && sum.low_degree() >= 0, "e_van: constant term did not cancel");
    return sum.shift(-1);
}

Poly2 string_e_polynomial(HodgeData& hd) {
    const Polytope& poly = hd.polytope();
    require(is_reflexive(poly), "string_e_polynomial: polytope must be reflexive");
    int n = static_cast<int>(poly.dim());
    Polytope dual = dual_polytope(poly);
    HodgeData hdual(dual);

    // Face of the dual corresponding to a face of the polytope: spanned by
    // the primitive normals of the facets through the face.
    std::map<LatticeVec, size_t> dual_vertex_index;
    for (size_t i = 0; i < dual.vertices().size(); ++i)
        dual_vertex_index[dual.vertices()[i]] = i;
    const FacePoset& fp = hd.faces();
    const FacePoset& fpd = hdual.faces();
    auto dual_face = [&](size_t a) -> size_t {
        std::vector<size_t> verts;
        for (size_t f : fp.faces()[a].active_facets) {
            LatticeVec u = primitivize(poly.facets()[f].normal);
            verts.push_back(dual_vertex_index.at(u));
        }
        std::sort(verts.begin(), verts.end());
        for (size_t b = 0; b < fpd.size(); ++b)
            if (fpd.faces()[b].vertex_idx == verts) return b;
        check(false, "string_e_polynomial: dual face not found");
        return SIZE_MAX;
    };

    Poly2 total;
    for (size_t a = 0; a < fp.size(); ++a) {
        size_t astar = dual_face(a);
        check(fp.faces()[a].dim + fpd.faces()[astar].dim == n - 1,
              "string_e_polynomial: face dimensions do not pair");
        const GradedPoly& sa = hd.s_tilde(a);
        const GradedPoly& sb = hdual.s_tilde(astar);
        int pw = n + 1 - fp.rank(a);
        Rat sign((pw % 2 == 0) ? 1 : -1);
        for (const auto& [e1, c1] : sa.coeffs())
            for (const auto& [e2, c2] : sb.coeffs())
                // (uv)^{-1} (-u)^{pw} u^{e1 - e2} v^{e1 + e2}
                total.add_term(pw + e1 - e2 - 1, e1 + e2 - 1, sign * c1 * c2);
    }
    check(total.is_polynomial(), "string_e_polynomial: negative exponents survived");
    return total;
}

IdentitySuiteResult identity_suite(unsigned n) {
    require(n >= 1 && n <= 8, "identity_suite: n out of range");
    IdentitySuiteResult res;

    // (iii) g_m(t) from the binomial Ehrhart series of the (n+1)-dilated
    // standard simplex vs direct dilate counting.
    res.g_m_vs_ehrhart = true;
    for (unsigned m = 1; m <= 5; ++m) {
        GradedPoly gm;
        {
            GradedPoly onemt = GradedPoly(Rat(1)) - GradedPoly::term(1, Rat(1));
            GradedPoly series;
            for (unsigned k = 0; k <= m + 1; ++k)
                series.add_term(static_cast<int>(k),
                                Rat(binomial(static_cast<long>(k) * (n + 1) + m - 1, m - 1)));
            GradedPoly prod = onemt.pow(m) * series;
            for (int j = 0; j < static_cast<int>(m); ++j) gm.add_term(j, prod.coeff(j));
            if (prod.coeff(m) != 0 || prod.coeff(m + 1) != 0) res.g_m_vs_ehrhart = false;
        }
        GradedPoly direct;
        if (m == 1) {
            direct = GradedPoly(Rat(1));
        } else {
            std::vector<LatticeVec> verts{LatticeVec(m - 1, Int(0))};
            for (unsigned i = 0; i + 1 < m; ++i) {
                LatticeVec e(m - 1, Int(0));
                e[i] = Int(n + 1);
                verts.push_back(std::move(e));
            }
            direct = ehrhart_s(Polytope(std::move(verts)));
        }
        if (!(gm == direct)) res.g_m_vs_ehrhart = false;
    }

    // (iv) F(t) = (1+t+...+t^{n-1})^{n+1}.
    {
        GradedPoly f;
        GradedPoly onemt_np1 = GradedPoly(Rat(1)) - GradedPoly::term(static_cast<int>(n) + 1, Rat(1));
        for (unsigned j = 0; j < n; ++j) {
            GradedPoly inner;
            for (unsigned i = j; i < n; ++i) inner += onemt_np1.pow(i);
            int sign = ((n - j - 1) % 2 == 0) ? 1 : -1;
            f += (Rat(sign) * Rat(binomial(n + 1, j))) * inner.divide_one_minus_t(j);
        }
        res.f_closed_form = (f == geometric_sum(n).pow(n + 1));
    }

    if (n <= 5) {
        res.poset_identities_ran = true;
        HodgeData hd(pn_polytope(n));
        const EulerianPoset& p = hd.faces().poset();
        size_t top = p.top();

        GradedPoly lhs_h, lhs_g, rhs_g;
        for (size_t a = 0; a < p.size(); ++a) {
            if (a == top) continue;
            GradedPoly sa = s_a_polynomial(hd, a);
            lhs_h += sa * hd.stanley().h_dual(a, top).substitute_power(2);
            lhs_g += sa * hd.stanley().g_dual(a, top).substitute_power(2);
            int sign = (static_cast<int>(n) - p.rank(a)) % 2 == 0 ? 1 : -1;
            rhs_g += Rat(sign) *
                     (hd.s_face(a).substitute_power(2) * hd.stanley().g(a, top).substitute_power(2));
        }
        res.multiplicities_vs_h = (lhs_h == hd.s_face(top).substitute_power(2));
        res.multiplicities_vs_g = (lhs_g == rhs_g);

        GradedPoly rs = rank_series(hd);
        std::vector<Int> a_nums = a_numbers(n);
        bool match = true;
        Rat total = 0;
        for (const auto& [e, c] : rs.coeffs()) total += c;
        for (unsigned i = 0; i < n; ++i)
            if (rs.coeff(2 * static_cast<int>(i)) != Rat(a_nums[i])) match = false;
        if (rs.degree() > 2 * static_cast<int>(n - 1)) match = false;
        if (total != Rat(nu(n))) match = false;
        res.rank_equals_a_numbers = match;
    }
    return res;
}

}  // namespace reflex
