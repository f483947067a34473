#include "reflex/report.hpp"

#include <functional>
#include <sstream>

#include "reflex/cohom.hpp"
#include "reflex/gkz.hpp"
#include "reflex/hodge.hpp"

namespace reflex {

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

Json Report::to_json() const {
    Json j;
    j["inputs"] = inputs;
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json r;
        r["name"] = c.name;
        r["status"] = c.pass ? "pass" : "fail";
        if (!c.expected.empty()) r["expected"] = c.expected;
        if (!c.actual.empty()) r["actual"] = c.actual;
        if (!c.note.empty()) r["note"] = c.note;
        arr.push_back(std::move(r));
    }
    j["checks"] = std::move(arr);
    if (!warnings.empty()) j["warnings"] = warnings;
    j["all_pass"] = all_pass();
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "inputs: " << inputs.dump() << "\n";
    for (const auto& c : checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.expected.empty()) os << "  expected=" << c.expected << " actual=" << c.actual;
        if (!c.note.empty()) os << "  (" << c.note << ")";
        os << "\n";
    }
    for (const auto& w : warnings) os << "warning: " << w << "\n";
    os << (all_pass() ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << "\n";
    return os.str();
}

namespace {

std::string ranks_str(const std::vector<size_t>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string ints_str(const std::vector<Int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

void add(Report& rep, const std::string& name, bool pass, const std::string& expected = "",
         const std::string& actual = "", const std::string& note = "") {
    rep.checks.push_back({name, pass, expected, actual, note});
}

std::vector<size_t> expected_graded_ranks(unsigned n) {
    std::vector<Int> a = a_numbers(n);
    std::vector<size_t> e;
    for (const Int& x : a) e.push_back(static_cast<size_t>(x.get_ui()));
    e.push_back(0);
    return e;
}

void pn_rank_checks(Report& rep, unsigned n, RankRoute route) {
    Int expected_nu = nu(n);
    std::vector<size_t> expected_ranks = expected_graded_ranks(n);

    bool want_ring = (route != RankRoute::Poset);
    if (want_ring && n >= 5) {
        rep.warnings.push_back("ring route disabled for n >= 5 at desk scale");
        want_ring = false;
    }
    if (want_ring) {
        for (int variant = 0; variant < (n <= 3 ? 2 : 1); ++variant) {
            FaceLabeling lab = variant == 0 ? FaceLabeling::Lex : FaceLabeling::Reversed;
            std::string tag = variant == 0 ? "" : ".variant";
            Triangulation t = appendix_triangulation(n, lab);
            Fan f = fan_from_triangulation(t);
            CupRank r = (n <= 3) ? anticanonical_cup_rank(CohomRing(f))
                                 : anticanonical_cup_rank_sparse(f);
            add(rep, "rank.ring.total" + tag, r.total == expected_nu, expected_nu.get_str(),
                r.total.get_str(), n == 4 ? "sparse orbit-closure route" : "");
            add(rep, "rank.ring.graded" + tag, r.per_degree == expected_ranks,
                ranks_str(expected_ranks), ranks_str(r.per_degree));
        }
    }
    if (route != RankRoute::Ring) {
        GradedPoly rs = rank_series(pn_polytope(n));
        Rat total = 0;
        for (const auto& [e, c] : rs.coeffs()) total += c;
        add(rep, "rank.poset.total", total == Rat(expected_nu), expected_nu.get_str(),
            rat_str(total));
        bool graded_ok = true;
        for (unsigned i = 0; i < n; ++i)
            if (rs.coeff(2 * static_cast<int>(i)) != Rat(Int(expected_ranks[i])))
                graded_ok = false;
        add(rep, "rank.poset.graded", graded_ok, ints_str(a_numbers(n)), rs.str());
    }
}

void pn_triangulation_checks(Report& rep, unsigned n) {
    Triangulation t = appendix_triangulation(n);
    Int expected_cells = ipow(Int(n + 1), n);
    add(rep, "tri.cells", Int(t.maximal.size()) == expected_cells, expected_cells.get_str(),
        std::to_string(t.maximal.size()));
    add(rep, "tri.unimodular", is_unimodular(t), "true", is_unimodular(t) ? "true" : "false");
    add(rep, "tri.volume_match", Int(t.maximal.size()) == normalized_volume(pn_polytope(n)),
        "cell count = normalized volume", "");
    CoherenceResult c = coherence_certificate(t);
    add(rep, "tri.coherent", c.coherent, "true", c.coherent ? "true" : "false",
        "exact LP on fold inequalities");
}

void pn_gkz_checks(Report& rep, unsigned n, const Int& bound) {
    GkzSystem sys = build_gkz_system(n, bound);
    rep.inputs["gkz_bound"] = sys.bound.get_str();
    {
        Json om = Json::array();
        for (const auto& w : sys.omega) om.push_back(rat_str(w));
        rep.inputs["gkz_degree_functional"] = om;
    }
    LogSeries s = b_series(sys);
    rep.inputs["gkz_series_terms"] = s.terms.size();

    bool box_ok = true;
    size_t min_checked = SIZE_MAX;
    for (const auto& g : sys.mori.generators) {
        CheckResult r = check_gkz(sys, s, g);
        box_ok = box_ok && r.ok && r.exponents_checked > 0;
        min_checked = std::min(min_checked, r.exponents_checked);
    }
    add(rep, "gkz.box_operators", box_ok, "0", box_ok ? "0" : "nonzero",
        "all " + std::to_string(sys.mori.generators.size()) + " generators, >= " +
            std::to_string(min_checked) + " exponents each");

    CheckResult te = check_torus_euler(sys, s);
    add(rep, "gkz.torus_euler", te.ok, "0", te.ok ? "0" : "nonzero",
        std::to_string(te.exponents_checked) + " exponents");

    CheckResult ex = check_extended(sys, s);
    add(rep, "gkz.extended", ex.ok, "0", ex.ok ? "0" : "nonzero",
        std::to_string(roots(sys.poly).size()) + " roots, >= " +
            std::to_string(ex.exponents_checked) + " exponents each");

    if (n == 1) {
        bool nonzero = false;
        for (const RootDatum& rd : roots(sys.poly))
            if (root_residual_nonzero(sys, s, rd)) nonzero = true;
        add(rep, "gkz.negative_control", nonzero, "nonzero residual before cupping", "");
    }

    // Operator shift identities over the full enumerated Mori set. The
    // index-0 identity carries the extra -1 from the 1/a_0 prefactor.
    bool shift_ok = true;
    std::vector<Relation> pts = mori_points(sys.mori, sys.omega, sys.bound);
    for (const Relation& ell : pts) {
        RingClass oe = o_ell(sys.ring, ell);
        for (size_t i = 0; i < ell.size(); ++i) {
            Rat shift = Rat(ell[i]) - (i == 0 ? 1 : 0);
            RingClass lhs = sys.ring.cup_divisor(oe, i);
            lhs += shift * oe;
            Relation em = ell;
            em[i] -= 1;
            RingClass rhs = o_ell(sys.ring, em);
            rhs -= lhs;
            if (!rhs.is_zero()) shift_ok = false;
        }
    }
    add(rep, "gkz.shift_identity", shift_ok, "0", shift_ok ? "0" : "nonzero",
        std::to_string(pts.size()) + " relations x " + std::to_string(sys.points.size()) +
            " divisor indices");

    CupRank cr = (n <= 3) ? anticanonical_cup_rank(sys.ring)
                          : anticanonical_cup_rank_sparse(sys.fan);
    size_t crank = cupped_coefficient_rank(sys, s);
    add(rep, "gkz.coefficient_rank", Int(crank) == cr.total, cr.total.get_str(),
        std::to_string(crank), "independent coefficient classes after cupping");
}

void pn_identity_checks(Report& rep, unsigned n) {
    IdentitySuiteResult r = identity_suite(n);
    if (r.poset_identities_ran) {
        add(rep, "identity.multiplicities_vs_h", r.multiplicities_vs_h);
        add(rep, "identity.multiplicities_vs_g", r.multiplicities_vs_g);
        add(rep, "identity.rank_equals_a_numbers", r.rank_equals_a_numbers);
    }
    add(rep, "identity.g_m_vs_ehrhart", r.g_m_vs_ehrhart);
    add(rep, "identity.f_closed_form", r.f_closed_form);
    if (n <= 3) {
        HodgeData hd(pn_polytope(n));
        Poly2 est = string_e_polynomial(hd);
        add(rep, "identity.string_e_symmetric", est.is_symmetric());
        rep.inputs["string_e_polynomial"] = poly2_to_json(est);
    }
}

}  // namespace

Report run_pn_verify(unsigned n, const Int& bound, RankRoute route) {
    require(n >= 1 && n <= 5, "pn_verify: n must be between 1 and 5");
    Report rep;
    rep.inputs["n"] = n;
    rep.inputs["bound"] = bound.get_str();
    rep.inputs["route"] = route == RankRoute::Ring    ? "ring"
                          : route == RankRoute::Poset ? "poset"
                                                      : "both";
    pn_rank_checks(rep, n, route);
    if (n <= 4) pn_triangulation_checks(rep, n);
    if (n <= 2) pn_gkz_checks(rep, n, bound);
    pn_identity_checks(rep, n);
    return rep;
}

Report run_polytope_report(const Json& poly_json) {
    Polytope p = polytope_from_json(poly_json);
    Report rep;
    rep.inputs["vertices"] = polytope_to_json(p)["vertices"];
    rep.inputs["dimension"] = p.dim();

    bool reflexive = is_reflexive(p);
    add(rep, "polytope.reflexive", true, "", reflexive ? "true" : "false", "informational");

    FacePoset fp(p);
    std::vector<int> rank_counts(p.dim() + 2, 0);
    for (size_t a = 0; a < fp.size(); ++a) ++rank_counts[fp.rank(a)];
    {
        Json rc = Json::array();
        for (int c : rank_counts) rc.push_back(c);
        rep.inputs["face_rank_counts"] = rc;
    }
    add(rep, "polytope.face_poset_eulerian", is_eulerian(fp.poset()), "true",
        is_eulerian(fp.poset()) ? "true" : "false");

    HodgeData hd(p);
    rep.inputs["ehrhart_s"] = poly_to_json(hd.s_face(fp.top()));
    {
        Json faces = Json::array();
        for (size_t a = 0; a < fp.size(); ++a) {
            Json f;
            f["dim"] = fp.faces()[a].dim;
            Json vs = Json::array();
            for (size_t v : fp.faces()[a].vertex_idx) vs.push_back(v);
            f["vertices"] = vs;
            f["s_polynomial"] = poly_to_json(hd.s_face(a));
            f["s_a"] = poly_to_json(s_a_polynomial(hd, a));
            f["delta"] = delta_from_poset(hd, a).get_str();
            faces.push_back(std::move(f));
        }
        rep.inputs["faces"] = std::move(faces);
    }

    if (reflexive) {
        GradedPoly rs = rank_series(hd);
        rep.inputs["rank_series"] = poly_to_json(rs);
        add(rep, "polytope.rank_series_polynomial", rs.low_degree() >= 0 && rs.integral(),
            "integral polynomial", rs.str());
        if (dual_polytope(p).vertices().size() > 0) {
            rep.inputs["dual_vertices"] = polytope_to_json(dual_polytope(p))["vertices"];
        }
    } else {
        rep.warnings.push_back("polytope is not reflexive: rank series unavailable");
    }
    return rep;
}

Json run_series_dump(unsigned n, const Int& bound) {
    require(n >= 1 && n <= 2, "series_dump: n must be 1 or 2");
    GkzSystem sys = build_gkz_system(n, bound, /*exact_bound=*/true);
    LogSeries s = b_series(sys);
    size_t p1 = sys.points.size();
    Json out;
    out["n"] = n;
    out["bound"] = sys.bound.get_str();
    Json terms = Json::array();
    for (const auto& [d, coeff] : s.terms) {
        Relation ell = d;
        ell[0] += 1;
        // expand log monomials of total degree <= n with nonzero class
        std::vector<unsigned> m(p1, 0);
        std::function<void(size_t, unsigned)> rec = [&](size_t from, unsigned deg) {
            RingClass c = log_coefficient(sys, s, d, m);
            if (!c.is_zero()) {
                Json rec_j;
                rec_j["relation"] = int_vec_to_json(ell);
                Json mono = Json::array();
                for (unsigned x : m) mono.push_back(x);
                rec_j["log_monomial"] = mono;
                Json coords = Json::array();
                for (const auto& degc : c.coords) {
                    Json row = Json::array();
                    for (const Rat& q : degc) row.push_back(rat_str(q));
                    coords.push_back(std::move(row));
                }
                rec_j["ring_class"] = std::move(coords);
                terms.push_back(std::move(rec_j));
            }
            if (deg == sys.poly.dim()) return;
            for (size_t i = from; i < p1; ++i) {
                ++m[i];
                rec(i, deg + 1);
                --m[i];
            }
        };
        rec(0, 0);
    }
    out["terms"] = std::move(terms);
    return out;
}

}  // namespace reflex
