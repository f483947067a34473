#pragma once

#include <map>
#include <memory>

#include "reflex/geom.hpp"
#include "reflex/poly.hpp"
#include "reflex/poset.hpp"
#include "reflex/tri.hpp"

namespace reflex {

// (1-t)^d times the Ehrhart series of a full-dimensional lattice polytope in
// R^{d-1}, computed from the dilate counts k = 0..d; the degree-d coefficient
// must vanish and is asserted.
GradedPoly ehrhart_s(const Polytope& p);

// Face lattice of one polytope together with the memoized polynomial data
// every decomposition-theorem sum needs.
class HodgeData {
  public:
    explicit HodgeData(Polytope p)
        : fp_(std::move(p)), stanley_(std::make_unique<StanleyCache>(fp_.poset())) {}
    HodgeData(const HodgeData&) = delete;

    const Polytope& polytope() const { return fp_.polytope(); }
    const FacePoset& faces() const { return fp_; }
    StanleyCache& stanley() { return *stanley_; }

    // S(face_a, t): 1 for the empty face and vertices.
    const GradedPoly& s_face(size_t a);

    // sum_{c <= a} S(face_c, s) (-1)^{rho(a)-rho(c)} G([c,a], s), one formal
    // variable; the multiplicity polynomial S_a is this at s = t^2.
    const GradedPoly& s_tilde(size_t a);

  private:
    FacePoset fp_;
    std::unique_ptr<StanleyCache> stanley_;
    std::map<size_t, GradedPoly> s_face_memo_, s_tilde_memo_;
};

// Multiplicity polynomial S_a(t) (even exponents).
GradedPoly s_a_polynomial(HodgeData& hd, size_t a);

// Number of (rank(face)-ell-1)-dimensional cells of the triangulation induced
// on the face that do not lie in the face's boundary.
Int d_ell_counts(const Triangulation& t, const FacePoset& fp, size_t face, int ell);

// sum_ell d_ell (t^2-1)^ell; equals S(face, t^2).
GradedPoly fiber_poincare(const Triangulation& t, const FacePoset& fp, size_t face);

// delta via the alternating d_0 sum over subfaces (triangulation route).
Int delta_multiplicity(const Triangulation& t, const FacePoset& fp, size_t face);

// delta via S_a(1) (poset route, triangulation-independent).
Int delta_from_poset(HodgeData& hd, size_t face);

// sum_a t^{-2} (-1)^{n+1-rho(a)} S(face_a, t^2) G([a,1],t^2); the singular
// part must cancel, leaving the graded rank generating polynomial.
GradedPoly rank_series(HodgeData& hd);
GradedPoly rank_series(const Polytope& reflexive);

// Box-counting numbers a(i(n+1)): coefficients of (1+t+...+t^{n-1})^{n+1}.
std::vector<Int> a_numbers(unsigned n);

// n/(n+1) (n^n - (-1)^n).
Int nu(unsigned n);

// sum_a t^{-1} (-1)^{rho(a)} S(face_a, t) G([a,1],t).
GradedPoly e_van_series(HodgeData& hd);

// String-theoretic E-polynomial of the mirror family via the face-pairing
// between the polytope and its dual.
Poly2 string_e_polynomial(HodgeData& hd);

struct IdentitySuiteResult {
    bool multiplicities_vs_h = false;  // sum S_a H([a,1]*,t^2) = S(poly, t^2)
    bool multiplicities_vs_g = false;  // sum S_a G([a,1]*,t^2) = alternating S G sum
    bool g_m_vs_ehrhart = false;       // g_m(t) matches dilated-simplex data
    bool f_closed_form = false;        // F(t) = (1+...+t^{n-1})^{n+1}
    bool rank_equals_a_numbers = false;
    bool poset_identities_ran = false;  // first two and the last need n <= 5
    bool all() const {
        bool base = g_m_vs_ehrhart && f_closed_form;
        if (!poset_identities_ran) return base;
        return base && multiplicities_vs_h && multiplicities_vs_g && rank_equals_a_numbers;
    }
};

IdentitySuiteResult identity_suite(unsigned n);

}  // namespace reflex
