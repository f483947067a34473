#pragma once

#include <map>
#include <vector>

#include "reflex/cohom.hpp"
#include "reflex/fan.hpp"
#include "reflex/geom.hpp"
#include "reflex/tri.hpp"

namespace reflex {

// Root of the automorphism Lie algebra: an interior lattice point of a facet
// paired with the dual vertex (the facet's primitive normal).
struct RootDatum {
    LatticeVec v;
    LatticeVec u;
    size_t facet = 0;
};

// Interior facet points of a reflexive polytope, facet by facet.
std::vector<RootDatum> roots(const Polytope& p);

// Truncated cohomology-valued series sum_d C_d a^d exp(sum_i log(a_i) D_i).
// The exponential factor is shared and never expanded; term keys are the
// exponents d = ell - e_0 with ell in the Mori set within the bound.
struct LogSeries {
    std::map<Relation, RingClass> terms;

    bool is_zero() const {
        for (const auto& [d, c] : terms)
            if (!c.is_zero()) return false;
        return true;
    }
};

// Everything a truncated-series computation needs: the toric data, the ring,
// the Mori cone with its degree functional, and the truncation bound.
struct GkzSystem {
    std::vector<LatticeVec> points;
    Polytope poly;
    Triangulation tri;
    Fan fan;
    CohomRing ring;
    MoriCone mori;
    std::vector<Rat> omega;
    Int bound;
};

// Degree functional used for the series: the anticanonical degree
// (0,1,...,1) when it is strictly positive on the Mori generators, otherwise
// strictly convex heights from the coherence certificate, rescaled so the
// functional is integral and primitive on the relation lattice.
std::vector<Rat> choose_degree_functional(const MoriCone& mc, const Triangulation& t);

// Smallest bound (>= floor) so that every annihilation check below validates
// all outputs sourced from Mori points of degree <= 2 * (min generator
// degree).
Int suggested_bound(const GkzSystem& sys, const Int& floor_bound);

GkzSystem build_gkz_system(unsigned n, const Int& min_bound, bool exact_bound = false);

LogSeries b_series(const GkzSystem& sys);

// Formal partial derivative with respect to a_i.
LogSeries diff_a(const GkzSystem& sys, const LogSeries& s, size_t i);

// True when the coefficient of a^src in the full (untruncated) series is
// known exactly at this truncation: either the exponent lies outside the
// Mori support or within the bound.
bool source_known(const GkzSystem& sys, const Relation& src_exponent);

struct CheckResult {
    bool ok = false;
    size_t exponents_checked = 0;
};

// Box operator of a relation annihilates the series within the reduced
// truncation window.
CheckResult check_gkz(const GkzSystem& sys, const LogSeries& s, const Relation& ell);

// Torus-invariance and Euler equations; exact on every term.
CheckResult check_torus_euler(const GkzSystem& sys, const LogSeries& s);

// The root operator sum_{v' not in F_i} (<v',u_i>+1) a_{v'} d/d a_{v'+v}.
LogSeries apply_root_operator(const GkzSystem& sys, const LogSeries& s, const RootDatum& rd);

// After cupping with -D_0, every root operator annihilates the series within
// its window.
CheckResult check_extended(const GkzSystem& sys, const LogSeries& s);

// Negative control: the uncupped residual of a root operator is nonzero
// somewhere inside the exact window.
bool root_residual_nonzero(const GkzSystem& sys, const LogSeries& s, const RootDatum& rd);

// Coefficient of a^d (log a)^m in the expanded series: C_d D^m / m!.
RingClass log_coefficient(const GkzSystem& sys, const LogSeries& s, const Relation& d,
                          const std::vector<unsigned>& m);

// Rank of the span of all expanded coefficient classes of s cupped with
// -D_0; must saturate at the anticanonical cup rank.
size_t cupped_coefficient_rank(const GkzSystem& sys, const LogSeries& s);

}  // namespace reflex
