#pragma once

#include <map>
#include <vector>

#include "reflex/arith.hpp"
#include "reflex/fan.hpp"
#include "reflex/linalg.hpp"

namespace reflex {

// Element of the graded cohomology ring, stored as exact coordinates in the
// per-degree quotient bases of the ring it belongs to.
struct RingClass {
    std::vector<std::vector<Rat>> coords;  // coords[k] over the degree-k basis

    bool is_zero() const;
    RingClass& operator+=(const RingClass& o);
    RingClass& operator-=(const RingClass& o);
    friend bool operator==(const RingClass& a, const RingClass& b) {
        return a.coords == b.coords;
    }
};

RingClass operator*(const Rat& s, RingClass x);

// Rational cohomology of a smooth complete simplicial fan, presented on
// orbit-closure classes [V(sigma)] per degree modulo the standard divisor
// relations. Divisor indices follow the point convention: D_i for i = 1..p
// is the ray i-1, and D_0 = -sum D_i.
class CohomRing {
  public:
    explicit CohomRing(const Fan& fan);

    size_t ambient_dim() const { return n_; }
    size_t num_divisors() const { return fan_.rays.size(); }  // p
    const std::vector<size_t>& graded_dims() const { return dims_; }
    size_t total_dim() const;

    RingClass zero() const;
    RingClass one() const;

    // Class of the orbit closure of a degree-k cone (sorted ray indices).
    RingClass orbit_class(const Cone& sigma) const;

    // D_i . x for 0 <= i <= p.
    RingClass cup_divisor(const RingClass& x, size_t i) const;

    // Multiplication matrix of -D_0 from degree k to k+1.
    const QMatrix& anticanonical_matrix(size_t k) const { return antican_[k]; }

    const Fan& fan() const { return fan_; }

  private:
    Fan fan_;
    size_t n_ = 0;
    std::vector<std::vector<Cone>> cones_;              // per degree, lex-sorted
    std::vector<std::map<Cone, size_t>> cone_index_;
    std::vector<std::vector<size_t>> basis_;            // free columns per degree
    std::vector<std::vector<std::vector<Rat>>> nf_rows_;  // rref rows per degree
    std::vector<std::vector<size_t>> nf_pivots_;        // pivot col per rref row
    std::vector<size_t> dims_;
    std::vector<std::vector<QMatrix>> mult_;            // mult_[i][k]: D_{i+1} deg k -> k+1
    std::vector<QMatrix> antican_;                      // -D_0 per degree

    std::vector<Rat> normal_form(size_t k, std::vector<Rat> span_vec) const;
    std::vector<Rat> divisor_image_span(size_t k, const Cone& sigma, size_t ray) const;
};

// Total rank and per-degree ranks of cupping with the anticanonical class.
struct CupRank {
    Int total;
    std::vector<size_t> per_degree;
};

CupRank anticanonical_cup_rank(const CohomRing& ring);

// Same ranks computed without materializing the ring: per degree, the rank of
// the induced map on quotients is
//   rank(relations_{k+1} + images) - rank(relations_{k+1}),
// with all matrices kept sparse. Route used at desk scale n = 4.
CupRank anticanonical_cup_rank_sparse(const Fan& fan);

// Rational operator attached to a relation with nonpositive 0-entry: falling
// factorials for negative entries, geometric inversion of (D_i + k) factors
// for positive ones, and the D_0 factor.
RingClass o_ell(const CohomRing& ring, const Relation& ell);

// Naive quotient dimensions: degree-k monomials in D_1..D_p modulo the
// degree-k piece of the ideal (linear relations and Stanley-Reisner
// monomials), by exact rank computation. Cross-validation route; exponential
// in the degree, use at small n / low degree only.
std::vector<size_t> brute_force_graded_dims(const Fan& fan, size_t max_degree);

// Sparse exact rank, shared by the rank-only route.
using SparseRow = std::vector<std::pair<size_t, Rat>>;
size_t sparse_rank(std::vector<SparseRow> rows);

}  // namespace reflex
