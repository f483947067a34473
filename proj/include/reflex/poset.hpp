#pragma once

#include <map>
#include <vector>

#include "reflex/arith.hpp"
#include "reflex/poly.hpp"

namespace reflex {

// Finite bounded graded poset. Elements are 0..size-1; the order relation and
// a rank function are supplied at construction and validated (unique bottom
// and top, covers raise rank by exactly one, so all maximal chains have equal
// length).
class EulerianPoset {
  public:
    EulerianPoset() = default;
    EulerianPoset(std::vector<std::vector<bool>> leq, std::vector<int> rank);

    size_t size() const { return rank_.size(); }
    bool leq(size_t a, size_t b) const { return leq_[a][b]; }
    int rank(size_t a) const { return rank_[a]; }
    size_t bottom() const { return bottom_; }
    size_t top() const { return top_; }
    int rank() const { return rank_[top_]; }

    std::vector<size_t> interval(size_t a, size_t b) const;  // {c : a<=c<=b}

    // Poset with the order reversed (ranks flipped), same element indices.
    EulerianPoset dual() const;

  private:
    std::vector<std::vector<bool>> leq_;
    std::vector<int> rank_;
    size_t bottom_ = 0, top_ = 0;
};

// Mobius function on [a, b]; throws if a, b incomparable.
Int mobius(const EulerianPoset& p, size_t a, size_t b);

bool is_eulerian(const EulerianPoset& p);

// Memoized Stanley G/H data for the intervals of one poset and of its dual.
class StanleyCache {
  public:
    explicit StanleyCache(const EulerianPoset& p) : p_(&p), dual_(p.dual()) {}

    const EulerianPoset& poset() const { return *p_; }

    // H([a,b], t) and G([a,b], t) as in the recursion
    //   H = sum_{a < c <= b} (t-1)^{rho(c)-rho(a)-1} G([c,b], t),
    //   G = tau_{< d/2}((1-t) H).
    GradedPoly h(size_t a, size_t b);
    GradedPoly g(size_t a, size_t b);
    // G and H of the dual interval [a,b]^*.
    GradedPoly g_dual(size_t a, size_t b);
    GradedPoly h_dual(size_t a, size_t b);

  private:
    GradedPoly h_in(const EulerianPoset& p, size_t a, size_t b,
                    std::map<std::pair<size_t, size_t>, GradedPoly>& memo);
    GradedPoly g_in(const EulerianPoset& p, size_t a, size_t b,
                    std::map<std::pair<size_t, size_t>, GradedPoly>& memo);

    const EulerianPoset* p_;
    EulerianPoset dual_;
    std::map<std::pair<size_t, size_t>, GradedPoly> gmemo_, gmemo_dual_;
};

GradedPoly h_polynomial(const EulerianPoset& p);
GradedPoly g_polynomial(const EulerianPoset& p);

// (H - G)/t for rank >= 1; zero for rank 1. Degree <= rank-2, palindromic.
GradedPoly h_lef_polynomial(const EulerianPoset& p);

// Checks sum_{0<=a<=1} G([0,a],t) (-1)^{rk[a,1]} G([a,1]*,t) == 0.
bool stanley_inversion_check(const EulerianPoset& p);

// Convenience Eulerian posets for tests: boolean lattice of rank n; a chain.
EulerianPoset boolean_lattice(unsigned n);
EulerianPoset chain_poset(unsigned length);

}  // namespace reflex
