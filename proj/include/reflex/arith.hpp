#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace reflex {

using Int = mpz_class;
using Rat = mpq_class;

// Lattice point / integer vector. Coordinates are exact.
using LatticeVec = std::vector<Int>;
// Element of the relation lattice L, indexed by the lattice points of a
// polytope (index 0 = origin).
using Relation = std::vector<Int>;

inline void check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

inline void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline Rat make_rat(const Int& num, const Int& den) {
    require(den != 0, "make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline Int ipow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    check(a.size() == b.size(), "dot: size mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dotq(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    check(a.size() == b.size(), "dotq: size mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline LatticeVec vadd(const LatticeVec& a, const LatticeVec& b) {
    check(a.size() == b.size(), "vadd: size mismatch");
    LatticeVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline LatticeVec vsub(const LatticeVec& a, const LatticeVec& b) {
    check(a.size() == b.size(), "vsub: size mismatch");
    LatticeVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline LatticeVec vscale(const Int& c, const LatticeVec& a) {
    LatticeVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool is_zero(const std::vector<Int>& a) {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

inline bool lex_less(const LatticeVec& a, const LatticeVec& b) {
    check(a.size() == b.size(), "lex_less: size mismatch");
    for (size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

inline Int vec_gcd(const std::vector<Int>& a) {
    Int g = 0;
    for (const Int& x : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Scales to a primitive integer vector, preserving direction.
inline std::vector<Int> primitivize(const std::vector<Rat>& v) {
    Int l = 1;
    for (const Rat& q : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> w(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * l;
        check(s.get_den() == 1, "primitivize: not integral after scaling");
        w[i] = s.get_num();
    }
    Int g = vec_gcd(w);
    if (g > 1)
        for (Int& x : w) x /= g;
    return w;
}

inline std::vector<Int> primitivize(const std::vector<Int>& v) {
    std::vector<Int> w = v;
    Int g = vec_gcd(w);
    if (g > 1)
        for (Int& x : w) x /= g;
    return w;
}

inline std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string vec_str(const std::vector<Int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

}  // namespace reflex
