#pragma once

#include <map>
#include <string>
#include <utility>

#include "reflex/arith.hpp"

namespace reflex {

// Sparse univariate polynomial over Q. Negative exponents are allowed so the
// same type serves the Laurent intermediates whose singular parts must cancel.
// Zero coefficients are never stored.
class GradedPoly {
  public:
    GradedPoly() = default;
    explicit GradedPoly(const Rat& c) {
        if (c != 0) c_[0] = c;
    }
    static GradedPoly term(int exp, const Rat& c) {
        GradedPoly p;
        if (c != 0) p.c_[exp] = c;
        return p;
    }

    const std::map<int, Rat>& coeffs() const { return c_; }
    Rat coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Rat(0) : it->second;
    }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? 0 : c_.rbegin()->first; }
    int low_degree() const { return c_.empty() ? 0 : c_.begin()->first; }

    void add_term(int e, const Rat& v) {
        if (v == 0) return;
        Rat& r = c_[e];
        r += v;
        if (r == 0) c_.erase(e);
    }

    GradedPoly& operator+=(const GradedPoly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, v);
        return *this;
    }
    GradedPoly& operator-=(const GradedPoly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, -v);
        return *this;
    }
    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
        GradedPoly r;
        for (const auto& [e1, v1] : a.c_)
            for (const auto& [e2, v2] : b.c_) r.add_term(e1 + e2, v1 * v2);
        return r;
    }
    GradedPoly& operator*=(const GradedPoly& o) { return *this = *this * o; }
    friend GradedPoly operator*(const Rat& s, const GradedPoly& a) {
        GradedPoly r;
        if (s == 0) return r;
        for (const auto& [e, v] : a.c_) r.c_[e] = s * v;
        return r;
    }
    friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
        return a.c_ == b.c_;
    }

    GradedPoly pow(unsigned k) const {
        GradedPoly r(Rat(1));
        for (unsigned i = 0; i < k; ++i) r *= *this;
        return r;
    }

    // Keeps exponents strictly below r.
    GradedPoly truncate_below(int r) const {
        GradedPoly p;
        for (const auto& [e, v] : c_)
            if (e < r) p.c_[e] = v;
        return p;
    }

    // t -> t^k.
    GradedPoly substitute_power(int k) const {
        GradedPoly p;
        for (const auto& [e, v] : c_) p.c_[e * k] = v;
        return p;
    }

    GradedPoly shift(int k) const {  // multiply by t^k
        GradedPoly p;
        for (const auto& [e, v] : c_) p.c_[e + k] = v;
        return p;
    }

    // t -> 1/t.
    GradedPoly reciprocal() const { return substitute_power(-1); }

    Rat eval(const Rat& t) const;

    // Exact division by (1 - t)^k; throws if not divisible.
    GradedPoly divide_one_minus_t(unsigned k) const;

    bool is_palindromic(int d) const {  // p(t) == t^d p(1/t)
        return *this == reciprocal().shift(d);
    }
    bool integral() const {
        for (const auto& [e, v] : c_)
            if (v.get_den() != 1) return false;
        return true;
    }
    bool nonnegative() const {
        for (const auto& [e, v] : c_)
            if (v < 0) return false;
        return true;
    }

    std::string str(const std::string& var = "t") const;

  private:
    std::map<int, Rat> c_;
};

// Small dense-enough bivariate polynomial over Q, Laurent in both variables.
class Poly2 {
  public:
    Poly2() = default;
    static Poly2 term(int i, int j, const Rat& c) {
        Poly2 p;
        if (c != 0) p.c_[{i, j}] = c;
        return p;
    }
    const std::map<std::pair<int, int>, Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    void add_term(int i, int j, const Rat& v) {
        if (v == 0) return;
        Rat& r = c_[{i, j}];
        r += v;
        if (r == 0) c_.erase({i, j});
    }
    Poly2& operator+=(const Poly2& o) {
        for (const auto& [e, v] : o.c_) add_term(e.first, e.second, v);
        return *this;
    }
    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        Poly2 r;
        for (const auto& [e1, v1] : a.c_)
            for (const auto& [e2, v2] : b.c_)
                r.add_term(e1.first + e2.first, e1.second + e2.second, v1 * v2);
        return r;
    }
    friend bool operator==(const Poly2& a, const Poly2& b) { return a.c_ == b.c_; }

    bool is_symmetric() const {  // p(u,v) == p(v,u)
        for (const auto& [e, v] : c_) {
            auto it = c_.find({e.second, e.first});
            if (it == c_.end() || it->second != v) return false;
        }
        return true;
    }
    bool is_polynomial() const {
        for (const auto& [e, v] : c_)
            if (e.first < 0 || e.second < 0) return false;
        return true;
    }

    // Substitute u = v = t.
    GradedPoly diagonal() const {
        GradedPoly p;
        for (const auto& [e, v] : c_) p.add_term(e.first + e.second, v);
        return p;
    }

    std::string str(const std::string& u = "u", const std::string& v = "v") const;

  private:
    std::map<std::pair<int, int>, Rat> c_;
};

// (1 + t + ... + t^(k-1)).
GradedPoly geometric_sum(unsigned k);

}  // namespace reflex
