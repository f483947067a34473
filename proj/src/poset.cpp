#include "reflex/poset.hpp"

#include <algorithm>
#include <bit>

namespace reflex {

EulerianPoset::EulerianPoset(std::vector<std::vector<bool>> leq, std::vector<int> rank)
    : leq_(std::move(leq)), rank_(std::move(rank)) {
    size_t n = rank_.size();
    require(n > 0 && leq_.size() == n, "poset: bad dimensions");
    for (auto& row : leq_) require(row.size() == n, "poset: bad dimensions");
    size_t nbot = 0, ntop = 0;
    for (size_t a = 0; a < n; ++a) {
        require(leq_[a][a], "poset: order not reflexive");
        bool minimal = true, maximal = true;
        for (size_t b = 0; b < n; ++b) {
            if (b != a && leq_[b][a]) minimal = false;
            if (b != a && leq_[a][b]) maximal = false;
            if (leq_[a][b] && leq_[b][a]) require(a == b, "poset: order not antisymmetric");
            if (leq_[a][b]) require(rank_[a] <= rank_[b], "poset: rank not monotone");
        }
        if (minimal) { bottom_ = a; ++nbot; }
        if (maximal) { top_ = a; ++ntop; }
    }
    require(nbot == 1 && ntop == 1, "poset: not bounded");
    require(rank_[bottom_] == 0, "poset: bottom rank nonzero");
    // Graded: covers raise rank by exactly one.
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            if (a == b || !leq_[a][b]) continue;
            bool cover = true;
            for (size_t c = 0; c < n && cover; ++c)
                if (c != a && c != b && leq_[a][c] && leq_[c][b]) cover = false;
            if (cover)
                require(rank_[b] == rank_[a] + 1, "poset: not graded");
        }
}

std::vector<size_t> EulerianPoset::interval(size_t a, size_t b) const {
    std::vector<size_t> r;
    for (size_t c = 0; c < size(); ++c)
        if (leq_[a][c] && leq_[c][b]) r.push_back(c);
    return r;
}

EulerianPoset EulerianPoset::dual() const {
    size_t n = size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    std::vector<int> rank(n);
    int d = rank_[top_];
    for (size_t a = 0; a < n; ++a) {
        rank[a] = d - rank_[a];
        for (size_t b = 0; b < n; ++b) leq[a][b] = leq_[b][a];
    }
    return EulerianPoset(std::move(leq), std::move(rank));
}

namespace {

Int mobius_rec(const EulerianPoset& p, size_t a, size_t b,
               std::map<std::pair<size_t, size_t>, Int>& memo) {
    if (a == b) return 1;
    auto it = memo.find({a, b});
    if (it != memo.end()) return it->second;
    Int s = 0;
    for (size_t c : p.interval(a, b))
        if (c != b) s += mobius_rec(p, a, c, memo);
    memo[{a, b}] = -s;
    return -s;
}

}  // namespace

Int mobius(const EulerianPoset& p, size_t a, size_t b) {
    require(p.leq(a, b), "mobius: incomparable pair");
    std::map<std::pair<size_t, size_t>, Int> memo;
    return mobius_rec(p, a, b, memo);
}

bool is_eulerian(const EulerianPoset& p) {
    std::map<std::pair<size_t, size_t>, Int> memo;
    for (size_t a = 0; a < p.size(); ++a)
        for (size_t b = 0; b < p.size(); ++b) {
            if (!p.leq(a, b)) continue;
            int d = p.rank(b) - p.rank(a);
            Int expect = (d % 2 == 0) ? 1 : -1;
            if (mobius_rec(p, a, b, memo) != expect) return false;
        }
    return true;
}

GradedPoly StanleyCache::h_in(const EulerianPoset& p, size_t a, size_t b,
                              std::map<std::pair<size_t, size_t>, GradedPoly>& memo) {
    int d = p.rank(b) - p.rank(a);
    if (d == 0) return GradedPoly(Rat(1));
    GradedPoly h;
    GradedPoly tm1 = GradedPoly::term(1, Rat(1)) - GradedPoly(Rat(1));
    for (size_t c : p.interval(a, b)) {
        if (c == a) continue;
        h += tm1.pow(static_cast<unsigned>(p.rank(c) - p.rank(a) - 1)) * g_in(p, c, b, memo);
    }
    return h;
}

GradedPoly StanleyCache::g_in(const EulerianPoset& p, size_t a, size_t b,
                              std::map<std::pair<size_t, size_t>, GradedPoly>& memo) {
    auto it = memo.find({a, b});
    if (it != memo.end()) return it->second;
    int d = p.rank(b) - p.rank(a);
    GradedPoly g;
    if (d == 0) {
        g = GradedPoly(Rat(1));
    } else {
        GradedPoly h = h_in(p, a, b, memo);
        GradedPoly onemt = GradedPoly(Rat(1)) - GradedPoly::term(1, Rat(1));
        // tau_{< d/2}
        g = (onemt * h).truncate_below((d + 1) / 2);
    }
    memo[{a, b}] = g;
    return g;
}

GradedPoly StanleyCache::h(size_t a, size_t b) {
    require(p_->leq(a, b), "stanley: incomparable pair");
    return h_in(*p_, a, b, gmemo_);
}
GradedPoly StanleyCache::g(size_t a, size_t b) {
    require(p_->leq(a, b), "stanley: incomparable pair");
    return g_in(*p_, a, b, gmemo_);
}
GradedPoly StanleyCache::g_dual(size_t a, size_t b) {
    require(p_->leq(a, b), "stanley: incomparable pair");
    return g_in(dual_, b, a, gmemo_dual_);
}
GradedPoly StanleyCache::h_dual(size_t a, size_t b) {
    require(p_->leq(a, b), "stanley: incomparable pair");
    return h_in(dual_, b, a, gmemo_dual_);
}

GradedPoly h_polynomial(const EulerianPoset& p) {
    require(is_eulerian(p), "h_polynomial: poset not Eulerian");
    StanleyCache sc(p);
    return sc.h(p.bottom(), p.top());
}

GradedPoly g_polynomial(const EulerianPoset& p) {
    require(is_eulerian(p), "g_polynomial: poset not Eulerian");
    StanleyCache sc(p);
    return sc.g(p.bottom(), p.top());
}

GradedPoly h_lef_polynomial(const EulerianPoset& p) {
    require(p.rank() >= 1, "h_lef: rank 0 poset");
    require(is_eulerian(p), "h_lef: poset not Eulerian");
    if (p.rank() == 1) return GradedPoly();
    StanleyCache sc(p);
    GradedPoly diff = sc.h(p.bottom(), p.top()) - sc.g(p.bottom(), p.top());
    check(diff.coeff(0) == 0, "h_lef: constant term did not cancel");
    return diff.shift(-1);
}

bool stanley_inversion_check(const EulerianPoset& p) {
    require(p.rank() > 0, "stanley_inversion_check: rank 0");
    StanleyCache sc(p);
    GradedPoly sum;
    size_t b0 = p.bottom(), t1 = p.top();
    for (size_t a : p.interval(b0, t1)) {
        int rk = p.rank(t1) - p.rank(a);
        Rat sign = (rk % 2 == 0) ? Rat(1) : Rat(-1);
        sum += sign * (sc.g(b0, a) * sc.g_dual(a, t1));
    }
    return sum.is_zero();
}

EulerianPoset boolean_lattice(unsigned n) {
    size_t sz = size_t(1) << n;
    std::vector<std::vector<bool>> leq(sz, std::vector<bool>(sz));
    std::vector<int> rank(sz);
    for (size_t a = 0; a < sz; ++a) {
        rank[a] = static_cast<int>(std::popcount(a));
        for (size_t b = 0; b < sz; ++b) leq[a][b] = (a & b) == a;
    }
    return EulerianPoset(std::move(leq), std::move(rank));
}

EulerianPoset chain_poset(unsigned length) {
    size_t sz = length + 1;
    std::vector<std::vector<bool>> leq(sz, std::vector<bool>(sz));
    std::vector<int> rank(sz);
    for (size_t a = 0; a < sz; ++a) {
        rank[a] = static_cast<int>(a);
        for (size_t b = a; b < sz; ++b) leq[a][b] = true;
    }
    return EulerianPoset(std::move(leq), std::move(rank));
}

}  // namespace reflex
