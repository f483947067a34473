#include "reflex/cone.hpp"

#include <algorithm>
#include <set>

#include "reflex/lp.hpp"

namespace reflex {

namespace {

struct Ray {
    std::vector<Int> v;
    std::vector<bool> tight;  // per processed inequality
};

}  // namespace

std::vector<std::vector<Int>> dual_cone_rays(const std::vector<std::vector<Int>>& generators) {
    require(!generators.empty(), "dual_cone_rays: no generators");
    size_t m = generators[0].size();
    for (const auto& g : generators)
        require(g.size() == m, "dual_cone_rays: inconsistent dimension");

    size_t k = generators.size();
    std::vector<std::vector<Rat>> lineality(m);  // start from the whole space
    for (size_t i = 0; i < m; ++i) {
        lineality[i].assign(m, Rat(0));
        lineality[i][i] = 1;
    }
    std::vector<Ray> rays;

    auto dotr = [](const std::vector<Int>& a, const std::vector<Rat>& x) {
        Rat s = 0;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != 0) s += Rat(a[i]) * x[i];
        return s;
    };

    for (size_t ineq = 0; ineq < k; ++ineq) {
        const std::vector<Int>& a = generators[ineq];
        // Try to retire one lineality direction against this halfspace.
        size_t pop = lineality.size();
        for (size_t i = 0; i < lineality.size(); ++i)
            if (dotr(a, lineality[i]) != 0) { pop = i; break; }
        if (pop != lineality.size()) {
            std::vector<Rat> v = lineality[pop];
            Rat av = dotr(a, v);
            if (av < 0)
                for (auto& x : v) x = -x;
            av = dotr(a, v);
            std::vector<std::vector<Rat>> nl;
            for (size_t i = 0; i < lineality.size(); ++i) {
                if (i == pop) continue;
                Rat f = dotr(a, lineality[i]) / av;
                std::vector<Rat> w = lineality[i];
                for (size_t j = 0; j < m; ++j) w[j] -= f * v[j];
                nl.push_back(std::move(w));
            }
            lineality = std::move(nl);
            for (Ray& r : rays) {
                Rat f = dotr(a, std::vector<Rat>(r.v.begin(), r.v.end())) / av;
                std::vector<Rat> w(m);
                for (size_t j = 0; j < m; ++j) w[j] = Rat(r.v[j]) - f * v[j];
                r.v = primitivize(w);
                r.tight.push_back(true);
            }
            Ray nr;
            nr.v = primitivize(v);
            nr.tight.assign(ineq, true);  // was lineality: tight on everything so far
            nr.tight.push_back(false);
            rays.push_back(std::move(nr));
            continue;
        }

        // Standard double description step on the pointed part.
        std::vector<Int> val(rays.size());
        for (size_t i = 0; i < rays.size(); ++i) val[i] = dot(a, rays[i].v);
        std::vector<Ray> next;
        for (size_t i = 0; i < rays.size(); ++i) {
            if (val[i] < 0) continue;
            Ray r = rays[i];
            r.tight.push_back(val[i] == 0);
            next.push_back(std::move(r));
        }
        for (size_t i = 0; i < rays.size(); ++i) {
            if (val[i] <= 0) continue;
            for (size_t j = 0; j < rays.size(); ++j) {
                if (val[j] >= 0) continue;
                // Adjacency: no third ray tight on everything both are tight on.
                std::vector<bool> common(ineq);
                for (size_t t = 0; t < ineq; ++t)
                    common[t] = rays[i].tight[t] && rays[j].tight[t];
                bool adjacent = true;
                for (size_t q = 0; q < rays.size() && adjacent; ++q) {
                    if (q == i || q == j) continue;
                    bool covers = true;
                    for (size_t t = 0; t < ineq && covers; ++t)
                        if (common[t] && !rays[q].tight[t]) covers = false;
                    if (covers) adjacent = false;
                }
                if (!adjacent) continue;
                std::vector<Int> w(m);
                for (size_t t = 0; t < m; ++t)
                    w[t] = val[i] * rays[j].v[t] - val[j] * rays[i].v[t];
                Ray nr;
                nr.v = primitivize(w);
                nr.tight.resize(ineq + 1);
                for (size_t t = 0; t < ineq; ++t) nr.tight[t] = common[t];
                nr.tight[ineq] = true;
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
    }

    std::set<std::vector<Int>> out;
    for (const Ray& r : rays)
        if (!is_zero(r.v)) out.insert(r.v);
    for (const auto& l : lineality) {
        std::vector<Int> v = primitivize(l);
        if (is_zero(v)) continue;
        out.insert(v);
        for (auto& x : v) x = -x;
        out.insert(v);
    }
    std::vector<std::vector<Int>> res(out.begin(), out.end());
    std::sort(res.begin(), res.end(), lex_less);
    return res;
}

bool in_cone_hull(const std::vector<std::vector<Int>>& generators, const std::vector<Int>& x) {
    require(!generators.empty(), "in_cone_hull: no generators");
    size_t m = generators[0].size();
    std::vector<LpRow> rows(m);
    for (size_t i = 0; i < m; ++i) {
        rows[i].rel = Rel::Eq;
        rows[i].rhs = Rat(x[i]);
        rows[i].coeff.resize(generators.size());
        for (size_t g = 0; g < generators.size(); ++g)
            rows[i].coeff[g] = Rat(generators[g][i]);
    }
    LpResult r = lp_solve(rows, std::vector<Rat>(generators.size(), Rat(0)));
    return r.status == LpStatus::Optimal;
}

}  // namespace reflex
