#include "reflex/lp.hpp"

namespace reflex {

namespace {

// Dense simplex tableau with explicit basis bookkeeping.
struct Tableau {
    size_t m, n;                    // constraints, columns (without rhs)
    std::vector<std::vector<Rat>> t;  // m rows of n+1 (rhs last)
    std::vector<Rat> obj;           // reduced objective row, n+1 (value last, negated)
    std::vector<size_t> basis;      // basic column per row

    void pivot(size_t pr, size_t pc) {
        std::vector<Rat>& prow = t[pr];
        Rat inv = prow[pc];
        for (auto& v : prow) v /= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == pr || t[i][pc] == 0) continue;
            Rat f = t[i][pc];
            std::vector<Rat>& row = t[i];
            for (size_t j = 0; j <= n; ++j)
                if (prow[j] != 0) row[j] -= f * prow[j];
        }
        if (obj[pc] != 0) {
            Rat f = obj[pc];
            for (size_t j = 0; j <= n; ++j)
                if (prow[j] != 0) obj[j] -= f * prow[j];
        }
        basis[pr] = pc;
    }

    // Returns false on unboundedness. allowed(c) limits entering columns.
    template <typename Allowed>
    bool optimize(Allowed allowed) {
        int degenerate_run = 0;
        while (true) {
            bool bland = degenerate_run > 40;
            size_t pc = n;
            for (size_t j = 0; j < n; ++j) {
                if (!allowed(j) || obj[j] >= 0) continue;
                if (pc == n || (!bland && obj[j] < obj[pc])) pc = j;
                if (bland) break;  // lowest index
            }
            if (pc == n) return true;  // optimal
            size_t pr = m;
            for (size_t i = 0; i < m; ++i) {
                if (t[i][pc] <= 0) continue;
                if (pr == m) { pr = i; continue; }
                Rat a = t[i][n] * t[pr][pc], b = t[pr][n] * t[i][pc];
                if (a < b || (a == b && basis[i] < basis[pr])) pr = i;
            }
            if (pr == m) return false;  // unbounded
            bool degen = (t[pr][n] == 0);
            degenerate_run = degen ? degenerate_run + 1 : 0;
            pivot(pr, pc);
        }
    }
};

}  // namespace

LpResult lp_solve(const std::vector<LpRow>& rows, const std::vector<Rat>& objective) {
    size_t m = rows.size();
    size_t nv = objective.size();
    for (const LpRow& r : rows)
        require(r.coeff.size() == nv, "lp_solve: row width mismatch");

    // Column layout: nv structurals, then one slack/surplus per inequality,
    // then one artificial per row that needs it.
    size_t nslack = 0;
    for (const LpRow& r : rows)
        if (r.rel != Rel::Eq) ++nslack;

    struct RowInfo { Rat sign; };  // +1 keeps rhs >= 0
    std::vector<Rat> sign(m);
    for (size_t i = 0; i < m; ++i) sign[i] = rows[i].rhs < 0 ? Rat(-1) : Rat(1);

    std::vector<size_t> art_of_row(m, SIZE_MAX);
    size_t nart = 0;
    {
        size_t sl = 0;
        for (size_t i = 0; i < m; ++i) {
            Rel rel = rows[i].rel;
            bool flipped = sign[i] < 0;
            bool slack_basic = false;
            if (rel != Rel::Eq) {
                // After flipping, a <= row keeps a nonnegative slack that can
                // start basic; a >= row gets a surplus and needs an artificial.
                Rel eff = rel;
                if (flipped) eff = (rel == Rel::Le) ? Rel::Ge : Rel::Le;
                slack_basic = (eff == Rel::Le);
                ++sl;
            }
            if (!slack_basic) art_of_row[i] = nart++;
        }
        (void)sl;
    }

    size_t ncols = nv + nslack + nart;
    Tableau tb;
    tb.m = m;
    tb.n = ncols;
    tb.t.assign(m, std::vector<Rat>(ncols + 1, Rat(0)));
    tb.basis.assign(m, SIZE_MAX);

    size_t sl = 0;
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < nv; ++j) tb.t[i][j] = sign[i] * rows[i].coeff[j];
        tb.t[i][ncols] = sign[i] * rows[i].rhs;
        if (rows[i].rel != Rel::Eq) {
            Rat s = (rows[i].rel == Rel::Le) ? Rat(1) : Rat(-1);
            tb.t[i][nv + sl] = sign[i] * s;
            if (art_of_row[i] == SIZE_MAX) tb.basis[i] = nv + sl;
            ++sl;
        }
        if (art_of_row[i] != SIZE_MAX) {
            size_t c = nv + nslack + art_of_row[i];
            tb.t[i][c] = 1;
            tb.basis[i] = c;
        }
    }

    // Phase 1: maximize -(sum of artificials).
    if (nart > 0) {
        tb.obj.assign(ncols + 1, Rat(0));
        for (size_t i = 0; i < m; ++i) {
            if (art_of_row[i] == SIZE_MAX) continue;
            for (size_t j = 0; j <= ncols; ++j) tb.obj[j] -= tb.t[i][j];
        }
        for (size_t a = 0; a < nart; ++a) tb.obj[nv + nslack + a] = 0;
        bool ok = tb.optimize([](size_t) { return true; });
        check(ok, "lp_solve: phase 1 unbounded");
        if (tb.obj[ncols] != 0) return {LpStatus::Infeasible, Rat(0), {}};
        // Pivot leftover artificials out of the basis where possible.
        for (size_t i = 0; i < m; ++i) {
            if (tb.basis[i] < nv + nslack) continue;
            size_t pc = ncols;
            for (size_t j = 0; j < nv + nslack; ++j)
                if (tb.t[i][j] != 0) { pc = j; break; }
            if (pc != ncols) tb.pivot(i, pc);
            // else the row is redundant; the artificial stays at value 0.
        }
    }

    // Phase 2.
    tb.obj.assign(ncols + 1, Rat(0));
    for (size_t j = 0; j < nv; ++j) tb.obj[j] = -objective[j];
    for (size_t i = 0; i < m; ++i) {
        if (tb.basis[i] >= nv) continue;
        Rat f = tb.obj[tb.basis[i]];
        if (f == 0) continue;
        for (size_t j = 0; j <= ncols; ++j)
            if (tb.t[i][j] != 0) tb.obj[j] -= f * tb.t[i][j];
    }
    size_t real_cols = nv + nslack;
    bool ok = tb.optimize([&](size_t j) { return j < real_cols; });
    if (!ok) return {LpStatus::Unbounded, Rat(0), {}};

    LpResult res;
    res.status = LpStatus::Optimal;
    res.value = tb.obj[ncols];
    res.x.assign(nv, Rat(0));
    for (size_t i = 0; i < m; ++i)
        if (tb.basis[i] < nv) res.x[tb.basis[i]] = tb.t[i][ncols];
    return res;
}

LpResult lp_solve_free(const std::vector<LpRow>& rows, const std::vector<Rat>& objective) {
    size_t nv = objective.size();
    std::vector<LpRow> split_rows(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        split_rows[i].rel = rows[i].rel;
        split_rows[i].rhs = rows[i].rhs;
        split_rows[i].coeff.resize(2 * nv);
        for (size_t j = 0; j < nv; ++j) {
            split_rows[i].coeff[2 * j] = rows[i].coeff[j];
            split_rows[i].coeff[2 * j + 1] = -rows[i].coeff[j];
        }
    }
    std::vector<Rat> split_obj(2 * nv);
    for (size_t j = 0; j < nv; ++j) {
        split_obj[2 * j] = objective[j];
        split_obj[2 * j + 1] = -objective[j];
    }
    LpResult r = lp_solve(split_rows, split_obj);
    if (r.status == LpStatus::Optimal) {
        std::vector<Rat> x(nv);
        for (size_t j = 0; j < nv; ++j) x[j] = r.x[2 * j] - r.x[2 * j + 1];
        r.x = std::move(x);
    }
    return r;
}

bool lp_feasible_free(const std::vector<LpRow>& rows, std::vector<Rat>* witness) {
    size_t nv = rows.empty() ? 0 : rows[0].coeff.size();
    LpResult r = lp_solve_free(rows, std::vector<Rat>(nv, Rat(0)));
    if (r.status == LpStatus::Optimal && witness) *witness = r.x;
    return r.status == LpStatus::Optimal;
}

}  // namespace reflex
