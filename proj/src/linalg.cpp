#include "reflex/linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace reflex {

namespace {

// Shared driver. The eliminate callback clears column `col` from every row
// except `prow` using the (already normalized) pivot row.
template <typename Eliminate>
Echelon rref_impl(QMatrix m, Eliminate eliminate) {
    Echelon e;
    size_t r = 0;
    for (size_t col = 0; col < m.cols && r < m.rows; ++col) {
        size_t p = r;
        while (p < m.rows && m[p][col] == 0) ++p;
        if (p == m.rows) continue;
        std::swap(m.a[p], m.a[r]);
        Rat inv = m[r][col];
        for (size_t j = col; j < m.cols; ++j) m[r][j] /= inv;
        eliminate(m, r, col);
        e.pivot_cols.push_back(col);
        ++r;
    }
    e.m = std::move(m);
    return e;
}

}  // namespace

Echelon rref_serial(QMatrix m) {
    return rref_impl(std::move(m), [](QMatrix& m, size_t r, size_t col) {
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = col; j < m.cols; ++j)
                if (m[r][j] != 0) m[i][j] -= f * m[r][j];
        }
    });
}

Echelon rref_parallel(QMatrix m) {
    return rref_impl(std::move(m), [](QMatrix& m, size_t r, size_t col) {
        const std::vector<Rat>& prow = m[r];
#pragma omp parallel for schedule(dynamic, 8)
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || m[i][col] == 0) continue;
            Rat f = m[i][col];
            std::vector<Rat>& row = m[i];
            for (size_t j = col; j < m.cols; ++j)
                if (prow[j] != 0) row[j] -= f * prow[j];
        }
    });
}

Echelon rref(QMatrix m) {
    if (m.rows * m.cols < 40000) return rref_serial(std::move(m));
    return rref_parallel(std::move(m));
}

size_t qrank(const QMatrix& m) { return rref(m).rank(); }

std::optional<std::vector<Rat>> solve(const QMatrix& m, const std::vector<Rat>& rhs) {
    check(rhs.size() == m.rows, "solve: rhs size mismatch");
    QMatrix aug(m.rows, m.cols + 1);
    for (size_t i = 0; i < m.rows; ++i) {
        for (size_t j = 0; j < m.cols; ++j) aug[i][j] = m[i][j];
        aug[i][m.cols] = rhs[i];
    }
    Echelon e = rref(std::move(aug));
    std::vector<Rat> x(m.cols, Rat(0));
    for (size_t i = 0; i < e.pivot_cols.size(); ++i) {
        if (e.pivot_cols[i] == m.cols) return std::nullopt;  // 0 = 1 row
        x[e.pivot_cols[i]] = e.m[i][m.cols];
    }
    return x;
}

std::vector<std::vector<Rat>> qkernel(const QMatrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(m.cols, Rat(0));
        v[f] = 1;
        for (size_t i = 0; i < e.pivot_cols.size(); ++i)
            v[e.pivot_cols[i]] = -e.m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

void hermite_rows(std::vector<std::vector<Int>> m,
                  std::vector<std::vector<Int>>& h,
                  std::vector<std::vector<Int>>& u) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    u.assign(rows, std::vector<Int>(rows, 0));
    for (size_t i = 0; i < rows; ++i) u[i][i] = 1;

    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        // Euclid on the column entries below r until one survives.
        while (true) {
            size_t best = rows;
            for (size_t i = r; i < rows; ++i)
                if (m[i][col] != 0 &&
                    (best == rows || cmp(abs(m[i][col]), abs(m[best][col])) < 0))
                    best = i;
            if (best == rows) break;
            std::swap(m[best], m[r]);
            std::swap(u[best], u[r]);
            bool cleared = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (m[i][col] == 0) continue;
                Int q = m[i][col] / m[r][col];  // truncated division is fine here
                if (q != 0) {
                    for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
                    for (size_t j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
                }
                if (m[i][col] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (m[r][col] == 0) continue;
        if (m[r][col] < 0) {
            for (size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
            for (size_t j = 0; j < rows; ++j) u[r][j] = -u[r][j];
        }
        // Reduce entries above the pivot.
        for (size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m[i][col].get_mpz_t(), m[r][col].get_mpz_t());
            if (q != 0) {
                for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
                for (size_t j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
            }
        }
        ++r;
    }
    h = std::move(m);
}

std::vector<std::vector<Int>> zkernel(const std::vector<std::vector<Int>>& m) {
    // Kernel of m = left kernel of m^T: rows of U mapping to zero rows of H.
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    std::vector<std::vector<Int>> mt(cols, std::vector<Int>(rows));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) mt[j][i] = m[i][j];
    std::vector<std::vector<Int>> h, u;
    hermite_rows(std::move(mt), h, u);
    std::vector<std::vector<Int>> basis;
    for (size_t i = 0; i < h.size(); ++i)
        if (is_zero(h[i])) basis.push_back(u[i]);
    return basis;
}

size_t zrank(const std::vector<std::vector<Int>>& m) {
    QMatrix q(m.size(), m.empty() ? 0 : m[0].size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < q.cols; ++j) q[i][j] = Rat(m[i][j]);
    return qrank(q);
}

Int zdet(std::vector<std::vector<Int>> m) {
    size_t n = m.size();
    if (n == 0) return 1;
    check(m[0].size() == n, "zdet: not square");
    // Bareiss fraction-free elimination.
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

std::optional<std::vector<Rat>> zsolve(const std::vector<std::vector<Int>>& m,
                                       const std::vector<Int>& rhs) {
    QMatrix q(m.size(), m.empty() ? 0 : m[0].size());
    std::vector<Rat> r(rhs.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < q.cols; ++j) q[i][j] = Rat(m[i][j]);
    for (size_t i = 0; i < rhs.size(); ++i) r[i] = Rat(rhs[i]);
    return solve(q, r);
}

}  // namespace reflex
