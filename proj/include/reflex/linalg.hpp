#pragma once

#include <optional>
#include <vector>

#include "reflex/arith.hpp"

namespace reflex {

// Dense matrix over Q. Row-major.
struct QMatrix {
    size_t rows = 0, cols = 0;
    std::vector<std::vector<Rat>> a;

    QMatrix() = default;
    QMatrix(size_t r, size_t c) : rows(r), cols(c), a(r, std::vector<Rat>(c, Rat(0))) {}

    std::vector<Rat>& operator[](size_t i) { return a[i]; }
    const std::vector<Rat>& operator[](size_t i) const { return a[i]; }
};

// Result of row reduction: matrix in reduced row echelon form plus the pivot
// column of each nonzero row.
struct Echelon {
    QMatrix m;
    std::vector<size_t> pivot_cols;
    size_t rank() const { return pivot_cols.size(); }
};

// Gauss-Jordan elimination, exact. rref_parallel shards row updates with
// OpenMP; pivot selection is identical so both produce the same echelon
// form. The serial version is the reference kept for testing. rref picks the
// kernel by size: thread startup costs more than small eliminations.
Echelon rref_serial(QMatrix m);
Echelon rref_parallel(QMatrix m);
Echelon rref(QMatrix m);

size_t qrank(const QMatrix& m);

// Solves m x = rhs; empty optional if inconsistent. Underdetermined systems
// get the solution with all free variables set to zero.
std::optional<std::vector<Rat>> solve(const QMatrix& m, const std::vector<Rat>& rhs);

// Basis of the right kernel over Q.
std::vector<std::vector<Rat>> qkernel(const QMatrix& m);

// Basis of the integer kernel lattice {x in Z^c : m x = 0} of an integer
// matrix, computed by Hermite-style row reduction of the transposed system
// with a unimodular transform. The basis spans the full (saturated) kernel.
std::vector<std::vector<Int>> zkernel(const std::vector<std::vector<Int>>& m);

// Reduces the columns of an integer matrix to Hermite normal form by
// unimodular row operations: returns (H, U) with U * m = H, U unimodular.
void hermite_rows(std::vector<std::vector<Int>> m,
                  std::vector<std::vector<Int>>& h,
                  std::vector<std::vector<Int>>& u);

// Rank of an integer matrix (over Q).
size_t zrank(const std::vector<std::vector<Int>>& m);

// Determinant of a square integer matrix, exact (fraction-free elimination).
Int zdet(std::vector<std::vector<Int>> m);

// Solves m x = rhs over Q for integer input; empty if inconsistent.
std::optional<std::vector<Rat>> zsolve(const std::vector<std::vector<Int>>& m,
                                       const std::vector<Int>& rhs);

}  // namespace reflex
