#ifndef CT2_BASE_MATZ_HPP
#define CT2_BASE_MATZ_HPP

#include <optional>
#include <vector>

#include "base/ints.hpp"

namespace ct2 {

// Dense integer matrix, row-major.
struct ZMat {
    size_t rows = 0, cols = 0;
    std::vector<Int> a;

    ZMat() = default;
    ZMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}
    static ZMat identity(size_t n);

    Int& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Int& at(size_t i, size_t j) const { return a[i * cols + j]; }
    bool operator==(const ZMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    ZMat transpose() const;
};

ZMat operator*(const ZMat& x, const ZMat& y);
std::vector<Int> operator*(const std::vector<Int>& v, const ZMat& m); // row vector * matrix

// Row-style Hermite normal form: returns H (same column count, zero rows
// dropped) with pivots positive, strictly right-steping, and entries above
// each pivot reduced into [0, pivot). If transform != nullptr, *transform is a
// unimodular U with U * A = H_full (H_full includes the zero rows at bottom).
ZMat hnf(const ZMat& A, ZMat* transform = nullptr, size_t* rank_out = nullptr);

// Smith normal form: U*A*V = D. Returns the diagonal entries d_1 | d_2 | ...
// (nonnegative, zeros last). U, V optional.
std::vector<Int> snf(const ZMat& A, ZMat* U = nullptr, ZMat* V = nullptr);

// Determinant (Bareiss), square matrices.
Int det(const ZMat& A);

// Basis of the left kernel {x : x*A = 0} as rows.
ZMat left_kernel(const ZMat& A);

// Solve x*A = b exactly over Z for full-row-rank-spanning A (rows of A
// generate a lattice containing b). Returns nullopt if b is not in the
// row span over Z.
std::optional<std::vector<Int>> solve_left(const ZMat& A, const std::vector<Int>& b);

// Rational dense matrix utilities.
struct QMat {
    size_t rows = 0, cols = 0;
    std::vector<Rat> a;

    QMat() = default;
    QMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}
    static QMat identity(size_t n);
    explicit QMat(const ZMat& m, const Int& den = Int(1));

    Rat& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Rat& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

QMat operator*(const QMat& x, const QMat& y);
std::vector<Rat> operator*(const std::vector<Rat>& v, const QMat& m);

QMat inverse(const QMat& A);              // throws internal on singular
Rat det(const QMat& A);
// Solve x*A = b over Q (A square invertible).
std::vector<Rat> solve_left(const QMat& A, const std::vector<Rat>& b);

// Write a rational matrix as (integer matrix, common denominator > 0).
void to_int_den(const QMat& A, ZMat& M, Int& den);

} // namespace ct2

#endif
