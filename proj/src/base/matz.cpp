#include "base/matz.hpp"

#include "base/error.hpp"

namespace ct2 {

ZMat ZMat::identity(size_t n) {
    ZMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZMat ZMat::transpose() const {
    ZMat t(cols, rows);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

ZMat operator*(const ZMat& x, const ZMat& y) {
    check(x.cols == y.rows, errc::internal, "ZMat mul shape");
    ZMat r(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            const Int& v = x.at(i, k);
            if (v == 0) continue;
            for (size_t j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

std::vector<Int> operator*(const std::vector<Int>& v, const ZMat& m) {
    check(v.size() == m.rows, errc::internal, "vec*ZMat shape");
    std::vector<Int> r(m.cols, Int(0));
    for (size_t i = 0; i < m.rows; ++i) {
        if (v[i] == 0) continue;
        for (size_t j = 0; j < m.cols; ++j) r[j] += v[i] * m.at(i, j);
    }
    return r;
}

ZMat hnf(const ZMat& A, ZMat* transform, size_t* rank_out) {
    ZMat H = A;
    ZMat U = ZMat::identity(A.rows);
    size_t r = 0; // current pivot row
    for (size_t j = 0; j < H.cols && r < H.rows; ++j) {
        // Find/produce a pivot in column j at row >= r by gcd elimination.
        size_t piv = r;
        bool any = false;
        for (size_t i = r; i < H.rows; ++i)
            if (H.at(i, j) != 0) {
                piv = i;
                any = true;
                break;
            }
        if (!any) continue;
        std::swap_ranges(H.a.begin() + static_cast<long>(piv * H.cols),
                         H.a.begin() + static_cast<long>((piv + 1) * H.cols),
                         H.a.begin() + static_cast<long>(r * H.cols));
        std::swap_ranges(U.a.begin() + static_cast<long>(piv * U.cols),
                         U.a.begin() + static_cast<long>((piv + 1) * U.cols),
                         U.a.begin() + static_cast<long>(r * U.cols));
        for (size_t i = r + 1; i < H.rows; ++i) {
            while (H.at(i, j) != 0) {
                Int q = fdiv_q(H.at(r, j), H.at(i, j));
                if (q != 0) {
                    for (size_t k = 0; k < H.cols; ++k) H.at(r, k) -= q * H.at(i, k);
                    for (size_t k = 0; k < U.cols; ++k) U.at(r, k) -= q * U.at(i, k);
                }
                for (size_t k = 0; k < H.cols; ++k) std::swap(H.at(r, k), H.at(i, k));
                for (size_t k = 0; k < U.cols; ++k) std::swap(U.at(r, k), U.at(i, k));
            }
        }
        if (H.at(r, j) == 0) continue; // column annihilated entirely (can't happen: we had a pivot)
        if (H.at(r, j) < 0) {
            for (size_t k = 0; k < H.cols; ++k) H.at(r, k) = -H.at(r, k);
            for (size_t k = 0; k < U.cols; ++k) U.at(r, k) = -U.at(r, k);
        }
        // Reduce entries above the pivot into [0, pivot).
        for (size_t i = 0; i < r; ++i) {
            Int q = fdiv_q(H.at(i, j), H.at(r, j));
            if (q != 0) {
                for (size_t k = 0; k < H.cols; ++k) H.at(i, k) -= q * H.at(r, k);
                for (size_t k = 0; k < U.cols; ++k) U.at(i, k) -= q * U.at(r, k);
            }
        }
        ++r;
    }
    if (transform) *transform = U;
    if (rank_out) *rank_out = r;
    // Drop zero rows.
    ZMat out(r, H.cols);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < H.cols; ++j) out.at(i, j) = H.at(i, j);
    return out;
}

std::vector<Int> snf(const ZMat& A, ZMat* Uo, ZMat* Vo) {
    ZMat M = A;
    ZMat U = ZMat::identity(M.rows), V = ZMat::identity(M.cols);
    size_t n = std::min(M.rows, M.cols);
    auto row_op = [&](size_t i1, size_t i2, const Int& q) { // row i1 -= q*row i2
        for (size_t k = 0; k < M.cols; ++k) M.at(i1, k) -= q * M.at(i2, k);
        for (size_t k = 0; k < U.cols; ++k) U.at(i1, k) -= q * U.at(i2, k);
    };
    auto col_op = [&](size_t j1, size_t j2, const Int& q) { // col j1 -= q*col j2
        for (size_t k = 0; k < M.rows; ++k) M.at(k, j1) -= q * M.at(k, j2);
        for (size_t k = 0; k < V.rows; ++k) V.at(k, j1) -= q * V.at(k, j2);
    };
    auto row_swap = [&](size_t i1, size_t i2) {
        for (size_t k = 0; k < M.cols; ++k) std::swap(M.at(i1, k), M.at(i2, k));
        for (size_t k = 0; k < U.cols; ++k) std::swap(U.at(i1, k), U.at(i2, k));
    };
    auto col_swap = [&](size_t j1, size_t j2) {
        for (size_t k = 0; k < M.rows; ++k) std::swap(M.at(k, j1), M.at(k, j2));
        for (size_t k = 0; k < V.rows; ++k) std::swap(V.at(k, j1), V.at(k, j2));
    };

    for (size_t t = 0; t < n; ++t) {
        // Move a nonzero (smallest abs) entry to (t,t).
        size_t bi = t, bj = t;
        bool found = false;
        Int best = 0;
        for (size_t i = t; i < M.rows; ++i)
            for (size_t j = t; j < M.cols; ++j)
                if (M.at(i, j) != 0 && (!found || abs(M.at(i, j)) < best)) {
                    best = abs(M.at(i, j));
                    bi = i;
                    bj = j;
                    found = true;
                }
        if (!found) break;
        if (bi != t) row_swap(bi, t);
        if (bj != t) col_swap(bj, t);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < M.rows; ++i) {
                if (M.at(i, t) == 0) continue;
                Int q = fdiv_q(M.at(i, t), M.at(t, t));
                row_op(i, t, q);
                if (M.at(i, t) != 0) {
                    row_swap(i, t);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < M.cols; ++j) {
                if (M.at(t, j) == 0) continue;
                Int q = fdiv_q(M.at(t, j), M.at(t, t));
                col_op(j, t, q);
                if (M.at(t, j) != 0) {
                    col_swap(j, t);
                    clean = false;
                }
            }
            if (clean) {
                // Divisibility pass: ensure d_t divides everything below-right.
                for (size_t i = t + 1; i < M.rows && clean; ++i)
                    for (size_t j = t + 1; j < M.cols && clean; ++j)
                        if (M.at(i, j) % M.at(t, t) != 0) {
                            // add row i to row t, restart elimination
                            row_op(t, i, Int(-1));
                            clean = false;
                        }
            }
        }
        if (M.at(t, t) < 0) {
            for (size_t k = 0; k < M.cols; ++k) M.at(t, k) = -M.at(t, k);
            for (size_t k = 0; k < U.cols; ++k) U.at(t, k) = -U.at(t, k);
        }
    }
    std::vector<Int> d;
    for (size_t t = 0; t < n; ++t) d.push_back(M.at(t, t));
    if (Uo) *Uo = U;
    if (Vo) *Vo = V;
    return d;
}

Int det(const ZMat& A) {
    check(A.rows == A.cols, errc::internal, "det: not square");
    size_t n = A.rows;
    if (n == 0) return Int(1);
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = A.at(i, j);
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return Int(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) m[i][j] = divexact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

ZMat left_kernel(const ZMat& A) {
    ZMat U;
    size_t rank = 0;
    hnf(A, &U, &rank);
    ZMat K(A.rows - rank, A.rows);
    for (size_t i = rank; i < A.rows; ++i)
        for (size_t j = 0; j < A.rows; ++j) K.at(i - rank, j) = U.at(i, j);
    return K;
}

std::optional<std::vector<Int>> solve_left(const ZMat& A, const std::vector<Int>& b) {
    check(b.size() == A.cols, errc::internal, "solve_left shape");
    ZMat U;
    size_t rank = 0;
    ZMat H = hnf(A, &U, &rank);
    // Reduce b against H rows; track combination.
    std::vector<Int> x(rank, Int(0));
    std::vector<Int> r = b;
    for (size_t i = 0; i < rank; ++i) {
        // pivot col of row i
        size_t pj = 0;
        while (pj < H.cols && H.at(i, pj) == 0) ++pj;
        if (pj == H.cols) continue;
        if (r[pj] % H.at(i, pj) != 0) return std::nullopt;
        Int q = divexact(r[pj], H.at(i, pj));
        if (q != 0)
            for (size_t k = 0; k < H.cols; ++k) r[k] -= q * H.at(i, k);
        x[i] = q;
    }
    for (const auto& v : r)
        if (v != 0) return std::nullopt;
    // x * H = b, H = (U*A truncated to first rank rows) => solution = x * U_top.
    std::vector<Int> out(A.rows, Int(0));
    for (size_t i = 0; i < rank; ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < A.rows; ++j) out[j] += x[i] * U.at(i, j);
    }
    return out;
}

QMat QMat::identity(size_t n) {
    QMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat::QMat(const ZMat& m, const Int& den) : rows(m.rows), cols(m.cols), a(m.rows * m.cols) {
    for (size_t i = 0; i < a.size(); ++i) {
        a[i] = Rat(m.a[i]) / Rat(den);
        a[i].canonicalize();
    }
}

QMat operator*(const QMat& x, const QMat& y) {
    check(x.cols == y.rows, errc::internal, "QMat mul shape");
    QMat r(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            const Rat& v = x.at(i, k);
            if (v == 0) continue;
            for (size_t j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

std::vector<Rat> operator*(const std::vector<Rat>& v, const QMat& m) {
    check(v.size() == m.rows, errc::internal, "vec*QMat shape");
    std::vector<Rat> r(m.cols, Rat(0));
    for (size_t i = 0; i < m.rows; ++i) {
        if (v[i] == 0) continue;
        for (size_t j = 0; j < m.cols; ++j) r[j] += v[i] * m.at(i, j);
    }
    return r;
}

QMat inverse(const QMat& A) {
    check(A.rows == A.cols, errc::internal, "inverse: not square");
    size_t n = A.rows;
    QMat M = A, I = QMat::identity(n);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && M.at(piv, k) == 0) ++piv;
        check(piv < n, errc::internal, "inverse: singular");
        if (piv != k)
            for (size_t j = 0; j < n; ++j) {
                std::swap(M.at(piv, j), M.at(k, j));
                std::swap(I.at(piv, j), I.at(k, j));
            }
        Rat d = M.at(k, k);
        for (size_t j = 0; j < n; ++j) {
            M.at(k, j) /= d;
            I.at(k, j) /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k || M.at(i, k) == 0) continue;
            Rat f = M.at(i, k);
            for (size_t j = 0; j < n; ++j) {
                M.at(i, j) -= f * M.at(k, j);
                I.at(i, j) -= f * I.at(k, j);
            }
        }
    }
    return I;
}

Rat det(const QMat& A) {
    check(A.rows == A.cols, errc::internal, "det: not square");
    size_t n = A.rows;
    QMat M = A;
    Rat d = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && M.at(piv, k) == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != k) {
            for (size_t j = 0; j < n; ++j) std::swap(M.at(piv, j), M.at(k, j));
            d = -d;
        }
        d *= M.at(k, k);
        Rat inv = 1 / M.at(k, k);
        for (size_t i = k + 1; i < n; ++i) {
            if (M.at(i, k) == 0) continue;
            Rat f = M.at(i, k) * inv;
            for (size_t j = k; j < n; ++j) M.at(i, j) -= f * M.at(k, j);
        }
    }
    return d;
}

std::vector<Rat> solve_left(const QMat& A, const std::vector<Rat>& b) {
    return b * inverse(A); // x*A = b  =>  x = b*A^{-1}
}

void to_int_den(const QMat& A, ZMat& M, Int& den) {
    den = 1;
    for (const auto& q : A.a) den = lcm(den, Int(q.get_den()));
    M = ZMat(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) {
        Rat scaled = A.a[i] * Rat(den);
        scaled.canonicalize();
        check(scaled.get_den() == 1, errc::internal, "to_int_den");
        M.a[i] = Int(scaled.get_num());
    }
}

} // namespace ct2
