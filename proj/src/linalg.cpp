#include "polychow/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace polychow {

QMat to_qmat(const ZMat& m) {
    QMat q(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
    return q;
}

ZMat to_zmat(const QMat& m) {
    ZMat z(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            if (!is_integral(m(i, j))) throw std::invalid_argument("non-integral entry");
            z(i, j) = m(i, j).get_num();
        }
    return z;
}

namespace {

// Bareiss fraction-free elimination to row echelon form.  Returns the
// pivot columns; the transformed matrix keeps exact integer entries
// (every division is exact).  Row swaps pick the first nonzero entry,
// so the result is deterministic.
std::vector<size_t> bareiss(ZMat& m) {
    std::vector<size_t> pivots;
    const size_t rows = m.rows(), cols = m.cols();
    size_t r = 0;
    Int prev = 1;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t p = r;
        while (p < rows && m(p, col) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(p, j));
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < cols; ++j) {
                Int num = m(r, col) * m(i, j) - m(i, col) * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, col) = 0;
        }
        prev = m(r, col);
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

ZMat cleared(const QMat& m) {
    ZMat z(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i) {
        QVec row = m.row(i);
        ZVec c = clear_denominators(row);
        for (size_t j = 0; j < m.cols(); ++j) z(i, j) = c[j];
    }
    return z;
}

}  // namespace

size_t rank_z(const ZMat& m) {
    ZMat w = m;
    return bareiss(w).size();
}

size_t rank_q(const QMat& m) {
    ZMat w = cleared(m);
    return bareiss(w).size();
}

std::vector<QVec> kernel_basis(const QMat& m) {
    ZMat w = cleared(m);
    std::vector<size_t> pivots = bareiss(w);
    const size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (size_t p : pivots) is_pivot[p] = true;

    std::vector<QVec> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVec v(cols, Rat(0));
        v[f] = 1;
        for (size_t i = pivots.size(); i-- > 0;) {
            size_t p = pivots[i];
            Rat s = 0;
            for (size_t j = p + 1; j < cols; ++j)
                if (v[j] != 0) s += Rat(w(i, j)) * v[j];
            v[p] = -s / Rat(w(i, p));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Rref rref(const QMat& m) {
    Rref out{m, {}};
    QMat& a = out.r;
    const size_t rows = a.rows(), cols = a.cols();
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t p = r;
        while (p < rows && a(p, col) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(p, j));
        Rat inv = Rat(1) / a(r, col);
        for (size_t j = col; j < cols; ++j) a(r, j) *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (size_t j = col; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        out.pivots.push_back(col);
        ++r;
    }
    return out;
}

namespace {

void negate_row(ZMat& m, size_t i) {
    for (size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

// row i -= q * row r
void row_axpy(ZMat& m, size_t i, size_t r, const Int& q) {
    if (q == 0) return;
    for (size_t j = 0; j < m.cols(); ++j) m(i, j) -= q * m(r, j);
}

}  // namespace

Hnf hnf(const ZMat& m) {
    Hnf out{m, ZMat::identity(m.rows())};
    ZMat& h = out.h;
    ZMat& u = out.u;
    const size_t rows = h.rows(), cols = h.cols();
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        // Euclidean passes until at most one nonzero remains at or below r.
        for (;;) {
            size_t best = rows;
            for (size_t i = r; i < rows; ++i) {
                if (h(i, col) == 0) continue;
                if (best == rows ||
                    mpz_cmpabs(h(i, col).get_mpz_t(), h(best, col).get_mpz_t()) < 0)
                    best = i;
            }
            if (best == rows) break;
            if (best != r) {
                for (size_t j = 0; j < cols; ++j) std::swap(h(r, j), h(best, j));
                for (size_t j = 0; j < u.cols(); ++j) std::swap(u(r, j), u(best, j));
            }
            bool clean = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (h(i, col) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(r, col).get_mpz_t());
                row_axpy(h, i, r, q);
                row_axpy(u, i, r, q);
                if (h(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (r < rows && h(r, col) != 0) {
            if (h(r, col) < 0) {
                negate_row(h, r);
                negate_row(u, r);
            }
            for (size_t i = 0; i < r; ++i) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(r, col).get_mpz_t());
                row_axpy(h, i, r, q);
                row_axpy(u, i, r, q);
            }
            ++r;
        }
    }
    return out;
}

std::vector<Int> Snf::divisors() const {
    std::vector<Int> d;
    size_t n = std::min(s.rows(), s.cols());
    for (size_t i = 0; i < n; ++i)
        if (s(i, i) != 0) d.push_back(s(i, i));
    return d;
}

namespace {

void col_axpy(ZMat& m, size_t j, size_t c, const Int& q) {
    if (q == 0) return;
    for (size_t i = 0; i < m.rows(); ++i) m(i, j) -= q * m(i, c);
}

void swap_cols(ZMat& m, size_t a, size_t b) {
    for (size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

}  // namespace

namespace {

// One full sweep: diagonal with nonnegative entries, pivots chosen as
// the smallest nonzero absolute value (row-major tie break).
void snf_diagonalize(ZMat& s, ZMat& u, ZMat& v) {
    const size_t rows = s.rows(), cols = s.cols();
    const size_t steps = std::min(rows, cols);
    for (size_t t = 0; t < steps; ++t) {
        for (;;) {
            size_t bi = rows, bj = cols;
            for (size_t i = t; i < rows; ++i)
                for (size_t j = t; j < cols; ++j) {
                    if (s(i, j) == 0) continue;
                    if (bi == rows ||
                        mpz_cmpabs(s(i, j).get_mpz_t(), s(bi, bj).get_mpz_t()) < 0) {
                        bi = i;
                        bj = j;
                    }
                }
            if (bi == rows) return;   // trailing block vanished
            if (bi != t) {
                for (size_t j = 0; j < cols; ++j) std::swap(s(t, j), s(bi, j));
                for (size_t j = 0; j < u.cols(); ++j) std::swap(u(t, j), u(bi, j));
            }
            if (bj != t) {
                swap_cols(s, t, bj);
                swap_cols(v, t, bj);
            }
            bool clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                if (s(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
                row_axpy(s, i, t, q);
                row_axpy(u, i, t, q);
                if (s(i, t) != 0) clean = false;
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (s(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
                col_axpy(s, j, t, q);
                col_axpy(v, j, t, q);
                if (s(t, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (s(t, t) < 0) {
            negate_row(s, t);
            negate_row(u, t);
        }
    }
}

}  // namespace

Snf snf(const ZMat& m) {
    Snf out{m, ZMat::identity(m.rows()), ZMat::identity(m.cols())};
    ZMat& s = out.s;
    for (;;) {
        snf_diagonalize(s, out.u, out.v);
        // Nonzero pivots sit in an initial diagonal segment; fold any
        // chain violation back onto its predecessor and re-sweep.
        size_t r = 0;
        const size_t steps = std::min(s.rows(), s.cols());
        while (r < steps && s(r, r) != 0) ++r;
        bool dirty = false;
        for (size_t t = 0; t + 1 < r && !dirty; ++t)
            for (size_t j = t + 1; j < r && !dirty; ++j)
                if (s(j, j) % s(t, t) != 0) {
                    row_axpy(s, t, j, Int(-1));
                    row_axpy(out.u, t, j, Int(-1));
                    dirty = true;
                }
        if (!dirty) return out;
    }
}

Int det(const ZMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    if (m.rows() == 0) return 1;
    ZMat w = m;
    const size_t n = w.rows();
    Int prev = 1;
    int sign = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t p = col;
        while (p < n && w(p, col) == 0) ++p;
        if (p == n) return 0;
        if (p != col) {
            for (size_t j = 0; j < n; ++j) std::swap(w(col, j), w(p, j));
            sign = -sign;
        }
        for (size_t i = col + 1; i < n; ++i) {
            for (size_t j = col + 1; j < n; ++j) {
                Int num = w(col, col) * w(i, j) - w(i, col) * w(col, j);
                mpz_divexact(w(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            w(i, col) = 0;
        }
        prev = w(col, col);
    }
    return sign > 0 ? w(n - 1, n - 1) : Int(-w(n - 1, n - 1));
}

ZVec primitive(const ZVec& v) {
    Int g = 0;
    for (const Int& x : v) {
        Int t;
        mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        g = t;
    }
    if (g == 0) throw std::invalid_argument("primitive: zero vector");
    ZVec out;
    out.reserve(v.size());
    for (const Int& x : v) {
        Int q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        out.push_back(q);
    }
    return out;
}

namespace {

ZMat nonzero_rows_hnf(const ZMat& m) {
    Hnf h = hnf(m);
    size_t r = 0;
    for (size_t i = 0; i < h.h.rows(); ++i) {
        bool zero = true;
        for (size_t j = 0; j < h.h.cols(); ++j)
            if (h.h(i, j) != 0) {
                zero = false;
                break;
            }
        if (!zero) r = i + 1;
    }
    ZMat out(r, m.cols());
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < m.cols(); ++j) out(i, j) = h.h(i, j);
    return out;
}

}  // namespace

ZMat saturation(const ZMat& m) {
    if (m.rows() == 0) return ZMat(0, m.cols());
    Snf f = snf(m);
    size_t r = f.divisors().size();
    ZMat vinv = inverse_unimodular(f.v);
    // m = u^-1 s v^-1, so the row span over Q meets Z^n in the span of
    // the first r rows of v^-1.
    ZMat basis(r, m.cols());
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < m.cols(); ++j) basis(i, j) = vinv(i, j);
    return nonzero_rows_hnf(basis);
}

ZMat integer_kernel(const ZMat& m) {
    Hnf f = hnf(m.transpose());
    size_t rank = 0;
    for (size_t i = 0; i < f.h.rows(); ++i)
        for (size_t j = 0; j < f.h.cols(); ++j)
            if (f.h(i, j) != 0) {
                rank = i + 1;
                break;
            }
    size_t n = m.cols();
    ZMat ker(n - rank, n);
    for (size_t i = rank; i < n; ++i)
        for (size_t j = 0; j < n; ++j) ker(i - rank, j) = f.u(i, j);
    return nonzero_rows_hnf(ker);
}

ZMat inverse_unimodular(const ZMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    Hnf f = hnf(m);
    if (f.h != ZMat::identity(m.rows()))
        throw std::invalid_argument("inverse: matrix is not unimodular");
    return f.u;
}

QVec QuotientLattice::project(const QVec& x) const {
    if (x.size() != ambient_rank) throw std::invalid_argument("project: length mismatch");
    QVec out(quotient_rank, Rat(0));
    for (size_t i = 0; i < quotient_rank; ++i)
        for (size_t j = 0; j < ambient_rank; ++j) out[i] += Rat(projection(i, j)) * x[j];
    return out;
}

ZVec QuotientLattice::project(const ZVec& x) const {
    if (x.size() != ambient_rank) throw std::invalid_argument("project: length mismatch");
    ZVec out(quotient_rank, Int(0));
    for (size_t i = 0; i < quotient_rank; ++i)
        for (size_t j = 0; j < ambient_rank; ++j) out[i] += projection(i, j) * x[j];
    return out;
}

QuotientLattice quotient_lattice(size_t ambient_rank, const ZMat& sub) {
    if (sub.rows() > 0 && sub.cols() != ambient_rank)
        throw std::invalid_argument("quotient_lattice: ambient rank mismatch");
    ZMat sub_n = sub.rows() == 0 ? ZMat(0, ambient_rank) : sub;
    if (rank_z(sub_n) != sub_n.rows())
        throw std::invalid_argument("quotient_lattice: dependent rows");
    QuotientLattice q;
    q.ambient_rank = ambient_rank;
    q.sub_basis = saturation(sub_n);
    q.quotient_rank = ambient_rank - q.sub_basis.rows();
    q.dual_basis = integer_kernel(q.sub_basis);
    q.projection = q.dual_basis;
    return q;
}

bool in_row_space(const QMat& m, const QVec& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("in_row_space: length mismatch");
    QMat ext = m;
    ext.append_row(v);
    return rank_q(m) == rank_q(ext);
}

std::optional<QVec> solve_square(const QMat& a, const QVec& b) {
    if (a.rows() != a.cols() || b.size() != a.rows())
        throw std::invalid_argument("solve_square: shape mismatch");
    QMat w = a;
    QVec rhs = b;
    const size_t n = w.rows();
    for (size_t col = 0; col < n; ++col) {
        size_t p = col;
        while (p < n && w(p, col) == 0) ++p;
        if (p == n) return std::nullopt;
        if (p != col) {
            for (size_t j = 0; j < n; ++j) std::swap(w(col, j), w(p, j));
            std::swap(rhs[col], rhs[p]);
        }
        Rat inv = Rat(1) / w(col, col);
        for (size_t j = col; j < n; ++j) w(col, j) *= inv;
        rhs[col] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || w(i, col) == 0) continue;
            Rat f = w(i, col);
            for (size_t j = col; j < n; ++j) w(i, j) -= f * w(col, j);
            rhs[i] -= f * rhs[col];
        }
    }
    return rhs;
}

}  // namespace polychow
