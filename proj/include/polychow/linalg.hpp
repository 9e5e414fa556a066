#ifndef POLYCHOW_LINALG_HPP
#define POLYCHOW_LINALG_HPP

#include <optional>
#include <vector>

#include "polychow/matrix.hpp"

namespace polychow {

// Rank over Q via Bareiss fraction-free elimination on a
// denominator-cleared copy.
size_t rank_q(const QMat& m);
size_t rank_z(const ZMat& m);

// Right-kernel basis: each v satisfies m . v = 0 (v as column vector).
// Vectors are indexed by the free columns of the echelon form in
// increasing order, with v[free column] = 1; count = cols - rank.
std::vector<QVec> kernel_basis(const QMat& m);

// Reduced row echelon form with the pivot rule "leftmost column,
// first usable row"; returns pivot column indices in order.
struct Rref {
    QMat r;
    std::vector<size_t> pivots;
};
Rref rref(const QMat& m);

// Row-style Hermite normal form: h = u * m with u unimodular, pivots
// positive and strictly right of the pivots above, entries above a
// pivot reduced into [0, pivot), zero rows at the bottom.
struct Hnf {
    ZMat h;
    ZMat u;
};
Hnf hnf(const ZMat& m);

// Smith normal form: s = u * m * v diagonal, d_1 | d_2 | ..., d_i >= 0.
struct Snf {
    ZMat s;
    ZMat u;
    ZMat v;
    std::vector<Int> divisors() const;  // nonzero diagonal entries
};
Snf snf(const ZMat& m);

Int det(const ZMat& m);

// Divides by the content; the zero vector has no primitive direction.
ZVec primitive(const ZVec& v);

// Basis (HNF rows) of the smallest saturated sublattice containing the
// row span: (Q-span of rows) intersected with Z^cols.
ZMat saturation(const ZMat& m);

// Basis (HNF rows) of { x in Z^cols : m . x = 0 }.  Always saturated.
ZMat integer_kernel(const ZMat& m);

// Exact inverse of a unimodular matrix; errors otherwise.
ZMat inverse_unimodular(const ZMat& m);

// Data of N -> N / span(sub): `projection` maps ambient column vectors
// to quotient coordinates; its rows are simultaneously the canonical
// basis of the annihilator of sub inside the dual lattice, so quotient
// coordinate i of x equals the pairing of dual basis vector i with x.
struct QuotientLattice {
    size_t ambient_rank = 0;
    ZMat sub_basis;    // saturation of the input, HNF rows
    size_t quotient_rank = 0;
    ZMat projection;   // quotient_rank x ambient_rank
    ZMat dual_basis;   // same rows as projection

    QVec project(const QVec& x) const;
    ZVec project(const ZVec& x) const;
};

// `sub` rows must be independent (they need not be primitive or
// saturated); the quotient is taken by the saturation, so it is a
// lattice of rank ambient_rank - sub.rows().
QuotientLattice quotient_lattice(size_t ambient_rank, const ZMat& sub);

bool in_row_space(const QMat& m, const QVec& v);

// Unique solution of a square nonsingular system a . x = b, or nullopt
// when a is singular.
std::optional<QVec> solve_square(const QMat& a, const QVec& b);

}  // namespace polychow

#endif
