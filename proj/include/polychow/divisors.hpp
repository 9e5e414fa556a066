#ifndef POLYCHOW_DIVISORS_HPP
#define POLYCHOW_DIVISORS_HPP

#include <vector>

#include "polychow/complex.hpp"

namespace polychow {

// Invariant rational Weil divisor: one coefficient per recession ray
// (horizontal part) and one per vertex (vertical part), both in the
// canonical order of the underlying complex.
struct TWeilDivisor {
    std::vector<Rat> horizontal;
    std::vector<Rat> vertical;

    TWeilDivisor operator+(const TWeilDivisor& o) const;
    TWeilDivisor operator-(const TWeilDivisor& o) const;
    bool operator==(const TWeilDivisor& o) const {
        return horizontal == o.horizontal && vertical == o.vertical;
    }
};

// horizontal coefficients followed by vertical ones; this matches the
// generator column order of the relation matrices
QVec coefficient_vector(const TWeilDivisor& d);

TWeilDivisor zero_divisor(const PolyhedralComplex& c);

// The rational function given by a lattice covector and a power of the
// uniformizer (units do not affect divisors and are not modeled).
struct MonomialFunction {
    ZVec m;
    Int ell;
};

// Continuous piecewise affine function: an affine form <m, .> + l per
// maximal cell, validated to agree on every shared face.  Holds a
// reference to the complex, which must outlive the function.
class PiecewiseAffine {
  public:
    PiecewiseAffine(const PolyhedralComplex& c, std::vector<QVec> forms,
                    std::vector<Rat> offsets);

    const PolyhedralComplex& complex() const { return *c_; }
    size_t pieces() const { return forms_.size(); }
    // data of the i-th maximal cell (position in complex().maximal())
    const QVec& form(size_t i) const { return forms_[i]; }
    const Rat& offset(size_t i) const { return offsets_[i]; }

    // value at the vertex with the given complex cell index
    Rat vertex_value(size_t cell_index) const;

    bool operator==(const PiecewiseAffine& o) const {
        return forms_ == o.forms_ && offsets_ == o.offsets_;
    }

  private:
    const PolyhedralComplex* c_;
    std::vector<QVec> forms_;
    std::vector<Rat> offsets_;
};

// primitive generators of the recession rays of the maximal cells,
// deduplicated and sorted; identical to the rays of the recession fan
std::vector<ZVec> recession_rays(const PolyhedralComplex& c);

// Slope data of the recession function on each recession ray; fails
// when two cells disagree on a shared ray direction (possible only for
// non-complete complexes).
struct RecessionFunction {
    std::vector<ZVec> rays;
    std::vector<Rat> slopes;  // value at the primitive generator
};
RecessionFunction recession_function(const PiecewiseAffine& phi);

// D_phi: coefficient -phi(v) at each vertex and -psi(ray generator) at
// each recession ray.
TWeilDivisor divisor_of(const PiecewiseAffine& phi);

// divisor of the monomial function: <m, ray generator> horizontally and
// <m, vertex> + ell vertically
TWeilDivisor principal_divisor(const PolyhedralComplex& c, const MonomialFunction& f);

// Inverse of divisor_of: solve each maximal cell's affine form from the
// prescribed vertex values and ray slopes.  Unique for complete regular
// complexes; inconsistent or underdetermined cell systems are rejected.
PiecewiseAffine function_of(const PolyhedralComplex& c, const TWeilDivisor& d,
                            bool force = false);

// true iff the difference divisor is cut out by a single global affine
// function
bool rationally_equivalent(const PolyhedralComplex& c, const TWeilDivisor& a,
                           const TWeilDivisor& b, bool force = false);

}  // namespace polychow

#endif
