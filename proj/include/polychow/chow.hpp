#ifndef POLYCHOW_CHOW_HPP
#define POLYCHOW_CHOW_HPP

#include <string>
#include <vector>

#include "polychow/complex.hpp"

namespace polychow {

// Display labels shared by presentations and reports: cones as
// H[ray,ray,...] (H[0] for the origin), cells as V[index].
std::string horizontal_label(const Polyhedron& fan_cell);
std::string vertical_label(size_t cell_index);

// Generators of the homology Chow group in absolute dimension k:
// horizontal orbit closures indexed by cones of the recession fan of
// dimension n-k+1 and vertical ones indexed by cells of dimension n-k.
// Out-of-range k yields empty lists.
struct CycleBasis {
    long k = 0;
    std::vector<size_t> horizontal;  // recession fan cell indices
    std::vector<size_t> vertical;    // complex cell indices
    std::vector<std::string> labels;  // one per generator, horizontal first
    size_t generators() const { return horizontal.size() + vertical.size(); }
};

// Quotient presentation: generators modulo the rows of `relations`.
// Free generators are the non-pivot columns of the reduced row echelon
// form (leftmost-pivot rule); every pivot column carries an expression
// in the free ones.
struct ChowPresentation {
    CycleBasis basis;
    QMat relations;
    size_t rank = 0;
    size_t dim = 0;
    std::vector<size_t> free_generators;
    struct Expression {
        size_t generator;  // pivot column index
        QVec coefficients;  // aligned with free_generators
    };
    std::vector<Expression> expressions;
};

// Coefficients c_0..c_{n+1} of sum_{cones} z^dim (1-z)^(n+1-dim) over
// the cone complex; c_j predicts the Chow dimension in absolute
// dimension n+1-j.
struct RankPolynomial {
    std::vector<Int> coefficients;
    std::string str() const;
    bool operator==(const RankPolynomial& o) const { return coefficients == o.coefficients; }
};

struct RankFormulaCheck {
    bool ok = false;
    RankPolynomial polynomial;
    std::vector<size_t> chow_dims;  // chow_dims[j] = dimension at k = n+1-j
};

// Matrix of the specialization map in absolute dimension k: rows are
// cells of dimension n-k, columns recession cones of dimension n-k;
// the entry is the cell multiplicity when the recession cone matches.
struct SpecializationMatrix {
    long k = 0;
    std::vector<size_t> rows;  // complex cell indices
    std::vector<size_t> cols;  // recession fan cell indices
    ZMat entries;
};

// Shared engine: recession fan, quotient lattices N(sigma) for the fan
// cones and (N+Z)/span(cone over cell) for the cells, and the
// recession-cone index of every cell.  Quotient projections are chosen
// so that pairing a dual-basis element with a vector reads off one
// coordinate of the projected vector.
class ChowData {
  public:
    explicit ChowData(const PolyhedralComplex& c, bool force = false);

    const PolyhedralComplex& complex() const { return c_; }
    const PolyhedralComplex& fan() const { return fan_; }
    size_t rank() const { return c_.ambient_rank(); }

    const QuotientLattice& cone_lattice(size_t fan_index) const { return fan_lat_[fan_index]; }
    const QuotientLattice& cell_lattice(size_t cell_index) const {
        return cell_lat_[cell_index];
    }
    size_t recession_index(size_t cell_index) const { return rec_of_[cell_index]; }

    CycleBasis cycle_basis(long k) const;
    QMat relation_matrix(long k) const;
    size_t chow_dim(long k) const;
    ChowPresentation presentation(long k) const;
    size_t generic_fiber_dim(long k) const;
    size_t special_fiber_dim(long k) const;
    SpecializationMatrix specialize(long k) const;

  private:
    PolyhedralComplex c_;
    PolyhedralComplex fan_;
    std::vector<QuotientLattice> fan_lat_;
    std::vector<QuotientLattice> cell_lat_;
    std::vector<size_t> rec_of_;
};

CycleBasis cycle_basis(const PolyhedralComplex& c, long k, bool force = false);
QMat relation_matrix(const PolyhedralComplex& c, long k, bool force = false);
size_t chow_dim(const PolyhedralComplex& c, long k, bool force = false);
ChowPresentation presentation(const PolyhedralComplex& c, long k, bool force = false);

// Dimension of the Chow group of the generic fiber in absolute
// dimension k (the horizontal sub-presentation).
size_t generic_fiber_dim(const PolyhedralComplex& c, long k, bool force = false);

// Dimension of the vertical sub-presentation in absolute dimension k.
size_t special_fiber_dim(const PolyhedralComplex& c, long k, bool force = false);

// Dimension of the cokernel of the bounded-edge incidence map
// e -> e(first vertex) - e(second vertex); equals 1 for every complete
// complex.  Requires completeness only.
size_t ch0_special_incidence(const PolyhedralComplex& c);

// Exact expansion over the cones of cone_complex(c).
RankPolynomial rank_polynomial(const PolyhedralComplex& c, bool force = false);

// Cross-check of the rank polynomial against the presentation
// dimensions at every k; both sides are computed independently.
RankFormulaCheck verify_rank_formula(const PolyhedralComplex& c, bool force = false);

SpecializationMatrix specialize(const PolyhedralComplex& c, long k, bool force = false);

}  // namespace polychow

#endif
