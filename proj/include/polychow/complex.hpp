#ifndef POLYCHOW_COMPLEX_HPP
#define POLYCHOW_COMPLEX_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "polychow/polyhedron.hpp"

namespace polychow {

// Input violates the complex axioms (face closure, pairwise common
// faces, rank agreement, strong convexity of cells).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation requires a regular complex and the complex is not regular.
struct RegularityError : std::runtime_error {
    explicit RegularityError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FacePoset {
    std::vector<std::vector<size_t>> facets;    // codim-1 faces of each cell
    std::vector<std::vector<size_t>> cofacets;  // cells having i as codim-1 face
};

// Polyhedral complex given by the closure of a set of cells.  Cells are
// stored in canonical order (dimension, then vertex/ray key), which
// fixes every matrix row and column order downstream.  Instances are
// immutable; flags and the face poset are computed at build time.
class PolyhedralComplex {
  public:
    size_t ambient_rank() const { return n_; }
    const std::vector<Polyhedron>& cells() const { return cells_; }
    const Polyhedron& cell(size_t i) const { return cells_[i]; }
    size_t size() const { return cells_.size(); }

    // indices of cells that are not proper faces of another cell
    const std::vector<size_t>& maximal() const { return maximal_; }
    const FacePoset& poset() const { return poset_; }

    // all faces of cell i (as indices, sorted, including i itself)
    const std::vector<size_t>& face_closure(size_t i) const { return closure_[i]; }
    bool cell_is_face_of(size_t face, size_t cell) const;

    bool is_complete() const { return complete_; }
    bool is_regular() const { return regular_; }
    bool is_reduced() const { return reduced_; }

    std::vector<size_t> skeleton_indices(size_t k) const;
    std::vector<Polyhedron> skeleton(size_t k) const;

    // index of an exactly equal cell, or npos
    static constexpr size_t npos = size_t(-1);
    size_t find(const Polyhedron& cell) const;

    static constexpr uint64_t default_audit_seed = 20240917;

  private:
    size_t n_ = 0;
    std::vector<Polyhedron> cells_;
    std::vector<size_t> maximal_;
    FacePoset poset_;
    std::vector<std::vector<size_t>> closure_;
    bool complete_ = false;
    bool regular_ = false;
    bool reduced_ = false;

    PolyhedralComplex() = default;
    friend PolyhedralComplex build_complex(size_t, const std::vector<Polyhedron>&, uint64_t);
};

// Face closure plus validation of the complex axioms; throws
// ValidationError naming an offending pair of cells.  The completeness
// flag combines the structural criteria (pure dimension, two maximal
// cofaces per ridge, connected dual graph) with a randomized surface
// audit driven by the seed.
PolyhedralComplex build_complex(size_t ambient_rank, const std::vector<Polyhedron>& maximal_cells,
                                uint64_t audit_seed = PolyhedralComplex::default_audit_seed);

// Fan of recession cones (cells are cone polyhedra).  Requires a
// complete complex.
PolyhedralComplex recession_fan(const PolyhedralComplex& c);

// Cones over all cells together with the recession fan at height zero;
// a conical complex in rank n+1 supported on the upper halfspace (its
// completeness flag is therefore false).
PolyhedralComplex cone_complex(const PolyhedralComplex& c);

std::vector<Polyhedron> skeleton(const PolyhedralComplex& c, size_t k);

void require_complete(const PolyhedralComplex& c, const std::string& op);
void require_regular(const PolyhedralComplex& c, const std::string& op, bool force);

struct StarComplex {
    PolyhedralComplex complex;
    QuotientLattice lattice;
};

// Star of a recession cone sigma: images of the cells whose recession
// cone contains sigma inside N/span(sigma).
StarComplex star_complex(const PolyhedralComplex& c, const Cone& sigma, bool force = false);

// Star fan of a cell: images of the cones over cells containing the
// cell, inside (N + Z)/span(cone over cell).
StarComplex star_fan(const PolyhedralComplex& c, const Polyhedron& cell, bool force = false);

// Primitive generator of the image of sigma in N/span(tau); tau must be
// a facet of sigma in the recession fan.
ZVec normal_vector(const PolyhedralComplex& c, const Cone& tau, const Cone& sigma);

// Image point of a cell whose recession cone is tau and whose image
// under the tau projection is a single point.
QVec vertex_image(const PolyhedralComplex& c, const Polyhedron& gamma, const Cone& tau);

// Primitive generator of the image of the cone over the coface inside
// the quotient by the cone over the cell; requires a facet pair.
ZVec edge_normal(const PolyhedralComplex& c, const Polyhedron& cell, const Polyhedron& coface);

}  // namespace polychow

#endif
