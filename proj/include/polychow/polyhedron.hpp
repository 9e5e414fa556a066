#ifndef POLYCHOW_POLYHEDRON_HPP
#define POLYCHOW_POLYHEDRON_HPP

#include <optional>
#include <string>
#include <vector>

#include "polychow/linalg.hpp"

namespace polychow {

// Strongly convex rational polyhedral cone, stored by its extreme ray
// generators (primitive, lexicographically sorted).  Construction
// canonicalizes arbitrary generating sets: duplicates and non-extreme
// generators are dropped; a cone containing a line is rejected.
//
// Derived data is computed once at construction: the saturated lattice
// basis of the linear span, an integer dual of that basis, covectors
// cutting out the span, and the facet list.  Instances are immutable.
class Cone {
  public:
    Cone(size_t ambient_rank, const std::vector<ZVec>& generators);

    static Cone zero(size_t ambient_rank);

    size_t ambient_rank() const { return n_; }
    size_t dim() const { return dim_; }
    const std::vector<ZVec>& generators() const { return gens_; }

    // span_basis has dim() saturated rows; span_dual satisfies
    // span_basis . span_dual^T = identity, so local coordinates of
    // x in the span are span_dual . x.
    const ZMat& span_basis() const { return span_basis_; }
    const ZMat& span_dual() const { return span_dual_; }
    const ZMat& span_annihilator() const { return span_ann_; }

    struct Facet {
        ZVec normal;                  // ambient covector, >= 0 on the cone
        std::vector<size_t> on_facet; // indices of generators with pairing 0
    };
    const std::vector<Facet>& facets() const { return facets_; }

    bool contains(const QVec& x) const;
    bool contains(const ZVec& x) const;
    bool contains(const Cone& other) const;

    bool operator==(const Cone& o) const {
        return n_ == o.n_ && gens_ == o.gens_;
    }
    bool operator!=(const Cone& o) const { return !(*this == o); }
    bool operator<(const Cone& o) const;  // canonical order

    std::string str() const;

  private:
    size_t n_;
    std::vector<ZVec> gens_;
    size_t dim_ = 0;
    ZMat span_basis_, span_dual_, span_ann_;
    std::vector<Facet> facets_;
};

// All faces, including the cone itself and (for pointed cones of
// positive dimension) the zero cone; sorted canonically.
std::vector<Cone> all_faces(const Cone& c);

std::vector<Cone> faces(const Cone& c, size_t d);

bool is_face_of(const Cone& f, const Cone& c);

// Nonempty rational polyhedron P = conv(vertices) + cone(rays) with a
// strongly convex recession cone, in V-representation.  Vertices are
// irredundant and sorted; rays are primitive, pairwise distinct and
// sorted.  The cone over P in rank n+1 (P at height one) is cached and
// drives all derived computations.
class Polyhedron {
  public:
    Polyhedron(size_t ambient_rank, const std::vector<QVec>& vertices,
               const std::vector<ZVec>& rays);

    size_t ambient_rank() const { return n_; }
    size_t dim() const { return lifted_.dim() - 1; }
    const std::vector<QVec>& vertices() const { return vertices_; }
    const std::vector<ZVec>& rays() const { return rays_; }

    // cone over P: generators (v,1) cleared to primitive integer
    // vectors together with (r,0)
    const Cone& lifted() const { return lifted_; }

    // saturated basis of the direction lattice of the affine span
    const ZMat& direction_lattice() const { return directions_; }

    bool operator==(const Polyhedron& o) const {
        return n_ == o.n_ && vertices_ == o.vertices_ && rays_ == o.rays_;
    }
    bool operator!=(const Polyhedron& o) const { return !(*this == o); }
    bool operator<(const Polyhedron& o) const;  // dim, then vertex/ray key

    std::string str() const;

  private:
    size_t n_;
    std::vector<QVec> vertices_;
    std::vector<ZVec> rays_;
    Cone lifted_;
    ZMat directions_;
};

std::vector<Polyhedron> faces(const Polyhedron& p, size_t d);

Cone recession_cone(const Polyhedron& p);

const Cone& cone_over(const Polyhedron& p);

// Halfspace data of a full-dimensional polyhedron: P is the set of x
// with <u, x> + a >= 0 over all facets; u primitive, sorted.
struct FacetHalfspace {
    ZVec u;
    Rat a;
};
std::vector<FacetHalfspace> facet_presentation(const Polyhedron& p);

// Smallest t >= 1 such that t * (affine span of p) meets the integer
// lattice.
Int multiplicity(const Polyhedron& p);

bool contains(const Polyhedron& p, const QVec& x);

// Empty intersections yield nullopt.
std::optional<Polyhedron> intersect(const Polyhedron& p, const Polyhedron& q);

bool is_face_of(const Polyhedron& f, const Polyhedron& p);

// slice of a cone in rank n+1 at height one: generators with positive
// last coordinate become vertices, height-zero generators become rays;
// nullopt when no generator has positive height.
std::optional<Polyhedron> slice_at_height_one(const Cone& c);

// P regarded as a cone (valid when P has the origin as unique vertex).
Cone as_cone(const Polyhedron& p);

// cone regarded as a polyhedron with vertex 0
Polyhedron cone_polyhedron(const Cone& c);

}  // namespace polychow

#endif
