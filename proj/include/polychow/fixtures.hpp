#ifndef POLYCHOW_FIXTURES_HPP
#define POLYCHOW_FIXTURES_HPP

#include <string>
#include <vector>

#include "polychow/complex.hpp"

namespace polychow {

// Subdivision of the line with vertices 0..r-1 and both end rays.
PolyhedralComplex fixture_p1(size_t r);

// Line with vertices {0, 1/2, 1}: regular but with a non-lattice vertex.
PolyhedralComplex fixture_p1_half();

// Plane with vertices (0,1), (0,0) and five maximal cells; recession fan
// has rays (1,0), (0,1), (-1,-1).
PolyhedralComplex fixture_p2_model();

// Plane with vertices (0,0), (1,0), (1,1) and eight maximal cells;
// recession fan has rays (1,0), (0,1), (-1,-1), (0,-1).
PolyhedralComplex fixture_blp2_model();

// Fan of projective n-space as a complex with the origin as sole vertex.
PolyhedralComplex fixture_projective(size_t n);

// The recession fan of c regarded as a complex (single vertex at the
// origin); fixed points of this map are exactly the fans.
PolyhedralComplex canonical_model(const PolyhedralComplex& c);

// Dispatch by name: "p1:<r>", "p1-half", "p2-model", "blp2-model",
// "projective:<n>", "canonical:<p1|p2|p3|blp2>".
PolyhedralComplex fixture(const std::string& name);

const std::vector<std::string>& fixture_name_patterns();

}  // namespace polychow

#endif
