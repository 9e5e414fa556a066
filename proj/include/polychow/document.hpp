#ifndef POLYCHOW_DOCUMENT_HPP
#define POLYCHOW_DOCUMENT_HPP

#include <string>
#include <vector>

#include "polychow/complex.hpp"
#include "polychow/divisors.hpp"

namespace polychow {

// Flat JSON-facing description of a complex: coordinate pools plus
// maximal cells as index records.
struct CellRecord {
    std::vector<size_t> vertices;
    std::vector<size_t> rays;
};

struct ComplexDocument {
    size_t lattice_rank = 0;
    std::vector<QVec> vertices;
    std::vector<ZVec> rays;
    std::vector<CellRecord> maximal_cells;
};

// Parse/serialize the document as a JSON object with fields
// lattice_rank, vertices, rays, maximal_cells.  Vertex coordinates are
// integers or strings "p/q"; ray coordinates are integers.  Parse
// errors carry a JSON-path-style location.
ComplexDocument parse_document(const std::string& text);
std::string serialize(const ComplexDocument& d);

// canonical document: pooled vertex/ray coordinates in complex order
ComplexDocument document_of(const PolyhedralComplex& c);

PolyhedralComplex build_from_document(const ComplexDocument& d,
                                      uint64_t audit_seed = PolyhedralComplex::default_audit_seed);

// Companion document for piecewise affine data: a JSON array of
// {cell, m, l} records, one per maximal cell of c, where `cell` is the
// canonical cell index within the complex.
PiecewiseAffine parse_piecewise_affine(const std::string& text, const PolyhedralComplex& c);

}  // namespace polychow

#endif
