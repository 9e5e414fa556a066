#include "polychow/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polychow {

bool PolyhedralComplex::cell_is_face_of(size_t face, size_t cell) const {
    const auto& cl = closure_[cell];
    return std::binary_search(cl.begin(), cl.end(), face);
}

std::vector<size_t> PolyhedralComplex::skeleton_indices(size_t k) const {
    std::vector<size_t> out;
    for (size_t i = 0; i < cells_.size(); ++i)
        if (cells_[i].dim() == k) out.push_back(i);
    return out;
}

std::vector<Polyhedron> PolyhedralComplex::skeleton(size_t k) const {
    std::vector<Polyhedron> out;
    for (size_t i : skeleton_indices(k)) out.push_back(cells_[i]);
    return out;
}

size_t PolyhedralComplex::find(const Polyhedron& cell) const {
    for (size_t i = 0; i < cells_.size(); ++i)
        if (cells_[i] == cell) return i;
    return npos;
}

namespace {

// SplitMix64.  The completeness audit derives every sample point from
// this stream: coordinate i of sample s is lo_i + (u mod m_i)/64 where
// u is the next stream value and m_i = 64 (hi_i - lo_i) + 1.
struct SplitMix {
    uint64_t state;
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

bool audit_surjectivity(const PolyhedralComplex& c, uint64_t seed) {
    const size_t n = c.ambient_rank();
    if (n == 0) return true;
    // box: all vertex coordinates widened by 1 plus the largest ray entry
    Int spread = 0;
    QVec lo(n), hi(n);
    bool first = true;
    for (size_t i : c.maximal()) {
        for (const QVec& v : c.cell(i).vertices())
            for (size_t j = 0; j < n; ++j) {
                if (first || v[j] < lo[j]) lo[j] = v[j];
                if (first || v[j] > hi[j]) hi[j] = v[j];
                first = false;
            }
        for (const ZVec& r : c.cell(i).rays())
            for (const Int& x : r)
                if (mpz_cmpabs(spread.get_mpz_t(), x.get_mpz_t()) < 0) spread = abs(x);
    }
    if (first) return false;
    Int pad = spread + 1;
    for (size_t j = 0; j < n; ++j) {
        lo[j] -= Rat(pad);
        hi[j] += Rat(pad);
    }
    SplitMix rng{seed};
    size_t samples = 10 * c.size();
    for (size_t s = 0; s < samples; ++s) {
        QVec x(n);
        for (size_t j = 0; j < n; ++j) {
            Rat width = hi[j] - lo[j];
            Int m = width.get_num() * 64 / width.get_den() + 1;
            Int u(static_cast<unsigned long>(rng.next() >> 16));
            Int off = u % m;
            x[j] = lo[j] + rat(off, Int(64));
        }
        bool covered = false;
        for (size_t i : c.maximal())
            if (contains(c.cell(i), x)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

bool completeness(const PolyhedralComplex& c, uint64_t seed) {
    const size_t n = c.ambient_rank();
    // pure of top dimension
    for (size_t i : c.maximal())
        if (c.cell(i).dim() != n) return false;
    if (c.maximal().empty()) return false;
    if (n == 0) return true;
    // every ridge bounds exactly two maximal cells
    std::vector<size_t> ridge_count(c.size(), 0);
    for (size_t i : c.maximal())
        for (size_t f : c.poset().facets[i]) ++ridge_count[f];
    for (size_t i = 0; i < c.size(); ++i)
        if (c.cell(i).dim() + 1 == n && ridge_count[i] != 2) return false;
    // connected dual graph
    std::map<size_t, size_t> pos;
    for (size_t i : c.maximal()) pos.emplace(i, pos.size());
    std::vector<bool> seen(pos.size(), false);
    std::vector<size_t> stack{0};
    seen[0] = true;
    size_t visited = 1;
    while (!stack.empty()) {
        size_t at = stack.back();
        stack.pop_back();
        size_t cell = c.maximal()[at];
        for (size_t f : c.poset().facets[cell])
            for (size_t nb : c.poset().cofacets[f]) {
                auto it = pos.find(nb);
                if (it == pos.end() || seen[it->second]) continue;
                seen[it->second] = true;
                ++visited;
                stack.push_back(it->second);
            }
    }
    if (visited != pos.size()) return false;
    return audit_surjectivity(c, seed);
}

bool regularity(const PolyhedralComplex& c) {
    // every cone over a cell must be generated by part of a lattice
    // basis; faces inherit this, so the cell cones cover the whole
    // cone complex including the recession copies at height zero
    for (const Polyhedron& cell : c.cells()) {
        const Cone& l = cell.lifted();
        if (l.generators().size() != l.dim()) return false;
        ZMat g(l.generators().size(), l.ambient_rank());
        for (size_t i = 0; i < l.generators().size(); ++i)
            for (size_t j = 0; j < l.ambient_rank(); ++j) g(i, j) = l.generators()[i][j];
        for (const Int& d : snf(g).divisors())
            if (d != 1) return false;
    }
    return true;
}

}  // namespace

PolyhedralComplex build_complex(size_t ambient_rank, const std::vector<Polyhedron>& maximal_cells,
                                uint64_t audit_seed) {
    if (maximal_cells.empty()) throw ValidationError("complex: no cells given");
    for (const Polyhedron& p : maximal_cells)
        if (p.ambient_rank() != ambient_rank)
            throw ValidationError("complex: cell has ambient rank " +
                                  std::to_string(p.ambient_rank()) + ", expected " +
                                  std::to_string(ambient_rank) + ": " + p.str());

    // deduplicate input, drop cells that are faces of other input cells
    std::vector<Polyhedron> input;
    for (const Polyhedron& p : maximal_cells)
        if (std::find(input.begin(), input.end(), p) == input.end()) input.push_back(p);
    std::vector<Polyhedron> top;
    for (size_t i = 0; i < input.size(); ++i) {
        bool proper_face = false;
        for (size_t j = 0; j < input.size() && !proper_face; ++j)
            if (i != j && input[i].dim() < input[j].dim() && is_face_of(input[i], input[j]))
                proper_face = true;
        if (!proper_face) top.push_back(input[i]);
    }

    // pairwise intersections must be common faces
    for (size_t i = 0; i < top.size(); ++i)
        for (size_t j = i + 1; j < top.size(); ++j) {
            auto r = intersect(top[i], top[j]);
            if (!r) continue;
            if (!is_face_of(*r, top[i]) || !is_face_of(*r, top[j]))
                throw ValidationError("complex: cells do not meet in a common face: " +
                                      top[i].str() + " and " + top[j].str() +
                                      " (intersection " + r->str() + ")");
        }

    // face closure
    std::set<Polyhedron> closure;
    for (const Polyhedron& p : top)
        for (size_t d = 0; d <= p.dim(); ++d)
            for (Polyhedron& f : faces(p, d)) closure.insert(std::move(f));

    PolyhedralComplex c;
    c.n_ = ambient_rank;
    c.cells_.assign(closure.begin(), closure.end());
    std::sort(c.cells_.begin(), c.cells_.end());

    const size_t m = c.cells_.size();
    c.poset_.facets.resize(m);
    c.poset_.cofacets.resize(m);
    c.closure_.resize(m);
    for (size_t i = 0; i < m; ++i) {
        const Polyhedron& p = c.cells_[i];
        for (size_t d = 0; d <= p.dim(); ++d)
            for (const Polyhedron& f : faces(p, d)) {
                size_t fi = c.find(f);
                if (fi == PolyhedralComplex::npos)
                    throw std::logic_error("complex: face closure is not closed");
                c.closure_[i].push_back(fi);
                if (d + 1 == p.dim()) {
                    c.poset_.facets[i].push_back(fi);
                    c.poset_.cofacets[fi].push_back(i);
                }
            }
        std::sort(c.closure_[i].begin(), c.closure_[i].end());
    }
    for (size_t i = 0; i < m; ++i)
        if (c.poset_.cofacets[i].empty()) c.maximal_.push_back(i);

    c.reduced_ = true;
    for (const Polyhedron& p : c.cells_)
        for (const QVec& v : p.vertices())
            for (const Rat& x : v)
                if (!is_integral(x)) c.reduced_ = false;

    c.complete_ = completeness(c, audit_seed);
    c.regular_ = c.complete_ && regularity(c);
    return c;
}

void require_complete(const PolyhedralComplex& c, const std::string& op) {
    if (!c.is_complete())
        throw ValidationError(op + ": complex is not complete");
}

void require_regular(const PolyhedralComplex& c, const std::string& op, bool force) {
    require_complete(c, op);
    if (!c.is_regular() && !force)
        throw RegularityError(op + ": complex is not regular (pass force to override)");
}

PolyhedralComplex recession_fan(const PolyhedralComplex& c) {
    require_complete(c, "recession_fan");
    std::vector<Polyhedron> cones;
    for (size_t i : c.maximal()) cones.push_back(cone_polyhedron(recession_cone(c.cell(i))));
    return build_complex(c.ambient_rank(), cones);
}

PolyhedralComplex cone_complex(const PolyhedralComplex& c) {
    require_complete(c, "cone_complex");
    std::vector<Polyhedron> cones;
    for (size_t i : c.maximal()) cones.push_back(cone_polyhedron(c.cell(i).lifted()));
    return build_complex(c.ambient_rank() + 1, cones);
}

std::vector<Polyhedron> skeleton(const PolyhedralComplex& c, size_t k) { return c.skeleton(k); }

namespace {

size_t find_fan_cone(const PolyhedralComplex& fan, const Cone& sigma) {
    for (size_t i = 0; i < fan.size(); ++i)
        if (as_cone(fan.cell(i)) == sigma) return i;
    return PolyhedralComplex::npos;
}

Polyhedron project_polyhedron(const QuotientLattice& q, const Polyhedron& p) {
    std::vector<QVec> verts;
    for (const QVec& v : p.vertices()) verts.push_back(q.project(v));
    std::vector<ZVec> rays;
    for (const ZVec& r : p.rays()) {
        ZVec img = q.project(r);
        if (std::any_of(img.begin(), img.end(), [](const Int& x) { return x != 0; }))
            rays.push_back(std::move(img));
    }
    return Polyhedron(q.quotient_rank, verts, rays);
}

}  // namespace

StarComplex star_complex(const PolyhedralComplex& c, const Cone& sigma, bool force) {
    require_regular(c, "star_complex", force);
    PolyhedralComplex fan = recession_fan(c);
    if (find_fan_cone(fan, sigma) == PolyhedralComplex::npos)
        throw std::invalid_argument("star_complex: " + sigma.str() +
                                    " is not a recession cone of the complex");
    QuotientLattice q = quotient_lattice(c.ambient_rank(), sigma.span_basis());
    std::vector<Polyhedron> cells;
    for (size_t i : c.maximal()) {
        Cone rc = recession_cone(c.cell(i));
        if (!rc.contains(sigma)) continue;
        cells.push_back(project_polyhedron(q, c.cell(i)));
    }
    return {build_complex(q.quotient_rank, cells), std::move(q)};
}

StarComplex star_fan(const PolyhedralComplex& c, const Polyhedron& cell, bool force) {
    require_regular(c, "star_fan", force);
    size_t at = c.find(cell);
    if (at == PolyhedralComplex::npos)
        throw std::invalid_argument("star_fan: cell not in complex: " + cell.str());
    QuotientLattice q =
        quotient_lattice(c.ambient_rank() + 1, cell.lifted().span_basis());
    std::vector<Polyhedron> cones;
    for (size_t i : c.maximal()) {
        if (!c.cell_is_face_of(at, i)) continue;
        cones.push_back(project_polyhedron(q, cone_polyhedron(c.cell(i).lifted())));
    }
    return {build_complex(q.quotient_rank, cones), std::move(q)};
}

namespace {

// primitive direction of the nonzero images; all of them must agree
ZVec primitive_image(const QuotientLattice& q, const std::vector<ZVec>& gens,
                     const std::string& op) {
    ZVec dir;
    for (const ZVec& g : gens) {
        ZVec img = q.project(g);
        if (std::all_of(img.begin(), img.end(), [](const Int& x) { return x == 0; })) continue;
        ZVec p = primitive(img);
        if (dir.empty())
            dir = p;
        else if (dir != p)
            throw std::invalid_argument(op + ": image is not a single ray");
    }
    if (dir.empty()) throw std::invalid_argument(op + ": image collapses to zero");
    return dir;
}

}  // namespace

ZVec normal_vector(const PolyhedralComplex& c, const Cone& tau, const Cone& sigma) {
    PolyhedralComplex fan = recession_fan(c);
    if (find_fan_cone(fan, tau) == PolyhedralComplex::npos ||
        find_fan_cone(fan, sigma) == PolyhedralComplex::npos)
        throw std::invalid_argument("normal_vector: cones are not in the recession fan");
    if (sigma.dim() != tau.dim() + 1 || !is_face_of(tau, sigma))
        throw std::invalid_argument("normal_vector: " + tau.str() + " is not a facet of " +
                                    sigma.str());
    QuotientLattice q = quotient_lattice(c.ambient_rank(), tau.span_basis());
    return primitive_image(q, sigma.generators(), "normal_vector");
}

QVec vertex_image(const PolyhedralComplex& c, const Polyhedron& gamma, const Cone& tau) {
    if (c.find(gamma) == PolyhedralComplex::npos)
        throw std::invalid_argument("vertex_image: cell not in complex: " + gamma.str());
    if (recession_cone(gamma) != tau)
        throw std::invalid_argument("vertex_image: recession cone of " + gamma.str() +
                                    " differs from " + tau.str());
    QuotientLattice q = quotient_lattice(c.ambient_rank(), tau.span_basis());
    QVec image = q.project(gamma.vertices()[0]);
    for (const QVec& v : gamma.vertices())
        if (q.project(v) != image)
            throw std::invalid_argument("vertex_image: image of " + gamma.str() +
                                        " is not a point");
    for (const ZVec& r : gamma.rays()) {
        ZVec img = q.project(r);
        if (std::any_of(img.begin(), img.end(), [](const Int& x) { return x != 0; }))
            throw std::invalid_argument("vertex_image: image of " + gamma.str() +
                                        " is not a point");
    }
    return image;
}

ZVec edge_normal(const PolyhedralComplex& c, const Polyhedron& cell, const Polyhedron& coface) {
    size_t a = c.find(cell), b = c.find(coface);
    if (a == PolyhedralComplex::npos || b == PolyhedralComplex::npos)
        throw std::invalid_argument("edge_normal: cells not in complex");
    if (coface.dim() != cell.dim() + 1 || !c.cell_is_face_of(a, b))
        throw std::invalid_argument("edge_normal: " + cell.str() + " is not a facet of " +
                                    coface.str());
    QuotientLattice q = quotient_lattice(c.ambient_rank() + 1, cell.lifted().span_basis());
    return primitive_image(q, coface.lifted().generators(), "edge_normal");
}

}  // namespace polychow
