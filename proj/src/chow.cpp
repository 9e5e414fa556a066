#include "polychow/chow.hpp"

#include <algorithm>
#include <stdexcept>

#include "polychow/linalg.hpp"

namespace polychow {

namespace {

std::string vec_label(const ZVec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].get_str();
    }
    return out + ")";
}

std::string cone_label(const Polyhedron& cone_cell) {
    if (cone_cell.rays().empty()) return "0";
    std::string out;
    for (size_t i = 0; i < cone_cell.rays().size(); ++i) {
        if (i) out += ",";
        out += vec_label(cone_cell.rays()[i]);
    }
    return out;
}

}  // namespace

std::string horizontal_label(const Polyhedron& fan_cell) {
    return "H[" + cone_label(fan_cell) + "]";
}

std::string vertical_label(size_t cell_index) { return "V[" + std::to_string(cell_index) + "]"; }

namespace {

// primitive generator of the one-dimensional image of a cone given by
// gens; all nonzero images lie on one ray since the quotient is by the
// span of a facet
ZVec ray_image(const QuotientLattice& q, const std::vector<ZVec>& gens) {
    for (const ZVec& g : gens) {
        ZVec img = q.project(g);
        if (std::any_of(img.begin(), img.end(), [](const Int& x) { return x != 0; }))
            return primitive(img);
    }
    throw std::logic_error("chow: cone image collapsed to zero");
}

std::vector<size_t> skeleton_or_empty(const PolyhedralComplex& c, long d) {
    if (d < 0 || size_t(d) > c.ambient_rank()) return {};
    return c.skeleton_indices(size_t(d));
}

PolyhedralComplex checked_fan(const PolyhedralComplex& c, bool force) {
    require_regular(c, "chow", force);
    return recession_fan(c);
}

}  // namespace

ChowData::ChowData(const PolyhedralComplex& c, bool force)
    : c_(c), fan_(checked_fan(c, force)) {
    const size_t n = c_.ambient_rank();
    fan_lat_.reserve(fan_.size());
    for (const Polyhedron& cone_cell : fan_.cells())
        fan_lat_.push_back(quotient_lattice(n, as_cone(cone_cell).span_basis()));
    cell_lat_.reserve(c_.size());
    rec_of_.reserve(c_.size());
    for (const Polyhedron& cell : c_.cells()) {
        cell_lat_.push_back(quotient_lattice(n + 1, cell.lifted().span_basis()));
        size_t at = fan_.find(cone_polyhedron(recession_cone(cell)));
        if (at == PolyhedralComplex::npos)
            throw std::logic_error("chow: recession cone missing from fan");
        rec_of_.push_back(at);
    }
}

CycleBasis ChowData::cycle_basis(long k) const {
    const long n = long(c_.ambient_rank());
    CycleBasis b;
    b.k = k;
    b.horizontal = skeleton_or_empty(fan_, n - k + 1);
    b.vertical = skeleton_or_empty(c_, n - k);
    for (size_t s : b.horizontal) b.labels.push_back(horizontal_label(fan_.cell(s)));
    for (size_t i : b.vertical) b.labels.push_back(vertical_label(i));
    return b;
}

QMat ChowData::relation_matrix(long k) const {
    const long n = long(c_.ambient_rank());
    CycleBasis b = cycle_basis(k);
    const size_t cols = b.generators();

    std::vector<size_t> col_h(fan_.size(), PolyhedralComplex::npos);
    std::vector<size_t> col_v(c_.size(), PolyhedralComplex::npos);
    for (size_t j = 0; j < b.horizontal.size(); ++j) col_h[b.horizontal[j]] = j;
    for (size_t j = 0; j < b.vertical.size(); ++j)
        col_v[b.vertical[j]] = b.horizontal.size() + j;

    QMat m(0, cols);
    for (size_t t : skeleton_or_empty(fan_, n - k)) {
        const QuotientLattice& lat = fan_lat_[t];
        std::vector<std::pair<size_t, ZVec>> sigma_images;
        for (size_t s : fan_.poset().cofacets[t])
            sigma_images.emplace_back(col_h[s], ray_image(lat, fan_.cell(s).rays()));
        std::vector<std::pair<size_t, QVec>> cell_images;
        for (size_t lam : b.vertical)
            if (rec_of_[lam] == t)
                cell_images.emplace_back(col_v[lam], lat.project(c_.cell(lam).vertices()[0]));
        for (size_t i = 0; i < lat.quotient_rank; ++i) {
            QVec row(cols, Rat(0));
            for (const auto& [col, v] : sigma_images) row[col] = Rat(v[i]);
            for (const auto& [col, v] : cell_images) row[col] = v[i];
            m.append_row(row);
        }
        QVec ell(cols, Rat(0));
        for (const auto& [col, v] : cell_images) ell[col] = 1;
        m.append_row(ell);
    }
    for (size_t lam : skeleton_or_empty(c_, n - k - 1)) {
        const QuotientLattice& lat = cell_lat_[lam];
        std::vector<std::pair<size_t, ZVec>> images;
        for (size_t up : c_.poset().cofacets[lam])
            images.emplace_back(col_v[up], ray_image(lat, c_.cell(up).lifted().generators()));
        for (size_t i = 0; i < lat.quotient_rank; ++i) {
            QVec row(cols, Rat(0));
            for (const auto& [col, v] : images) row[col] = Rat(v[i]);
            m.append_row(row);
        }
    }
    return m;
}

size_t ChowData::chow_dim(long k) const {
    return cycle_basis(k).generators() - rank_q(relation_matrix(k));
}

ChowPresentation ChowData::presentation(long k) const {
    ChowPresentation p;
    p.basis = cycle_basis(k);
    p.relations = relation_matrix(k);
    Rref r = rref(p.relations);
    p.rank = r.pivots.size();
    p.dim = p.basis.generators() - p.rank;
    std::vector<bool> is_pivot(p.basis.generators(), false);
    for (size_t c : r.pivots) is_pivot[c] = true;
    for (size_t j = 0; j < p.basis.generators(); ++j)
        if (!is_pivot[j]) p.free_generators.push_back(j);
    for (size_t i = 0; i < p.rank; ++i) {
        ChowPresentation::Expression e;
        e.generator = r.pivots[i];
        for (size_t f : p.free_generators) e.coefficients.push_back(-r.r(i, f));
        p.expressions.push_back(std::move(e));
    }
    return p;
}

size_t ChowData::generic_fiber_dim(long k) const {
    const long n = long(c_.ambient_rank());
    std::vector<size_t> gens = skeleton_or_empty(fan_, n - k + 1);
    std::vector<size_t> col(fan_.size(), PolyhedralComplex::npos);
    for (size_t j = 0; j < gens.size(); ++j) col[gens[j]] = j;
    QMat m(0, gens.size());
    for (size_t t : skeleton_or_empty(fan_, n - k)) {
        const QuotientLattice& lat = fan_lat_[t];
        std::vector<std::pair<size_t, ZVec>> images;
        for (size_t s : fan_.poset().cofacets[t])
            images.emplace_back(col[s], ray_image(lat, fan_.cell(s).rays()));
        for (size_t i = 0; i < lat.quotient_rank; ++i) {
            QVec row(gens.size(), Rat(0));
            for (const auto& [cj, v] : images) row[cj] = Rat(v[i]);
            m.append_row(row);
        }
    }
    return gens.size() - rank_q(m);
}

size_t ChowData::special_fiber_dim(long k) const {
    const long n = long(c_.ambient_rank());
    std::vector<size_t> gens = skeleton_or_empty(c_, n - k);
    std::vector<size_t> col(c_.size(), PolyhedralComplex::npos);
    for (size_t j = 0; j < gens.size(); ++j) col[gens[j]] = j;
    QMat m(0, gens.size());
    for (size_t lam : skeleton_or_empty(c_, n - k - 1)) {
        const QuotientLattice& lat = cell_lat_[lam];
        std::vector<std::pair<size_t, ZVec>> images;
        for (size_t up : c_.poset().cofacets[lam])
            images.emplace_back(col[up], ray_image(lat, c_.cell(up).lifted().generators()));
        for (size_t i = 0; i < lat.quotient_rank; ++i) {
            QVec row(gens.size(), Rat(0));
            for (const auto& [cj, v] : images) row[cj] = Rat(v[i]);
            m.append_row(row);
        }
    }
    return gens.size() - rank_q(m);
}

SpecializationMatrix ChowData::specialize(long k) const {
    const long n = long(c_.ambient_rank());
    SpecializationMatrix sp;
    sp.k = k;
    sp.rows = skeleton_or_empty(c_, n - k);
    sp.cols = skeleton_or_empty(fan_, n - k);
    sp.entries = ZMat(sp.rows.size(), sp.cols.size());
    std::vector<size_t> col(fan_.size(), PolyhedralComplex::npos);
    for (size_t j = 0; j < sp.cols.size(); ++j) col[sp.cols[j]] = j;
    for (size_t i = 0; i < sp.rows.size(); ++i) {
        // cells with lower-dimensional recession cone hit no column
        size_t fan_index = rec_of_[sp.rows[i]];
        if (col[fan_index] == PolyhedralComplex::npos) continue;
        sp.entries(i, col[fan_index]) = multiplicity(c_.cell(sp.rows[i]));
    }
    return sp;
}

CycleBasis cycle_basis(const PolyhedralComplex& c, long k, bool force) {
    return ChowData(c, force).cycle_basis(k);
}

QMat relation_matrix(const PolyhedralComplex& c, long k, bool force) {
    return ChowData(c, force).relation_matrix(k);
}

size_t chow_dim(const PolyhedralComplex& c, long k, bool force) {
    return ChowData(c, force).chow_dim(k);
}

ChowPresentation presentation(const PolyhedralComplex& c, long k, bool force) {
    return ChowData(c, force).presentation(k);
}

size_t generic_fiber_dim(const PolyhedralComplex& c, long k, bool force) {
    return ChowData(c, force).generic_fiber_dim(k);
}

size_t special_fiber_dim(const PolyhedralComplex& c, long k, bool force) {
    return ChowData(c, force).special_fiber_dim(k);
}

size_t ch0_special_incidence(const PolyhedralComplex& c) {
    require_complete(c, "ch0_special_incidence");
    std::vector<size_t> verts = c.skeleton_indices(0);
    std::vector<size_t> pos(c.size(), PolyhedralComplex::npos);
    for (size_t j = 0; j < verts.size(); ++j) pos[verts[j]] = j;
    ZMat m(0, verts.size());
    for (size_t e : c.skeleton_indices(1)) {
        if (!c.cell(e).rays().empty()) continue;
        const auto& ends = c.poset().facets[e];
        ZVec row(verts.size(), Int(0));
        row[pos[ends[0]]] = 1;
        row[pos[ends[1]]] = -1;
        m.append_row(row);
    }
    return verts.size() - rank_z(m);
}

std::string RankPolynomial::str() const {
    std::string out;
    for (size_t j = 0; j < coefficients.size(); ++j) {
        const Int& a = coefficients[j];
        if (a == 0) continue;
        Int mag = abs(a);
        std::string term;
        if (j == 0) {
            term = mag.get_str();
        } else {
            if (mag != 1) term = mag.get_str();
            term += "z";
            if (j >= 2) term += "^" + std::to_string(j);
        }
        if (out.empty())
            out = (a < 0 ? "-" : "") + term;
        else
            out += (a < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

RankPolynomial rank_polynomial(const PolyhedralComplex& c, bool force) {
    require_regular(c, "rank_polynomial", force);
    const size_t n = c.ambient_rank();
    PolyhedralComplex cones = cone_complex(c);
    RankPolynomial p;
    p.coefficients.assign(n + 2, Int(0));
    for (const Polyhedron& cone_cell : cones.cells()) {
        size_t d = cone_cell.dim();
        size_t codim = n + 1 - d;
        for (size_t j = 0; j <= codim; ++j) {
            Int b;
            mpz_bin_uiui(b.get_mpz_t(), codim, j);
            if (j % 2) b = -b;
            p.coefficients[d + j] += b;
        }
    }
    return p;
}

RankFormulaCheck verify_rank_formula(const PolyhedralComplex& c, bool force) {
    ChowData data(c, force);
    RankFormulaCheck r;
    r.polynomial = rank_polynomial(c, force);
    const long n = long(c.ambient_rank());
    for (long j = 0; j <= n + 1; ++j) r.chow_dims.push_back(data.chow_dim(n + 1 - j));
    r.ok = true;
    for (size_t j = 0; j < r.chow_dims.size(); ++j)
        if (r.polynomial.coefficients[j] != Int(long(r.chow_dims[j]))) r.ok = false;
    return r;
}

SpecializationMatrix specialize(const PolyhedralComplex& c, long k, bool force) {
    return ChowData(c, force).specialize(k);
}

}  // namespace polychow
