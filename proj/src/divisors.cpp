#include "polychow/divisors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "polychow/linalg.hpp"
#include "polychow/polyhedron.hpp"

namespace polychow {

namespace {

// slope of a rational covector along an integer direction
Rat slope(const QVec& m, const ZVec& r) { return dot(r, m); }

Rat affine_value(const QVec& m, const Rat& l, const QVec& x) { return dot(m, x) + l; }

std::vector<size_t> containing_maximal_positions(const PolyhedralComplex& c, size_t cell_index) {
    std::vector<size_t> out;
    const std::vector<size_t>& mx = c.maximal();
    for (size_t p = 0; p < mx.size(); ++p)
        if (c.cell_is_face_of(cell_index, mx[p])) out.push_back(p);
    return out;
}

// unique solution of a stacked affine system, with explicit diagnostics
QVec solve_unique(const QMat& a, const QVec& b, const std::string& op) {
    QMat aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    Rref red = rref(aug);
    if (!red.pivots.empty() && red.pivots.back() == a.cols())
        throw ValidationError(op + ": cell system is inconsistent");
    if (red.pivots.size() < a.cols())
        throw ValidationError(op + ": cell system is underdetermined");
    QVec x(a.cols());
    for (size_t i = 0; i < red.pivots.size(); ++i) x[red.pivots[i]] = red.r(i, a.cols());
    return x;
}

}  // namespace

TWeilDivisor TWeilDivisor::operator+(const TWeilDivisor& o) const {
    if (horizontal.size() != o.horizontal.size() || vertical.size() != o.vertical.size())
        throw std::invalid_argument("divisor: shape mismatch");
    TWeilDivisor s = *this;
    for (size_t i = 0; i < s.horizontal.size(); ++i) s.horizontal[i] += o.horizontal[i];
    for (size_t i = 0; i < s.vertical.size(); ++i) s.vertical[i] += o.vertical[i];
    return s;
}

TWeilDivisor TWeilDivisor::operator-(const TWeilDivisor& o) const {
    if (horizontal.size() != o.horizontal.size() || vertical.size() != o.vertical.size())
        throw std::invalid_argument("divisor: shape mismatch");
    TWeilDivisor s = *this;
    for (size_t i = 0; i < s.horizontal.size(); ++i) s.horizontal[i] -= o.horizontal[i];
    for (size_t i = 0; i < s.vertical.size(); ++i) s.vertical[i] -= o.vertical[i];
    return s;
}

QVec coefficient_vector(const TWeilDivisor& d) {
    QVec v = d.horizontal;
    v.insert(v.end(), d.vertical.begin(), d.vertical.end());
    return v;
}

TWeilDivisor zero_divisor(const PolyhedralComplex& c) {
    TWeilDivisor d;
    d.horizontal.assign(recession_rays(c).size(), Rat(0));
    d.vertical.assign(c.skeleton_indices(0).size(), Rat(0));
    return d;
}

PiecewiseAffine::PiecewiseAffine(const PolyhedralComplex& c, std::vector<QVec> forms,
                                 std::vector<Rat> offsets)
    : c_(&c), forms_(std::move(forms)), offsets_(std::move(offsets)) {
    if (forms_.size() != c.maximal().size() || offsets_.size() != forms_.size())
        throw std::invalid_argument("piecewise affine: one form per maximal cell required");
    for (const QVec& m : forms_)
        if (m.size() != c.ambient_rank())
            throw std::invalid_argument("piecewise affine: form has wrong length");

    // agreement on every shared face: values at its vertices, slopes
    // along its rays
    for (size_t f = 0; f < c.size(); ++f) {
        std::vector<size_t> owners = containing_maximal_positions(c, f);
        if (owners.size() < 2) continue;
        const Polyhedron& face = c.cell(f);
        size_t p0 = owners[0];
        for (size_t i = 1; i < owners.size(); ++i) {
            size_t p = owners[i];
            bool ok = true;
            for (const QVec& v : face.vertices())
                if (affine_value(forms_[p0], offsets_[p0], v) !=
                    affine_value(forms_[p], offsets_[p], v))
                    ok = false;
            for (const ZVec& r : face.rays())
                if (slope(forms_[p0], r) != slope(forms_[p], r)) ok = false;
            if (!ok)
                throw ValidationError("piecewise affine: data is discontinuous across " +
                                      c.cell(c.maximal()[p0]).str() + " and " +
                                      c.cell(c.maximal()[p]).str());
        }
    }
}

Rat PiecewiseAffine::vertex_value(size_t cell_index) const {
    const Polyhedron& cell = c_->cell(cell_index);
    if (cell.dim() != 0) throw std::invalid_argument("piecewise affine: not a vertex cell");
    std::vector<size_t> owners = containing_maximal_positions(*c_, cell_index);
    if (owners.empty()) throw std::logic_error("piecewise affine: uncovered vertex");
    size_t p = owners[0];
    return affine_value(forms_[p], offsets_[p], cell.vertices()[0]);
}

std::vector<ZVec> recession_rays(const PolyhedralComplex& c) {
    std::set<ZVec> rays;
    for (size_t mi : c.maximal())
        for (const ZVec& r : c.cell(mi).rays()) rays.insert(r);
    return std::vector<ZVec>(rays.begin(), rays.end());
}

RecessionFunction recession_function(const PiecewiseAffine& phi) {
    const PolyhedralComplex& c = phi.complex();
    RecessionFunction rf;
    rf.rays = recession_rays(c);
    rf.slopes.assign(rf.rays.size(), Rat(0));
    std::vector<bool> seen(rf.rays.size(), false);
    const std::vector<size_t>& mx = c.maximal();
    for (size_t p = 0; p < mx.size(); ++p) {
        for (const ZVec& r : c.cell(mx[p]).rays()) {
            size_t i = std::lower_bound(rf.rays.begin(), rf.rays.end(), r) - rf.rays.begin();
            Rat s = slope(phi.form(p), r);
            if (seen[i] && rf.slopes[i] != s)
                throw ValidationError(
                    "recession function: data does not induce a function on the recession fan");
            rf.slopes[i] = s;
            seen[i] = true;
        }
    }
    return rf;
}

TWeilDivisor divisor_of(const PiecewiseAffine& phi) {
    const PolyhedralComplex& c = phi.complex();
    RecessionFunction rf = recession_function(phi);
    TWeilDivisor d;
    d.horizontal.reserve(rf.slopes.size());
    for (const Rat& s : rf.slopes) d.horizontal.push_back(-s);
    for (size_t vi : c.skeleton_indices(0)) d.vertical.push_back(-phi.vertex_value(vi));
    return d;
}

TWeilDivisor principal_divisor(const PolyhedralComplex& c, const MonomialFunction& f) {
    if (f.m.size() != c.ambient_rank())
        throw std::invalid_argument("principal divisor: covector has wrong length");
    TWeilDivisor d;
    for (const ZVec& r : recession_rays(c)) d.horizontal.push_back(Rat(dot(f.m, r)));
    for (size_t vi : c.skeleton_indices(0)) {
        Rat v = dot(f.m, c.cell(vi).vertices()[0]) + Rat(f.ell);
        d.vertical.push_back(v);
    }
    return d;
}

PiecewiseAffine function_of(const PolyhedralComplex& c, const TWeilDivisor& d, bool force) {
    require_regular(c, "function_of", force);
    std::vector<ZVec> rays = recession_rays(c);
    std::vector<size_t> vertex_cells = c.skeleton_indices(0);
    if (d.horizontal.size() != rays.size() || d.vertical.size() != vertex_cells.size())
        throw std::invalid_argument("function_of: divisor shape mismatch");

    std::map<QVec, size_t> vertex_pos;
    for (size_t i = 0; i < vertex_cells.size(); ++i)
        vertex_pos[c.cell(vertex_cells[i]).vertices()[0]] = i;

    size_t n = c.ambient_rank();
    std::vector<QVec> forms;
    std::vector<Rat> offsets;
    for (size_t mi : c.maximal()) {
        const Polyhedron& cell = c.cell(mi);
        QMat a(0, n + 1);
        QVec b;
        for (const QVec& v : cell.vertices()) {
            QVec row = v;
            row.emplace_back(1);
            a.append_row(row);
            b.push_back(-d.vertical[vertex_pos.at(v)]);
        }
        for (const ZVec& r : cell.rays()) {
            size_t ri = std::lower_bound(rays.begin(), rays.end(), r) - rays.begin();
            QVec row;
            row.reserve(n + 1);
            for (const Int& x : r) row.emplace_back(x);
            row.emplace_back(0);
            a.append_row(row);
            b.push_back(-d.horizontal[ri]);
        }
        QVec sol = solve_unique(a, b, "function_of");
        forms.emplace_back(sol.begin(), sol.end() - 1);
        offsets.push_back(sol[n]);
    }
    return PiecewiseAffine(c, std::move(forms), std::move(offsets));
}

bool rationally_equivalent(const PolyhedralComplex& c, const TWeilDivisor& a,
                           const TWeilDivisor& b, bool force) {
    PiecewiseAffine phi = function_of(c, a - b, force);
    for (size_t p = 1; p < phi.pieces(); ++p)
        if (phi.form(p) != phi.form(0) || phi.offset(p) != phi.offset(0)) return false;
    return true;
}

}  // namespace polychow
