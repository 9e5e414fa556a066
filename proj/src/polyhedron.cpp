#include "polychow/polyhedron.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polychow {

namespace {

ZMat stack_rows(const std::vector<ZVec>& rows, size_t cols) {
    ZMat m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

ZMat vstack(const ZMat& a, const ZMat& b) {
    ZMat m(a.rows() + b.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

// integer dual of a saturated full-row-rank basis b: d with
// b . d^T = identity
ZMat span_dual_of(const ZMat& b) {
    const size_t d = b.rows(), n = b.cols();
    Snf f = snf(b);
    for (const Int& x : f.divisors())
        if (x != 1) throw std::logic_error("span basis not saturated");
    // b = u^-1 (I|0) v^-1, so  b . (v[:, :d] u) = identity
    ZMat sel(n, d);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < d; ++j) sel(i, j) = f.v(i, j);
    ZMat dt = sel * f.u;  // n x d
    return dt.transpose();
}

// all (size)-subsets of {0..count-1}
void for_each_subset(size_t count, size_t size,
                     const std::function<void(const std::vector<size_t>&)>& fn) {
    std::vector<size_t> idx(size);
    if (size > count) return;
    for (size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
        fn(idx);
        size_t i = size;
        while (i > 0) {
            --i;
            if (idx[i] != i + count - size) {
                ++idx[i];
                for (size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
        if (size == 0) return;
    }
}

}  // namespace

Cone::Cone(size_t ambient_rank, const std::vector<ZVec>& generators) : n_(ambient_rank) {
    std::set<ZVec> uniq;
    for (const ZVec& g : generators) {
        if (g.size() != n_) throw std::invalid_argument("cone: generator rank mismatch");
        bool zero = std::all_of(g.begin(), g.end(), [](const Int& x) { return x == 0; });
        if (zero) continue;
        uniq.insert(primitive(g));
    }
    gens_.assign(uniq.begin(), uniq.end());

    ZMat g = stack_rows(gens_, n_);
    span_basis_ = saturation(g);
    dim_ = span_basis_.rows();
    span_ann_ = integer_kernel(g);
    span_dual_ = dim_ ? span_dual_of(span_basis_) : ZMat(0, n_);

    if (dim_ == 0) return;

    // local (full-dimensional) coordinates of the generators
    std::vector<ZVec> loc;
    loc.reserve(gens_.size());
    for (const ZVec& v : gens_) loc.push_back(span_dual_.apply(v));

    // facet normals in local coordinates: kernels of rank (dim-1)
    // generator subsets whose pairings with all generators carry one sign
    std::set<ZVec> normals;
    for_each_subset(loc.size(), dim_ - 1, [&](const std::vector<size_t>& idx) {
        ZMat sub(dim_ - 1, dim_);
        for (size_t i = 0; i < idx.size(); ++i)
            for (size_t j = 0; j < dim_; ++j) sub(i, j) = loc[idx[i]][j];
        if (rank_z(sub) != dim_ - 1) return;
        ZMat ker = integer_kernel(sub);
        if (ker.rows() != 1) return;
        ZVec u = ker.row(0);
        int pos = 0, neg = 0;
        for (const ZVec& l : loc) {
            int s = sgn(dot(u, l));
            if (s > 0) ++pos;
            if (s < 0) ++neg;
        }
        if (pos && neg) return;
        if (neg)
            for (Int& x : u) x = -x;
        normals.insert(u);
    });

    ZMat normal_mat(normals.size(), dim_);
    {
        size_t i = 0;
        for (const ZVec& u : normals) {
            for (size_t j = 0; j < dim_; ++j) normal_mat(i, j) = u[j];
            ++i;
        }
    }
    if (rank_z(normal_mat) != dim_)
        throw std::invalid_argument("cone is not strongly convex: " + str());

    // extreme generators lie on dim-1 independent facets
    std::vector<ZVec> extreme;
    std::vector<ZVec> extreme_loc;
    for (size_t j = 0; j < gens_.size(); ++j) {
        std::vector<ZVec> vanish;
        for (const ZVec& u : normals)
            if (dot(u, loc[j]) == 0) vanish.push_back(u);
        if (rank_z(stack_rows(vanish, dim_)) == dim_ - 1) {
            extreme.push_back(gens_[j]);
            extreme_loc.push_back(loc[j]);
        }
    }
    gens_ = std::move(extreme);

    for (const ZVec& u : normals) {
        Facet f;
        ZVec amb(n_, Int(0));
        for (size_t j = 0; j < n_; ++j)
            for (size_t i = 0; i < dim_; ++i) amb[j] += u[i] * span_dual_(i, j);
        f.normal = std::move(amb);
        for (size_t j = 0; j < gens_.size(); ++j)
            if (dot(u, extreme_loc[j]) == 0) f.on_facet.push_back(j);
        facets_.push_back(std::move(f));
    }
    std::sort(facets_.begin(), facets_.end(),
              [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
}

Cone Cone::zero(size_t ambient_rank) { return Cone(ambient_rank, {}); }

bool Cone::contains(const QVec& x) const {
    if (x.size() != n_) throw std::invalid_argument("contains: rank mismatch");
    for (size_t i = 0; i < span_ann_.rows(); ++i)
        if (dot(span_ann_.row(i), x) != 0) return false;
    for (const Facet& f : facets_)
        if (dot(f.normal, x) < 0) return false;
    if (dim_ == 0)
        for (const Rat& v : x)
            if (v != 0) return false;
    return true;
}

bool Cone::contains(const ZVec& x) const { return contains(to_qvec(x)); }

bool Cone::contains(const Cone& other) const {
    for (const ZVec& g : other.generators())
        if (!contains(g)) return false;
    return true;
}

bool Cone::operator<(const Cone& o) const {
    if (dim_ != o.dim_) return dim_ < o.dim_;
    return gens_ < o.gens_;
}

std::string Cone::str() const {
    std::ostringstream os;
    os << "cone{";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << to_string(gens_[i]);
    }
    os << "}";
    return os.str();
}

std::vector<Cone> all_faces(const Cone& c) {
    std::map<std::vector<ZVec>, Cone> seen;
    std::vector<Cone> queue{c};
    seen.emplace(c.generators(), c);
    while (!queue.empty()) {
        Cone f = std::move(queue.back());
        queue.pop_back();
        for (const Cone::Facet& facet : f.facets()) {
            std::vector<ZVec> sub;
            for (size_t j : facet.on_facet) sub.push_back(f.generators()[j]);
            Cone g(c.ambient_rank(), sub);
            if (seen.emplace(g.generators(), g).second) queue.push_back(g);
        }
    }
    std::vector<Cone> out;
    for (auto& [key, cone] : seen) out.push_back(std::move(cone));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cone> faces(const Cone& c, size_t d) {
    std::vector<Cone> out;
    for (Cone& f : all_faces(c))
        if (f.dim() == d) out.push_back(std::move(f));
    return out;
}

bool is_face_of(const Cone& f, const Cone& c) {
    if (f.ambient_rank() != c.ambient_rank()) return false;
    for (const Cone& g : faces(c, f.dim()))
        if (g == f) return true;
    return false;
}

Polyhedron::Polyhedron(size_t ambient_rank, const std::vector<QVec>& vertices,
                       const std::vector<ZVec>& rays)
    : n_(ambient_rank), lifted_(Cone::zero(0)) {
    if (vertices.empty())
        throw std::invalid_argument("polyhedron: at least one vertex required");
    std::vector<ZVec> gens;
    for (const QVec& v : vertices) {
        if (v.size() != n_) throw std::invalid_argument("polyhedron: vertex rank mismatch");
        QVec lift = v;
        lift.push_back(Rat(1));
        gens.push_back(clear_denominators(lift));
    }
    for (const ZVec& r : rays) {
        if (r.size() != n_) throw std::invalid_argument("polyhedron: ray rank mismatch");
        ZVec lift = primitive(r);  // rejects the zero ray
        lift.push_back(Int(0));
        gens.push_back(std::move(lift));
    }
    lifted_ = Cone(n_ + 1, gens);

    for (const ZVec& g : lifted_.generators()) {
        if (g[n_] > 0) {
            QVec v;
            v.reserve(n_);
            for (size_t i = 0; i < n_; ++i) v.push_back(rat(g[i], g[n_]));
            vertices_.push_back(std::move(v));
        } else if (g[n_] == 0) {
            rays_.emplace_back(g.begin(), g.end() - 1);
        } else {
            throw std::logic_error("lifted cone dips below height zero");
        }
    }
    if (vertices_.empty()) throw std::logic_error("lifted cone lost all vertices");
    std::sort(vertices_.begin(), vertices_.end());
    std::sort(rays_.begin(), rays_.end());

    std::vector<ZVec> dirs;
    for (size_t i = 1; i < vertices_.size(); ++i) {
        QVec d(n_);
        for (size_t j = 0; j < n_; ++j) d[j] = vertices_[i][j] - vertices_[0][j];
        dirs.push_back(clear_denominators(d));
    }
    for (const ZVec& r : rays_) dirs.push_back(r);
    directions_ = saturation(stack_rows(dirs, n_));
}

bool Polyhedron::operator<(const Polyhedron& o) const {
    size_t da = lifted_.dim(), db = o.lifted_.dim();
    if (da != db) return da < db;
    if (vertices_ != o.vertices_) return vertices_ < o.vertices_;
    return rays_ < o.rays_;
}

std::string Polyhedron::str() const {
    std::ostringstream os;
    os << "conv{";
    for (size_t i = 0; i < vertices_.size(); ++i) {
        if (i) os << ", ";
        os << to_string(vertices_[i]);
    }
    os << "}";
    if (!rays_.empty()) {
        os << " + cone{";
        for (size_t i = 0; i < rays_.size(); ++i) {
            if (i) os << ", ";
            os << to_string(rays_[i]);
        }
        os << "}";
    }
    return os.str();
}

std::optional<Polyhedron> slice_at_height_one(const Cone& c) {
    if (c.ambient_rank() == 0) throw std::invalid_argument("slice: rank-zero cone");
    size_t n = c.ambient_rank() - 1;
    std::vector<QVec> verts;
    std::vector<ZVec> rays;
    for (const ZVec& g : c.generators()) {
        if (g[n] > 0) {
            QVec v;
            for (size_t i = 0; i < n; ++i) v.push_back(rat(g[i], g[n]));
            verts.push_back(std::move(v));
        } else if (g[n] == 0) {
            rays.emplace_back(g.begin(), g.end() - 1);
        } else {
            throw std::invalid_argument("slice: cone dips below height zero");
        }
    }
    if (verts.empty()) return std::nullopt;
    return Polyhedron(n, verts, rays);
}

std::vector<Polyhedron> faces(const Polyhedron& p, size_t d) {
    std::vector<Polyhedron> out;
    for (const Cone& f : all_faces(p.lifted())) {
        if (f.dim() != d + 1) continue;
        auto s = slice_at_height_one(f);
        if (s) out.push_back(std::move(*s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Cone recession_cone(const Polyhedron& p) { return Cone(p.ambient_rank(), p.rays()); }

const Cone& cone_over(const Polyhedron& p) { return p.lifted(); }

std::vector<FacetHalfspace> facet_presentation(const Polyhedron& p) {
    const size_t n = p.ambient_rank();
    if (p.dim() != n)
        throw std::invalid_argument(
            "facet_presentation: polyhedron is not full-dimensional; its affine span is a "
            "proper subspace translate");
    std::vector<FacetHalfspace> out;
    for (const Cone::Facet& f : p.lifted().facets()) {
        ZVec u(f.normal.begin(), f.normal.end() - 1);
        bool zero = std::all_of(u.begin(), u.end(), [](const Int& x) { return x == 0; });
        if (zero) continue;  // the height-zero supporting facet
        Int g = 0;
        for (const Int& x : u) {
            Int t;
            mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            g = t;
        }
        FacetHalfspace h;
        h.u.reserve(n);
        for (const Int& x : u) {
            Int q;
            mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
            h.u.push_back(q);
        }
        h.a = rat(f.normal[n], g);
        out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(), [](const FacetHalfspace& a, const FacetHalfspace& b) {
        return a.u != b.u ? a.u < b.u : a.a < b.a;
    });
    return out;
}

Int multiplicity(const Polyhedron& p) {
    QuotientLattice q = quotient_lattice(p.ambient_rank(), p.direction_lattice());
    QVec img = q.project(p.vertices()[0]);
    return common_denominator(img);
}

bool contains(const Polyhedron& p, const QVec& x) {
    if (x.size() != p.ambient_rank()) throw std::invalid_argument("contains: rank mismatch");
    QVec lift = x;
    lift.push_back(Rat(1));
    return p.lifted().contains(lift);
}

std::optional<Polyhedron> intersect(const Polyhedron& p, const Polyhedron& q) {
    if (p.ambient_rank() != q.ambient_rank())
        throw std::invalid_argument("intersect: ambient rank mismatch");
    const size_t m = p.ambient_rank() + 1;

    ZMat eq = vstack(p.lifted().span_annihilator(), q.lifted().span_annihilator());
    ZMat span = integer_kernel(eq);  // rows span the common linear span
    const size_t k = span.rows();
    if (k == 0) return std::nullopt;

    std::vector<ZVec> ineq;
    for (const Cone::Facet& f : p.lifted().facets()) ineq.push_back(f.normal);
    for (const Cone::Facet& f : q.lifted().facets()) ineq.push_back(f.normal);

    // inequalities restricted to span coordinates y (x = y . span)
    std::vector<ZVec> restr;
    for (const ZVec& u : ineq) {
        ZVec row(k);
        for (size_t j = 0; j < k; ++j) row[j] = dot(u, span.row(j));
        restr.push_back(std::move(row));
    }

    std::set<ZVec> rays_local;
    for_each_subset(restr.size(), k - 1, [&](const std::vector<size_t>& idx) {
        ZMat sub(k - 1, k);
        for (size_t i = 0; i < idx.size(); ++i)
            for (size_t j = 0; j < k; ++j) sub(i, j) = restr[idx[i]][j];
        if (rank_z(sub) != k - 1) return;
        ZMat ker = integer_kernel(sub);
        if (ker.rows() != 1) return;
        ZVec y = ker.row(0);
        int pos = 0, neg = 0;
        for (const ZVec& r : restr) {
            int s = sgn(dot(r, y));
            if (s > 0) ++pos;
            if (s < 0) ++neg;
        }
        if (pos && neg) return;
        if (neg)
            for (Int& x : y) x = -x;
        rays_local.insert(y);
    });

    std::vector<ZVec> gens;
    for (const ZVec& y : rays_local) {
        ZVec x(m, Int(0));
        for (size_t j = 0; j < k; ++j)
            for (size_t c = 0; c < m; ++c) x[c] += y[j] * span(j, c);
        gens.push_back(std::move(x));
    }
    if (gens.empty()) return std::nullopt;
    return slice_at_height_one(Cone(m, gens));
}

bool is_face_of(const Polyhedron& f, const Polyhedron& p) {
    if (f.ambient_rank() != p.ambient_rank()) return false;
    size_t d = f.dim();
    for (const Polyhedron& g : faces(p, d))
        if (g == f) return true;
    return false;
}

Cone as_cone(const Polyhedron& p) {
    QVec origin(p.ambient_rank(), Rat(0));
    if (p.vertices().size() != 1 || p.vertices()[0] != origin)
        throw std::invalid_argument("as_cone: polyhedron is not a cone at the origin");
    return Cone(p.ambient_rank(), p.rays());
}

Polyhedron cone_polyhedron(const Cone& c) {
    QVec origin(c.ambient_rank(), Rat(0));
    return Polyhedron(c.ambient_rank(), {origin}, c.generators());
}

}  // namespace polychow
