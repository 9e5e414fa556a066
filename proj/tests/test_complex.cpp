#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "polychow/complex.hpp"
#include "polychow/fixtures.hpp"
#include "test_util.hpp"

using namespace polychow;
using testutil::Rng;

namespace {

QVec qv(std::vector<long> v) {
    QVec out;
    for (long x : v) out.emplace_back(x);
    return out;
}

ZVec zv(std::vector<long> v) {
    ZVec out;
    for (long x : v) out.emplace_back(x);
    return out;
}

std::vector<size_t> skeleton_sizes(const PolyhedralComplex& c, size_t top) {
    std::vector<size_t> out;
    for (size_t k = 0; k <= top; ++k) out.push_back(c.skeleton_indices(k).size());
    return out;
}

Polyhedron unit_square_at(const Rat& x0) {
    return Polyhedron(2, {{x0, Rat(0)}, {x0 + 1, Rat(0)}, {x0, Rat(1)}, {x0 + 1, Rat(1)}}, {});
}

// apply a lattice coordinate change to every maximal cell
PolyhedralComplex transformed(const PolyhedralComplex& c, const ZMat& u) {
    QMat uq = to_qmat(u);
    std::vector<Polyhedron> cells;
    for (size_t i : c.maximal()) {
        std::vector<QVec> vs;
        for (const QVec& v : c.cell(i).vertices()) vs.push_back(uq.apply(v));
        std::vector<ZVec> rs;
        for (const ZVec& r : c.cell(i).rays()) rs.push_back(u.apply(r));
        cells.emplace_back(c.ambient_rank(), vs, rs);
    }
    return build_complex(c.ambient_rank(), cells);
}

}  // namespace

TEST_CASE("line subdivisions: skeleta, flags, reducedness") {
    PolyhedralComplex p13 = fixture_p1(3);
    CHECK(skeleton_sizes(p13, 1) == std::vector<size_t>{3, 4});
    CHECK(p13.is_complete());
    CHECK(p13.is_regular());
    CHECK(p13.is_reduced());
    CHECK(p13.skeleton(5).empty());

    PolyhedralComplex p11 = fixture_p1(1);
    CHECK(skeleton_sizes(p11, 1) == std::vector<size_t>{1, 2});
    CHECK(p11.cells() == fixture_projective(1).cells());

    PolyhedralComplex half = fixture_p1_half();
    CHECK(skeleton_sizes(half, 1) == std::vector<size_t>{3, 4});
    CHECK(half.is_complete());
    CHECK(half.is_regular());
    CHECK_FALSE(half.is_reduced());
}

TEST_CASE("complete but not regular: lone half-integral end vertex") {
    // the cell [1/2, oo) lifts to generators (1,2), (1,0) of determinant -2
    std::vector<Polyhedron> cells;
    cells.emplace_back(1, std::vector<QVec>{qv({0})}, std::vector<ZVec>{zv({-1})});
    cells.emplace_back(1, std::vector<QVec>{qv({0}), QVec{rat(1, 2)}}, std::vector<ZVec>{});
    cells.emplace_back(1, std::vector<QVec>{QVec{rat(1, 2)}}, std::vector<ZVec>{zv({1})});
    PolyhedralComplex c = build_complex(1, cells);
    CHECK(c.is_complete());
    CHECK_FALSE(c.is_regular());
    CHECK_THROWS_AS(require_regular(c, "op", false), RegularityError);
    CHECK_NOTHROW(require_regular(c, "op", true));
}

TEST_CASE("plane fixtures: skeleta and flags") {
    PolyhedralComplex p2 = fixture_p2_model();
    CHECK(skeleton_sizes(p2, 2) == std::vector<size_t>{2, 6, 5});
    CHECK(p2.is_complete());
    CHECK(p2.is_regular());
    CHECK(p2.is_reduced());

    PolyhedralComplex bl = fixture_blp2_model();
    CHECK(skeleton_sizes(bl, 2) == std::vector<size_t>{3, 10, 8});
    CHECK(bl.is_complete());
    CHECK(bl.is_regular());

    PolyhedralComplex proj2 = fixture_projective(2);
    CHECK(skeleton_sizes(proj2, 2) == std::vector<size_t>{1, 3, 3});
    CHECK(proj2.is_complete());
    CHECK(proj2.is_regular());
}

TEST_CASE("incomplete inputs are detected") {
    Polyhedron quadrant(2, {qv({0, 0})}, {zv({1, 0}), zv({0, 1})});
    CHECK_FALSE(build_complex(2, {quadrant}).is_complete());

    // drop the right end ray of p1(3): vertex 2 has only one coface
    std::vector<Polyhedron> cells;
    cells.emplace_back(1, std::vector<QVec>{qv({0})}, std::vector<ZVec>{zv({-1})});
    cells.emplace_back(1, std::vector<QVec>{qv({0}), qv({1})}, std::vector<ZVec>{});
    cells.emplace_back(1, std::vector<QVec>{qv({1}), qv({2})}, std::vector<ZVec>{});
    CHECK_FALSE(build_complex(1, cells).is_complete());

    // upper half plane: passes purity but a boundary ray has one coface
    Polyhedron left(2, {qv({0, 0})}, {zv({0, 1}), zv({-1, 0})});
    Polyhedron right(2, {qv({0, 0})}, {zv({0, 1}), zv({1, 0})});
    CHECK_FALSE(build_complex(2, {left, right}).is_complete());
}

TEST_CASE("completeness flag is seed independent on the fixtures") {
    for (uint64_t seed : {uint64_t(1), uint64_t(0xdecafbadu)}) {
        std::vector<Polyhedron> cells;
        PolyhedralComplex p2 = fixture_p2_model();
        for (size_t i : p2.maximal()) cells.push_back(p2.cell(i));
        CHECK(build_complex(2, cells, seed).is_complete());
    }
}

TEST_CASE("axiom violations are reported with the offending pair") {
    Polyhedron a = unit_square_at(0);
    Polyhedron b = unit_square_at(rat(1, 2));
    CHECK_THROWS_WITH_AS(build_complex(2, {a, b}),
                         doctest::Contains("do not meet in a common face"), ValidationError);

    Polyhedron line_cell(1, {qv({0})}, {zv({1})});
    CHECK_THROWS_WITH_AS(build_complex(2, {a, line_cell}), doctest::Contains("ambient rank"),
                         ValidationError);
}

TEST_CASE("rebuilding from maximal cells is the identity") {
    for (const char* name : {"p1:3", "p1-half", "p2-model", "blp2-model", "projective:2"}) {
        PolyhedralComplex c = fixture(name);
        std::vector<Polyhedron> cells;
        for (size_t i : c.maximal()) cells.push_back(c.cell(i));
        PolyhedralComplex again = build_complex(c.ambient_rank(), cells);
        CHECK(again.cells() == c.cells());
        CHECK(again.maximal() == c.maximal());
        CHECK(again.is_complete() == c.is_complete());
        CHECK(again.is_regular() == c.is_regular());
    }
}

TEST_CASE("face poset is consistent") {
    PolyhedralComplex bl = fixture_blp2_model();
    for (size_t i = 0; i < bl.size(); ++i) {
        for (size_t f : bl.poset().facets[i]) {
            CHECK(bl.cell(f).dim() + 1 == bl.cell(i).dim());
            CHECK(is_face_of(bl.cell(f), bl.cell(i)));
            CHECK(bl.cell_is_face_of(f, i));
        }
        CHECK(bl.cell_is_face_of(i, i));
    }
    // every non-maximal cell is a face of some maximal cell
    for (size_t i = 0; i < bl.size(); ++i) {
        bool covered = false;
        for (size_t m : bl.maximal())
            if (bl.cell_is_face_of(i, m)) covered = true;
        CHECK(covered);
    }
}

TEST_CASE("recession fans") {
    PolyhedralComplex fan = recession_fan(fixture_p1(3));
    CHECK(skeleton_sizes(fan, 1) == std::vector<size_t>{1, 2});
    CHECK(fan.is_complete());

    PolyhedralComplex blfan = recession_fan(fixture_blp2_model());
    std::vector<ZVec> rays;
    for (size_t i : blfan.skeleton_indices(1)) rays.push_back(blfan.cell(i).rays()[0]);
    std::vector<ZVec> expect = {zv({-1, -1}), zv({0, -1}), zv({0, 1}), zv({1, 0})};
    CHECK(rays == expect);

    // a fan is its own recession fan
    PolyhedralComplex proj2 = fixture_projective(2);
    CHECK(recession_fan(proj2).cells() == proj2.cells());
    CHECK(canonical_model(proj2).cells() == proj2.cells());

    Polyhedron quadrant(2, {qv({0, 0})}, {zv({1, 0}), zv({0, 1})});
    CHECK_THROWS_AS(recession_fan(build_complex(2, {quadrant})), ValidationError);
}

TEST_CASE("cone complex: counts and slice roundtrip") {
    PolyhedralComplex cp11 = cone_complex(fixture_p1(1));
    CHECK(skeleton_sizes(cp11, 2) == std::vector<size_t>{1, 3, 2});
    PolyhedralComplex cp13 = cone_complex(fixture_p1(3));
    CHECK(skeleton_sizes(cp13, 2) == std::vector<size_t>{1, 5, 4});
    PolyhedralComplex cp2 = cone_complex(fixture_p2_model());
    CHECK(skeleton_sizes(cp2, 3) == std::vector<size_t>{1, 5, 9, 5});
    PolyhedralComplex cbl = cone_complex(fixture_blp2_model());
    CHECK(skeleton_sizes(cbl, 3) == std::vector<size_t>{1, 7, 14, 8});
    CHECK_FALSE(cbl.is_complete());

    // slicing the cones at height one recovers exactly the cells of the
    // input, and the height-zero cones are exactly the recession fan
    for (const char* name : {"p1:2", "p1-half", "p2-model", "blp2-model"}) {
        PolyhedralComplex c = fixture(name);
        PolyhedralComplex cc = cone_complex(c);
        PolyhedralComplex fan = recession_fan(c);
        std::vector<Polyhedron> sliced, flat;
        for (const Polyhedron& cone_cell : cc.cells()) {
            Cone k = as_cone(cone_cell);
            auto s = slice_at_height_one(k);
            if (s) {
                sliced.push_back(*s);
                continue;
            }
            std::vector<ZVec> rays;
            for (const ZVec& g : k.generators()) rays.emplace_back(g.begin(), g.end() - 1);
            flat.push_back(
                Polyhedron(c.ambient_rank(), {QVec(c.ambient_rank(), Rat(0))}, rays));
        }
        std::sort(sliced.begin(), sliced.end());
        std::sort(flat.begin(), flat.end());
        CHECK(sliced == c.cells());
        CHECK(flat == fan.cells());
    }
}

TEST_CASE("star of a recession cone") {
    PolyhedralComplex p2 = fixture_p2_model();
    StarComplex star = star_complex(p2, Cone(2, {zv({1, 0})}));
    CHECK(star.complex.ambient_rank() == 1);
    CHECK(star.lattice.quotient_rank == 1);
    CHECK(skeleton_sizes(star.complex, 1) == std::vector<size_t>{2, 3});
    std::vector<QVec> verts;
    for (size_t i : star.complex.skeleton_indices(0))
        verts.push_back(star.complex.cell(i).vertices()[0]);
    CHECK(verts == std::vector<QVec>{qv({0}), qv({1})});
    CHECK(star.complex.is_complete());
    CHECK(star.complex.is_regular());

    StarComplex triv = star_complex(p2, Cone::zero(2));
    CHECK(triv.complex.cells() == p2.cells());

    StarComplex pt = star_complex(fixture_p1(3), Cone(1, {zv({-1})}));
    CHECK(pt.complex.ambient_rank() == 0);
    CHECK(pt.complex.size() == 1);
    CHECK(pt.complex.is_complete());

    CHECK_THROWS_AS(star_complex(p2, Cone(2, {zv({1, 1})})), std::invalid_argument);
}

TEST_CASE("star fans of cells") {
    PolyhedralComplex p13 = fixture_p1(3);
    Polyhedron interior(1, {qv({1})}, {});
    StarComplex sf = star_fan(p13, interior);
    CHECK(sf.complex.ambient_rank() == 1);
    CHECK(skeleton_sizes(sf.complex, 1) == std::vector<size_t>{1, 2});
    CHECK(sf.complex.is_complete());

    PolyhedralComplex p2 = fixture_p2_model();
    StarComplex v2star = star_fan(p2, Polyhedron(2, {qv({0, 0})}, {}));
    CHECK(v2star.complex.ambient_rank() == 2);
    CHECK(skeleton_sizes(v2star.complex, 2) == std::vector<size_t>{1, 3, 3});
    CHECK(v2star.complex.is_complete());

    // maximal cell: zero fan in rank zero
    StarComplex zero = star_fan(p2, p2.cell(p2.maximal()[0]));
    CHECK(zero.complex.ambient_rank() == 0);
    CHECK(zero.complex.size() == 1);

    // one rank-n star fan per vertex: components of the special fiber
    for (const char* name : {"p1:3", "p2-model", "blp2-model"}) {
        PolyhedralComplex c = fixture(name);
        for (size_t i : c.skeleton_indices(0)) {
            StarComplex s = star_fan(c, c.cell(i));
            CHECK(s.complex.ambient_rank() == c.ambient_rank());
            CHECK(s.complex.is_complete());
        }
    }

    CHECK_THROWS_AS(star_fan(p2, Polyhedron(2, {qv({7, 7})}, {})), std::invalid_argument);
}

TEST_CASE("lattice normal vectors") {
    PolyhedralComplex p2 = fixture_p2_model();
    CHECK(normal_vector(p2, Cone::zero(2), Cone(2, {zv({1, 0})})) == zv({1, 0}));
    CHECK(normal_vector(p2, Cone::zero(2), Cone(2, {zv({-1, -1})})) == zv({-1, -1}));

    PolyhedralComplex bl = fixture_blp2_model();
    Cone tau4(2, {zv({1, 0})});
    Cone sigma34(2, {zv({0, -1}), zv({1, 0})});
    CHECK(normal_vector(bl, tau4, sigma34) == zv({-1}));
    Cone sigma14(2, {zv({0, 1}), zv({1, 0})});
    CHECK(normal_vector(bl, tau4, sigma14) == zv({1}));

    CHECK_THROWS_AS(normal_vector(p2, Cone::zero(2), Cone(2, {zv({1, 0}), zv({0, 1})})),
                    std::invalid_argument);
}

TEST_CASE("vertex images") {
    PolyhedralComplex p2 = fixture_p2_model();
    Polyhedron v2(2, {qv({0, 0})}, {});
    CHECK(vertex_image(p2, v2, Cone::zero(2)) == qv({0, 0}));

    Polyhedron r1(2, {qv({0, 1})}, {zv({1, 0})});
    CHECK(vertex_image(p2, r1, Cone(2, {zv({1, 0})})) == qv({1}));
    Polyhedron r2(2, {qv({0, 0})}, {zv({1, 0})});
    CHECK(vertex_image(p2, r2, Cone(2, {zv({1, 0})})) == qv({0}));

    // recession cone mismatch and non-point images are rejected
    CHECK_THROWS_AS(vertex_image(p2, r1, Cone::zero(2)), std::invalid_argument);
    Polyhedron strip(2, {qv({0, 0}), qv({0, 1})}, {zv({1, 0})});
    CHECK_THROWS_AS(vertex_image(p2, strip, Cone(2, {zv({1, 0})})), std::invalid_argument);
}

TEST_CASE("edge normal vectors") {
    PolyhedralComplex p13 = fixture_p1(3);
    Polyhedron v1(1, {qv({1})}, {});
    Polyhedron e01(1, {qv({0}), qv({1})}, {});
    Polyhedron e12(1, {qv({1}), qv({2})}, {});
    CHECK(edge_normal(p13, v1, e12) == zv({1}));
    CHECK(edge_normal(p13, v1, e01) == zv({-1}));

    PolyhedralComplex p2 = fixture_p2_model();
    Polyhedron v2(2, {qv({0, 0})}, {});
    Polyhedron gamma(2, {qv({0, 0}), qv({0, 1})}, {});
    CHECK(edge_normal(p2, v2, gamma) == zv({0, 1}));

    CHECK_THROWS_AS(edge_normal(p2, v2, v2), std::invalid_argument);
}

TEST_CASE("orbit lattice ranks match cell dimensions") {
    PolyhedralComplex bl = fixture_blp2_model();
    const size_t n = bl.ambient_rank();
    for (const Polyhedron& cell : bl.cells()) {
        QuotientLattice q = quotient_lattice(n + 1, cell.lifted().span_basis());
        CHECK(q.quotient_rank == n - cell.dim());
    }
    PolyhedralComplex fan = recession_fan(bl);
    for (const Polyhedron& cone_cell : fan.cells()) {
        Cone sigma = as_cone(cone_cell);
        QuotientLattice q = quotient_lattice(n, sigma.span_basis());
        CHECK(q.quotient_rank == n - sigma.dim());
    }
}

TEST_CASE("coordinate changes preserve structure") {
    Rng rng(77);
    for (const char* name : {"p2-model", "blp2-model"}) {
        PolyhedralComplex c = fixture(name);
        for (int trial = 0; trial < 3; ++trial) {
            ZMat u = testutil::random_unimodular(rng, c.ambient_rank());
            PolyhedralComplex t = transformed(c, u);
            CHECK(t.size() == c.size());
            CHECK(t.maximal().size() == c.maximal().size());
            CHECK(t.is_complete() == c.is_complete());
            CHECK(t.is_regular() == c.is_regular());
            CHECK(skeleton_sizes(t, c.ambient_rank()) == skeleton_sizes(c, c.ambient_rank()));
        }
    }
}

TEST_CASE("fixture dispatch") {
    CHECK(fixture("p1:4").skeleton_indices(0).size() == 4);
    CHECK(fixture("projective:3").skeleton_indices(1).size() == 4);
    CHECK(fixture("canonical:p2").cells() == fixture_projective(2).cells());
    CHECK(fixture("canonical:blp2").skeleton_indices(1).size() == 4);
    CHECK_THROWS_AS(fixture("p1"), std::invalid_argument);
    CHECK_THROWS_AS(fixture("p1:x"), std::invalid_argument);
    CHECK_THROWS_AS(fixture("frobnicate"), std::invalid_argument);
    CHECK_THROWS_AS(fixture("canonical:p9"), std::invalid_argument);
}
