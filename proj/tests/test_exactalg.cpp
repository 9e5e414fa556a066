#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "polychow/linalg.hpp"
#include "test_util.hpp"

using namespace polychow;
using testutil::Rng;

namespace {

// gcd of all k x k minors, by brute force over index subsets.  The
// product d_1 ... d_k of the Smith divisors must equal this.
Int minor_gcd(const ZMat& m, size_t k) {
    std::vector<size_t> ri(k), ci(k);
    Int g = 0;
    std::vector<size_t> rows(m.rows()), cols(m.cols());
    for (size_t i = 0; i < m.rows(); ++i) rows[i] = i;
    for (size_t j = 0; j < m.cols(); ++j) cols[j] = j;

    std::vector<bool> rmask(m.rows(), false), cmask(m.cols(), false);
    std::fill(rmask.begin(), rmask.begin() + k, true);
    do {
        std::vector<size_t> rsel;
        for (size_t i = 0; i < m.rows(); ++i)
            if (rmask[i]) rsel.push_back(i);
        std::vector<bool> cm(m.cols(), false);
        std::fill(cm.begin(), cm.begin() + k, true);
        do {
            std::vector<size_t> csel;
            for (size_t j = 0; j < m.cols(); ++j)
                if (cm[j]) csel.push_back(j);
            ZMat sub(k, k);
            for (size_t a = 0; a < k; ++a)
                for (size_t b = 0; b < k; ++b) sub(a, b) = m(rsel[a], csel[b]);
            Int d = det(sub);
            Int t;
            mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            g = t;
        } while (std::prev_permutation(cm.begin(), cm.end()));
    } while (std::prev_permutation(rmask.begin(), rmask.end()));
    return g;
}

bool is_hnf_shape(const ZMat& h) {
    long prev_pivot = -1;
    bool seen_zero_row = false;
    for (size_t i = 0; i < h.rows(); ++i) {
        long p = -1;
        for (size_t j = 0; j < h.cols(); ++j)
            if (h(i, j) != 0) {
                p = long(j);
                break;
            }
        if (p < 0) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row) return false;
        if (p <= prev_pivot) return false;
        if (h(i, size_t(p)) <= 0) return false;
        for (size_t a = 0; a < i; ++a) {
            if (h(a, size_t(p)) < 0) return false;
            if (h(a, size_t(p)) >= h(i, size_t(p))) return false;
        }
        prev_pivot = p;
    }
    return true;
}

}  // namespace

TEST_CASE("hnf on a small example") {
    ZMat m{{2, 4}, {1, 3}};
    Hnf f = hnf(m);
    CHECK(f.u * m == f.h);
    Int du = det(f.u);
    CHECK((du == 1 || du == -1));
    CHECK(is_hnf_shape(f.h));
    ZMat expect{{1, 1}, {0, 2}};
    CHECK(f.h == expect);
}

TEST_CASE("snf on small examples") {
    {
        ZMat m{{1, 0}, {1, 2}};
        Snf f = snf(m);
        CHECK(f.u * m * f.v == f.s);
        std::vector<Int> d = f.divisors();
        REQUIRE(d.size() == 2);
        CHECK(d[0] == 1);
        CHECK(d[1] == 2);
    }
    {
        // chain enforcement: gcd/lcm of coprime diagonal entries
        ZMat m{{2, 0}, {0, 3}};
        Snf f = snf(m);
        CHECK(f.u * m * f.v == f.s);
        std::vector<Int> d = f.divisors();
        REQUIRE(d.size() == 2);
        CHECK(d[0] == 1);
        CHECK(d[1] == 6);
    }
}

TEST_CASE("snf divisors against minor gcds") {
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        size_t rows = size_t(rng.uniform(1, 4));
        size_t cols = size_t(rng.uniform(1, 4));
        ZMat m = testutil::random_zmat(rng, rows, cols, -6, 6);
        Snf f = snf(m);
        CHECK(f.u * m * f.v == f.s);
        Int du = det(f.u), dv = det(f.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        std::vector<Int> d = f.divisors();
        for (size_t i = 0; i + 1 < d.size(); ++i) CHECK(d[i + 1] % d[i] == 0);
        Int prod = 1;
        for (size_t k = 1; k <= std::min(rows, cols); ++k) {
            Int g = minor_gcd(m, k);
            if (k <= d.size()) {
                prod *= d[k - 1];
                CHECK(prod == g);
            } else {
                CHECK(g == 0);
            }
        }
    }
}

TEST_CASE("hnf properties on random matrices") {
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        size_t rows = size_t(rng.uniform(1, 5));
        size_t cols = size_t(rng.uniform(1, 5));
        ZMat m = testutil::random_zmat(rng, rows, cols, -9, 9);
        Hnf f = hnf(m);
        CHECK(f.u * m == f.h);
        Int du = det(f.u);
        CHECK((du == 1 || du == -1));
        CHECK(is_hnf_shape(f.h));
        CHECK(rank_z(f.h) == rank_z(m));
    }
}

TEST_CASE("rank and kernel") {
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        size_t rows = size_t(rng.uniform(1, 6));
        size_t cols = size_t(rng.uniform(1, 6));
        ZMat zm = testutil::random_zmat(rng, rows, cols, -9, 9);
        QMat m = to_qmat(zm);
        size_t r = rank_q(m);
        CHECK(r == rank_q(m));  // repeatable
        CHECK(r == rank_z(zm.transpose()));
        std::vector<QVec> ker = kernel_basis(m);
        CHECK(ker.size() == cols - r);
        for (const QVec& v : ker) {
            QVec mv(rows, Rat(0));
            for (size_t i = 0; i < rows; ++i)
                for (size_t j = 0; j < cols; ++j) mv[i] += m(i, j) * v[j];
            for (size_t i = 0; i < rows; ++i) CHECK(mv[i] == 0);
        }
        // kernel vectors are independent: stack and check rank
        if (!ker.empty()) {
            QMat k(ker.size(), cols);
            for (size_t i = 0; i < ker.size(); ++i) k.set_row(i, ker[i]);
            CHECK(rank_q(k) == ker.size());
        }
    }
}

TEST_CASE("rank is invariant under unimodular row changes") {
    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        size_t n = size_t(rng.uniform(2, 5));
        ZMat m = testutil::random_zmat(rng, n, size_t(rng.uniform(1, 5)), -9, 9);
        ZMat u = testutil::random_unimodular(rng, n);
        CHECK(rank_z(u * m) == rank_z(m));
    }
}

TEST_CASE("primitive") {
    CHECK(primitive({Int(4), Int(6)}) == ZVec{Int(2), Int(3)});
    CHECK(primitive({Int(-2), Int(-4)}) == ZVec{Int(-1), Int(-2)});
    CHECK(primitive({Int(0), Int(5), Int(0)}) == ZVec{Int(0), Int(1), Int(0)});
    CHECK_THROWS_AS(primitive({Int(0), Int(0)}), std::invalid_argument);
}

TEST_CASE("saturation examples") {
    {
        ZMat m{{1, 1}, {1, -1}};
        ZMat s = saturation(m);
        CHECK(s == ZMat::identity(2));
    }
    {
        ZMat m{{2, 0}};
        ZMat s = saturation(m);
        ZMat expect{{1, 0}};
        CHECK(s == expect);
    }
    {
        ZMat m{{2, 4}};   // non-primitive single row
        ZMat s = saturation(m);
        ZMat expect{{1, 2}};
        CHECK(s == expect);
    }
}

TEST_CASE("saturation properties on random lattices") {
    Rng rng(19);
    for (int trial = 0; trial < 80; ++trial) {
        size_t rows = size_t(rng.uniform(1, 4));
        size_t cols = size_t(rng.uniform(rows, 5));
        ZMat m = testutil::random_zmat(rng, rows, cols, -5, 5);
        ZMat s = saturation(m);
        CHECK(size_t(s.rows()) == rank_z(m));
        // every original row lies in the Q-span of s
        for (size_t i = 0; i < m.rows(); ++i)
            CHECK(in_row_space(to_qmat(s), to_qvec(m.row(i))));
        // saturated: all Smith divisors are 1
        for (const Int& d : snf(s).divisors()) CHECK(d == 1);
        // idempotent
        CHECK(saturation(s) == s);
    }
}

TEST_CASE("quotient lattice examples") {
    {
        ZMat sub{{1, 0}};
        QuotientLattice q = quotient_lattice(2, sub);
        CHECK(q.quotient_rank == 1);
        ZMat expect{{0, 1}};
        CHECK(q.projection == expect);
    }
    {
        QuotientLattice q = quotient_lattice(3, ZMat(0, 3));
        CHECK(q.quotient_rank == 3);
        CHECK(q.projection == ZMat::identity(3));
    }
    {
        ZMat sub{{1, 1, 1}};
        QuotientLattice q = quotient_lattice(3, sub);
        CHECK(q.quotient_rank == 2);
        for (size_t i = 0; i < 2; ++i) CHECK(dot(q.dual_basis.row(i), sub.row(0)) == 0);
    }
    {
        ZMat dep{{1, 0}, {2, 0}};
        CHECK_THROWS_AS(quotient_lattice(2, dep), std::invalid_argument);
    }
}

TEST_CASE("quotient lattice invariants on random sublattices") {
    Rng rng(23);
    int done = 0;
    while (done < 60) {
        size_t n = size_t(rng.uniform(1, 5));
        size_t r = size_t(rng.uniform(0, long(n)));
        ZMat sub = testutil::random_zmat(rng, r, n, -4, 4);
        if (rank_z(sub) != r) continue;
        ++done;
        QuotientLattice q = quotient_lattice(n, sub);
        CHECK(q.quotient_rank == n - r);
        CHECK(q.sub_basis == saturation(sub));
        // projection annihilates the sublattice
        for (size_t i = 0; i < sub.rows(); ++i) {
            ZVec img = q.project(sub.row(i));
            for (const Int& x : img) CHECK(x == 0);
        }
        // projection maps Z^n onto Z^(n-r): all Smith divisors are 1
        if (q.quotient_rank > 0) {
            std::vector<Int> d = snf(q.projection).divisors();
            CHECK(d.size() == q.quotient_rank);
            for (const Int& x : d) CHECK(x == 1);
        }
        // kernel of the projection is exactly the saturation
        CHECK(integer_kernel(q.projection) == q.sub_basis);
    }
}

TEST_CASE("in_row_space") {
    QMat m = to_qmat(ZMat{{1, 2, 3}, {0, 1, 1}});
    QVec yes = {Rat(2), Rat(5), Rat(7)};   // row0 + row1
    QVec no = {Rat(0), Rat(0), Rat(1)};
    CHECK(in_row_space(m, yes));
    CHECK(!in_row_space(m, no));

    Rng rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        size_t rows = size_t(rng.uniform(1, 4));
        size_t cols = size_t(rng.uniform(1, 5));
        QMat a = to_qmat(testutil::random_zmat(rng, rows, cols, -5, 5));
        QVec combo(cols, Rat(0));
        for (size_t i = 0; i < rows; ++i) {
            Rat c = rat(rng.uniform(-3, 3), rng.uniform(1, 3));
            for (size_t j = 0; j < cols; ++j) combo[j] += c * a(i, j);
        }
        CHECK(in_row_space(a, combo));
    }
}

TEST_CASE("inverse of unimodular matrices") {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        size_t n = size_t(rng.uniform(1, 5));
        ZMat u = testutil::random_unimodular(rng, n);
        ZMat inv = inverse_unimodular(u);
        CHECK(u * inv == ZMat::identity(n));
        CHECK(inv * u == ZMat::identity(n));
    }
    ZMat bad{{2, 0}, {0, 1}};
    CHECK_THROWS_AS(inverse_unimodular(bad), std::invalid_argument);
}

TEST_CASE("rref and solve") {
    ZMat m{{2, 4, 6}, {1, 2, 4}};
    Rref f = rref(to_qmat(m));
    REQUIRE(f.pivots.size() == 2);
    CHECK(f.pivots[0] == 0);
    CHECK(f.pivots[1] == 2);
    CHECK(f.r(0, 0) == 1);
    CHECK(f.r(0, 1) == 2);
    CHECK(f.r(0, 2) == 0);
    CHECK(f.r(1, 2) == 1);

    Rng rng(37);
    int done = 0;
    while (done < 40) {
        size_t n = size_t(rng.uniform(1, 4));
        ZMat a = testutil::random_zmat(rng, n, n, -6, 6);
        if (det(a) == 0) continue;
        ++done;
        QVec b;
        for (size_t i = 0; i < n; ++i) b.push_back(rat(rng.uniform(-9, 9), rng.uniform(1, 4)));
        auto x = solve_square(to_qmat(a), b);
        REQUIRE(x.has_value());
        for (size_t i = 0; i < n; ++i) {
            Rat s = 0;
            for (size_t j = 0; j < n; ++j) s += Rat(a(i, j)) * (*x)[j];
            CHECK(s == b[i]);
        }
    }
    ZMat sing{{1, 2}, {2, 4}};
    CHECK(!solve_square(to_qmat(sing), {Rat(1), Rat(0)}).has_value());
}

TEST_CASE("empty and degenerate shapes") {
    CHECK(rank_z(ZMat(0, 3)) == 0);
    CHECK(integer_kernel(ZMat(0, 3)) == ZMat::identity(3));
    CHECK(saturation(ZMat(0, 4)) == ZMat(0, 4));
    CHECK(kernel_basis(QMat(0, 2)).size() == 2);
    Hnf f = hnf(ZMat(2, 0));
    CHECK(f.h == ZMat(2, 0));
    CHECK(f.u == ZMat::identity(2));
    QuotientLattice q = quotient_lattice(0, ZMat(0, 0));
    CHECK(q.quotient_rank == 0);
}
