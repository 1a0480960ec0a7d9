#include <doctest.h>

#include "random_gen.hpp"
#include "superfrieze/errors.hpp"
#include "superfrieze/hill.hpp"
#include "superfrieze/matrix.hpp"

using namespace superfrieze;
using superfrieze::testing::RandomScalars;

namespace {

SuperMatrix diag_m1_m1_1() {
    SuperMatrix m = SuperMatrix::identity(3, {2, 1});
    m.set(0, 0, -SuperScalar::one());
    m.set(1, 1, -SuperScalar::one());
    return m;
}

// Random even homogeneous OSp-block matrix with invertible odd-odd block.
SuperMatrix random_even_supermatrix(RandomScalars& gen) {
    SuperMatrix m(3, 3, {2, 1});
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m.set(r, c, gen.homogeneous(Parity::Even, 2));
    for (int r = 0; r < 2; ++r) m.set(r, 2, gen.homogeneous(Parity::Odd, 2));
    for (int c = 0; c < 2; ++c) m.set(2, c, gen.homogeneous(Parity::Odd, 2));
    SuperScalar d(gen.coeff());
    const SuperScalar s = gen.homogeneous(Parity::Odd, 1) * gen.homogeneous(Parity::Odd, 1);
    m.set(2, 2, d + s);
    return m;
}

} // namespace

TEST_CASE("matrix product basics") {
    RandomScalars gen(42);
    SuperMatrix m(3, 3, {2, 1});
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m.set(r, c, gen.scalar(2));
    CHECK(mat_mul(m, SuperMatrix::identity(3, {2, 1})) == m);

    CHECK_THROWS_AS((void)mat_mul(SuperMatrix(2, 3), SuperMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("monodromy of the period-3 family is diag(-1,-1,1)") {
    const SuperScalar beta = sc_odd("t");
    const SuperScalar one = SuperScalar::one();
    // beta_i = (-1)^i beta, 1-based
    const SuperMatrix a1 = transfer_matrix(one, -beta);
    const SuperMatrix a2 = transfer_matrix(one, beta);
    const SuperMatrix a3 = transfer_matrix(one, -beta);
    CHECK(mat_mul(a3, mat_mul(a2, a1)) == diag_m1_m1_1());
}

TEST_CASE("conjugation step fixes the monodromy normal form") {
    const SuperScalar a = sc_even("a"), b = sc_odd("b");
    const SuperMatrix left = transfer_matrix(a, -b); // transfer one period later
    const SuperMatrix right = osp_inverse(transfer_matrix(a, b));
    CHECK(mat_mul(left, mat_mul(diag_m1_m1_1(), right)) == diag_m1_m1_1());
}

TEST_CASE("osp membership") {
    CHECK(is_osp12(SuperMatrix::identity(3, {2, 1})));

    const SuperMatrix a_i = transfer_matrix(sc_even("a", 1), sc_odd("b", 1));
    CHECK(is_osp12(a_i));

    SuperMatrix neg_id = SuperMatrix::identity(3, {2, 1});
    for (int k = 0; k < 3; ++k) neg_id.set(k, k, -SuperScalar::one());
    CHECK_FALSE(is_osp12(neg_id));

    CHECK_FALSE(is_osp12(SuperMatrix::identity(2)));
}

TEST_CASE("osp inverse") {
    const SuperMatrix id = SuperMatrix::identity(3, {2, 1});
    CHECK(osp_inverse(id) == id);

    const SuperScalar a = sc_even("a", 1), b = sc_odd("b", 1);
    const SuperMatrix inv = osp_inverse(transfer_matrix(a, b));
    SuperMatrix expected(3, 3, {2, 1});
    expected.set(0, 0, a);
    expected.set(0, 1, -SuperScalar::one());
    expected.set(0, 2, -b);
    expected.set(1, 0, SuperScalar::one());
    expected.set(2, 0, -b);
    expected.set(2, 2, SuperScalar::one());
    CHECK(inv == expected);

    const SuperMatrix d = diag_m1_m1_1();
    CHECK(osp_inverse(d) == d);
    CHECK(mat_mul(d, d) == SuperMatrix::identity(3, {2, 1}));
}

TEST_CASE("first-column determinant golden values") {
    SuperMatrix one_by_one(1, 1);
    const SuperScalar u = sc_even("x") + sc_odd("b", 1);
    one_by_one.set(0, 0, u);
    CHECK(det_first_column(one_by_one) == u);

    const SuperScalar a1 = sc_even("a", 1), a2 = sc_even("a", 2);
    const SuperScalar b1 = sc_odd("b", 1), b2 = sc_odd("b", 2);

    SuperMatrix even2(2, 2);
    even2.set(0, 0, a1);
    even2.set(0, 1, -SuperScalar::one() + b1 * b2);
    even2.set(1, 0, -SuperScalar::one());
    even2.set(1, 1, a2);
    CHECK(det_first_column(even2) == a1 * a2 - 1 + b1 * b2);

    SuperMatrix odd2(2, 2);
    odd2.set(0, 0, a1);
    odd2.set(0, 1, b1);
    odd2.set(1, 0, -SuperScalar::one());
    odd2.set(1, 1, b2);
    CHECK(det_first_column(odd2) == a1 * b2 + b1);
}

TEST_CASE("berezinian golden values") {
    for (int p = 1; p <= 2; ++p) {
        const SuperMatrix id = SuperMatrix::identity(p + 1, {p, 1});
        CHECK(berezinian(id) == SuperScalar::one());
    }

    // block diagonal: det(A) / det(D)
    SuperMatrix m(3, 3, {2, 1});
    const SuperScalar x = sc_even("x"), y = sc_even("y"), z = sc_even("z");
    m.set(0, 0, x);
    m.set(1, 1, y);
    m.set(2, 2, z);
    CHECK(berezinian(m) == x * y * z.pow(-1));
}

TEST_CASE("matrix product is associative") {
    RandomScalars gen(321);
    for (int t = 0; t < 60; ++t) {
        SuperMatrix a(2, 3), b(3, 2), c(2, 2);
        for (int r = 0; r < 2; ++r)
            for (int j = 0; j < 3; ++j) a.set(r, j, gen.scalar(2));
        for (int r = 0; r < 3; ++r)
            for (int j = 0; j < 2; ++j) b.set(r, j, gen.scalar(2));
        for (int r = 0; r < 2; ++r)
            for (int j = 0; j < 2; ++j) c.set(r, j, gen.scalar(2));
        CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
    }
}

TEST_CASE("osp closure and implied relations") {
    RandomScalars gen(777);
    for (int t = 0; t < 200; ++t) {
        SuperMatrix m = transfer_matrix(gen.homogeneous(Parity::Even, 2),
                                        gen.homogeneous(Parity::Odd, 2));
        const int extra = 1 + gen.pick(2);
        for (int k = 0; k < extra; ++k)
            m = mat_mul(m, transfer_matrix(gen.homogeneous(Parity::Even, 2),
                                           gen.homogeneous(Parity::Odd, 2)));
        REQUIRE(is_osp12(m));
        CHECK(is_osp12(osp_inverse(m)));
        CHECK(mat_mul(m, osp_inverse(m)) == SuperMatrix::identity(3, {2, 1}));
        CHECK(mat_mul(osp_inverse(m), m) == SuperMatrix::identity(3, {2, 1}));

        const SuperScalar &a = m.at(0, 0), &b = m.at(0, 1), &gamma = m.at(0, 2);
        const SuperScalar &c = m.at(1, 0), &d = m.at(1, 1), &delta = m.at(1, 2);
        const SuperScalar &alpha = m.at(2, 0), &beta = m.at(2, 1);
        CHECK(gamma == a * beta - b * alpha);
        CHECK(delta == c * beta - d * alpha);
        CHECK(alpha * beta == gamma * delta);
    }
}

TEST_CASE("first-column determinant equals permutation sum on even matrices") {
    RandomScalars gen(2024);
    for (int t = 0; t < 200; ++t) {
        const int n = 2 + gen.pick(3);
        SuperMatrix m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m.set(r, c, gen.homogeneous(Parity::Even, 2));
        CHECK(det_first_column(m) == det_permutation_sum(m));
    }
}

TEST_CASE("berezinian is multiplicative on even supermatrices") {
    RandomScalars gen(31415);
    for (int t = 0; t < 200; ++t) {
        const SuperMatrix m = random_even_supermatrix(gen);
        const SuperMatrix n = random_even_supermatrix(gen);
        CHECK(berezinian(mat_mul(m, n)) == berezinian(m) * berezinian(n));
    }
}
