#include <doctest.h>

#include "random_gen.hpp"
#include "superfrieze/errors.hpp"
#include "superfrieze/scalar.hpp"

using namespace superfrieze;
using superfrieze::testing::RandomScalars;

TEST_CASE("generators and squares") {
    const SuperScalar a1 = sc_even("a", 1);
    CHECK(a1.term_count() == 1);
    CHECK(a1.is_even());

    const SuperScalar b2 = sc_odd("b", 2);
    CHECK(b2.is_odd());

    const SuperScalar xi = sc_odd("xi");
    CHECK((xi * xi).is_zero());
}

TEST_CASE("additive structure") {
    const SuperScalar xi = sc_odd("xi");
    CHECK((xi + (-xi)).is_zero());

    const SuperScalar a1 = sc_even("a", 1);
    CHECK((a1 + 1).term_count() == 2);

    const SuperScalar b1 = sc_odd("b", 1), b2 = sc_odd("b", 2);
    CHECK((b1 * b2 + b2 * b1).is_zero());
}

TEST_CASE("multiplication and anticommutativity") {
    const SuperScalar xi = sc_odd("xi"), eta = sc_odd("eta");
    CHECK(xi * eta == -(eta * xi));

    const SuperScalar a1 = sc_even("a", 1), a2 = sc_even("a", 2);
    CHECK(a1 * a2 == a2 * a1);

    const SuperScalar b1 = sc_odd("b", 1), b2 = sc_odd("b", 2);
    const SuperScalar s = b1 + b2;
    CHECK((s * s).is_zero());
}

TEST_CASE("inverses") {
    const SuperScalar one = SuperScalar::one();
    const SuperScalar xi = sc_odd("xi");
    CHECK((one + xi).inverse() == one - xi);

    const SuperScalar x = sc_even("x"), y = sc_even("y");
    // y / (x + xi) = y/x - xi y / x^2
    const SuperScalar lhs = y / (x + xi);
    const SuperScalar rhs = y * x.pow(-1) - xi * y * x.pow(-2);
    CHECK(lhs == rhs);

    CHECK_THROWS_AS((void)(x + 1).inverse(), NotInvertible);
    CHECK_THROWS_AS((void)SuperScalar::zero().inverse(), NotInvertible);
}

TEST_CASE("division golden values") {
    const SuperScalar x1 = sc_even("x", 1), x2 = sc_even("x", 2);
    const SuperScalar q = (x2 + 1) / x1;
    CHECK(q == x2 * x1.pow(-1) + x1.pow(-1));

    CHECK((SuperScalar::zero() / x1).is_zero());

    const SuperScalar x = sc_even("x");
    const SuperScalar eta = sc_odd("eta"), xi = sc_odd("xi");
    CHECK((2 + eta * xi) / x == 2 * x.pow(-1) + eta * xi * x.pow(-1));
}

TEST_CASE("substitution") {
    const SuperScalar a1 = sc_even("a", 1), a2 = sc_even("a", 2);
    const SuperScalar b1 = sc_odd("b", 1), b2 = sc_odd("b", 2);
    const SuperScalar v2 = a1 * a2 - 1 + b1 * b2;

    std::map<GeneratorId, SuperScalar> kill{{odd_gen("b", 1), SuperScalar::zero()},
                                            {odd_gen("b", 2), SuperScalar::zero()}};
    CHECK(v2.substitute(kill) == a1 * a2 - 1);

    CHECK(v2.substitute({}) == v2);

    const SuperScalar xi = sc_odd("xi"), eta = sc_odd("eta");
    std::map<GeneratorId, SuperScalar> swap{{odd_gen("xi"), eta}, {odd_gen("eta"), xi}};
    CHECK((xi * eta).substitute(swap) == -(xi * eta));

    std::map<GeneratorId, SuperScalar> bad{{odd_gen("xi"), sc_even("x")}};
    CHECK_THROWS_AS((void)(xi * eta).substitute(bad), ParityMismatch);
}

TEST_CASE("body, soul and parity") {
    const SuperScalar x = sc_even("x"), xi = sc_odd("xi"), y = sc_even("y");
    const SuperScalar s = x + xi * y;
    CHECK(s.body() == x);
    CHECK(s.soul() == xi * y);
    CHECK(s.body() + s.soul() == s);

    CHECK((sc_even("a", 1) + sc_odd("b", 1)).parity() == ParityClass::Mixed);
    CHECK(SuperScalar::zero().parity() == ParityClass::Even);
}

TEST_CASE("koszul sign rule on random homogeneous values") {
    RandomScalars gen(20240901);
    for (int t = 0; t < 250; ++t) {
        const Parity pu = gen.pick(2) ? Parity::Odd : Parity::Even;
        const Parity pv = gen.pick(2) ? Parity::Odd : Parity::Even;
        const SuperScalar u = gen.homogeneous(pu);
        const SuperScalar v = gen.homogeneous(pv);
        const bool both_odd = pu == Parity::Odd && pv == Parity::Odd;
        const SuperScalar rhs = both_odd ? -(v * u) : v * u;
        CHECK(u * v == rhs);
    }
}

TEST_CASE("ring axioms on random values") {
    RandomScalars gen(7);
    for (int t = 0; t < 250; ++t) {
        const SuperScalar u = gen.scalar(), v = gen.scalar(), w = gen.scalar();
        CHECK((u * v) * w == u * (v * w));
        CHECK(u * (v + w) == u * v + u * w);
        CHECK((u + v) * w == u * w + v * w);
    }
}

TEST_CASE("inverse is two-sided on random invertible values") {
    RandomScalars gen(99);
    const SuperScalar one = SuperScalar::one();
    for (int t = 0; t < 250; ++t) {
        const SuperScalar u = gen.invertible();
        const SuperScalar inv = u.inverse();
        CHECK(u * inv == one);
        CHECK(inv * u == one);
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    RandomScalars gen(1234);
    for (int t = 0; t < 200; ++t) {
        // non-negative exponents so arbitrary (non-invertible) images are fine
        const SuperScalar u = gen.scalar(3, false), v = gen.scalar(3, false);
        std::map<GeneratorId, SuperScalar> sub{
            {even_gen("e", 1), gen.homogeneous(Parity::Even, 2)},
            {odd_gen("o", 1), gen.homogeneous(Parity::Odd, 2)},
        };
        CHECK((u * v).substitute(sub) == u.substitute(sub) * v.substitute(sub));
        CHECK((u + v).substitute(sub) == u.substitute(sub) + v.substitute(sub));
    }
}

TEST_CASE("soul nilpotency bound") {
    RandomScalars gen(55);
    for (int t = 0; t < 100; ++t) {
        const SuperScalar u = gen.scalar();
        const SuperScalar s = u.soul();
        const int k = static_cast<int>(u.odd_generators().size());
        CHECK(s.pow(k + 1).is_zero());
    }
}
