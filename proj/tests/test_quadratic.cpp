#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "e2ab/quadratic.hpp"

using namespace e2ab;

TEST_CASE("order construction") {
    CHECK_FALSE(QuadraticOrder(-1).half_basis());
    CHECK_FALSE(QuadraticOrder(2).half_basis());
    CHECK(QuadraticOrder(5).half_basis());
    CHECK(QuadraticOrder(-3).half_basis());
    CHECK(QuadraticOrder(-7).half_basis());
    CHECK_THROWS_AS(QuadraticOrder(0), std::invalid_argument);
    CHECK_THROWS_AS(QuadraticOrder(1), std::invalid_argument);
    CHECK_THROWS_AS(QuadraticOrder(4), std::invalid_argument);
    CHECK_THROWS_AS(QuadraticOrder(-12), std::invalid_argument);
    CHECK(QuadraticOrder::is_square_free(30));
    CHECK_FALSE(QuadraticOrder::is_square_free(18));
}

TEST_CASE("norms and conjugates, pinned values") {
    QuadraticOrder o11(-11);
    QuadInt x(o11, 0, 1);  // (1 + sqrt(-11)) / 2
    CHECK(x.norm() == 3);
    CHECK(x.trace() == 1);
    CHECK((x * x.conjugate()) == QuadInt(o11, 3, 0));

    QuadraticOrder o2(2);
    QuadInt u(o2, 1, 1);  // 1 + sqrt(2)
    CHECK(u.norm() == -1);
    CHECK(u.is_unit());
    CHECK((u * u.inverse()) == u.one());

    QuadraticOrder om1(-1);
    QuadInt i(om1, 0, 1);
    CHECK(i.norm() == 1);
    CHECK((i * i) == -i.one());
}

TEST_CASE("theta satisfies its minimal polynomial") {
    // d = 2,3 mod 4: theta^2 = d; d = 1 mod 4: theta^2 = (d-1)/4 + theta
    for (long d : {-5L, -2L, 2L, 3L, 7L}) {
        QuadraticOrder o(d);
        QuadInt t(o, 0, 1);
        CHECK((t * t) == QuadInt(o, d, 0));
    }
    for (long d : {-11L, -3L, 5L, 13L, 21L}) {
        QuadraticOrder o(d);
        QuadInt t(o, 0, 1);
        CHECK((t * t) == QuadInt(o, (d - 1) / 4, 1));
    }
}

TEST_CASE("conjugation is an involutive ring homomorphism; norm multiplicative") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coef(-50, 50);
    for (long d : {-11L, -2L, 3L, 5L, 57L}) {
        QuadraticOrder o(d);
        for (int t = 0; t < 200; ++t) {
            QuadInt a(o, coef(rng), coef(rng)), b(o, coef(rng), coef(rng));
            CHECK(a.conjugate().conjugate() == a);
            CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
            CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
            CHECK((a * b).norm() == a.norm() * b.norm());
            CHECK((a * a.conjugate()) == QuadInt(o, a.norm(), 0));
            CHECK((a + a.conjugate()) == QuadInt(o, a.trace(), 0));
        }
    }
}

TEST_CASE("units are exactly norm +-1") {
    QuadraticOrder o(5);
    CHECK(QuadInt(o, 0, 1).is_unit());   // omega, norm -1
    CHECK(QuadInt(o, 1, 1).is_unit());   // omega^2
    CHECK_FALSE(QuadInt(o, 2, 0).is_unit());
    CHECK_THROWS_AS(QuadInt(o, 2, 0).inverse(), std::exception);
    QuadraticOrder n(-5);
    CHECK_FALSE(QuadInt(n, 0, 1).is_unit());  // norm 5
}

TEST_CASE("order mismatch is rejected") {
    QuadInt a(QuadraticOrder(2), 1, 1), b(QuadraticOrder(3), 1, 1);
    CHECK_THROWS_AS((void)(a + b), std::exception);
    CHECK_THROWS_AS((void)(a * b), std::exception);
}
