#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "e2ab/matrix_group.hpp"
#include "e2ab/subgroups.hpp"

using namespace e2ab;

namespace {

// |SL2(Z/n)| = n^3 * prod over p | n of (1 - 1/p^2)
size_t sl2_order(size_t n) {
    size_t num = n * n * n, rest = n;
    for (size_t p = 2; p * p <= rest; ++p) {
        if (rest % p) continue;
        while (rest % p == 0) rest /= p;
        num = num / (p * p) * (p * p - 1);
    }
    if (rest > 1) num = num / (rest * rest) * (rest * rest - 1);
    return num;
}

}  // namespace

TEST_CASE("E2 enumeration over small fields and rings") {
    CHECK(generate_e2(parse_ring_spec("Z/1")).size() == 1);
    CHECK(generate_e2(parse_ring_spec("Z/2")).size() == 6);    // SL2(F2) = S3
    CHECK(generate_e2(parse_ring_spec("Z/3")).size() == 24);
    CHECK(generate_e2(parse_ring_spec("Z/4")).size() == 48);
    CHECK(generate_e2(parse_ring_spec("Z/6")).size() == sl2_order(6));
    CHECK(generate_e2(parse_ring_spec("GF(4)")).size() == 60);  // SL2(F4) = A5
}

TEST_CASE("every element has determinant one; E2 = SL2 on the corpus") {
    for (const char *spec : {"Z/2", "Z/4", "Z/6", "GF(9)", "Z/2[x]/(x^2)", "Z/2 x Z/3"}) {
        RingPtr r = parse_ring_spec(spec);
        MatrixGroup g = generate_e2(r);
        for (size_t i = 0; i < g.size(); ++i) CHECK(g.element(i).det() == r->one());
        CHECK(equals_sl2(g));
    }
    for (size_t n : {2, 3, 4, 5, 8, 9, 12}) {
        CHECK(generate_e2(FiniteRing::zmod(n)).size() == sl2_order(n));
    }
}

TEST_CASE("cap is enforced") {
    CHECK_THROWS_AS(generate_e2(parse_ring_spec("Z/97"), 1000), CapExceeded);
}

TEST_CASE("group operations are consistent") {
    MatrixGroup g = generate_e2(parse_ring_spec("Z/4"));
    for (size_t x = 0; x < g.size(); ++x) {
        CHECK(g.mul(x, g.inv(x)) == 0);
        CHECK(g.mul(0, x) == x);
        CHECK(g.id_of(g.element(x)) == x);
    }
}

TEST_CASE("abelianization of E2 over small rings") {
    // SL2(F2) = S3 abelianizes to Z/2
    CHECK(abelianization(generate_e2(parse_ring_spec("Z/2"))).group == AbelianGroup{0, {2}});
    // SL2(F3): quotient by quaternion commutator subgroup is Z/3
    CHECK(abelianization(generate_e2(parse_ring_spec("Z/3"))).group == AbelianGroup{0, {3}});
    // SL2(F4) = A5 is perfect
    CHECK(abelianization(generate_e2(parse_ring_spec("GF(4)"))).group.is_trivial());
    CHECK(abelianization(generate_e2(parse_ring_spec("Z/4"))).group == AbelianGroup{0, {4}});
    CHECK(abelianization(generate_e2(parse_ring_spec("Z/12"))).group == AbelianGroup{0, {12}});
    // product ring: E2(Z/6)^ab = E2(Z/2)^ab x E2(Z/3)^ab
    CHECK(abelianization(generate_e2(parse_ring_spec("Z/6"))).group == AbelianGroup{0, {6}});
}

TEST_CASE("abelianization projection is a homomorphism onto the quotient") {
    MatrixGroup g = generate_e2(parse_ring_spec("Z/4"));
    GroupAbelianization ab = abelianization(g);
    REQUIRE(ab.group == AbelianGroup{0, {4}});
    auto coords = [&](size_t id) { return ab.coset_coords[ab.coset_of[id]]; };
    for (size_t x = 0; x < g.size(); x += 7)
        for (size_t y = 0; y < g.size(); y += 5) {
            auto cx = coords(x), cy = coords(y), cxy = coords(g.mul(x, y));
            for (size_t k = 0; k < cx.size(); ++k)
                CHECK((cx[k] + cy[k]) % ab.group.torsion[k] == cxy[k]);
        }
    // commutators map to zero
    for (size_t id : ab.commutator_ids)
        for (const auto &c : coords(id)) CHECK(c == 0);
}

TEST_CASE("beta: A/M to E2^ab") {
    BetaReport b12 = beta_map(parse_ring_spec("Z/12"));
    CHECK(b12.well_defined);
    CHECK(b12.surjective);
    CHECK(b12.bijective);
    CHECK(b12.domain == AbelianGroup{0, {12}});
    CHECK(b12.codomain == AbelianGroup{0, {12}});
    CHECK(b12.kernel.is_trivial());

    BetaReport bf4 = beta_map(parse_ring_spec("GF(4)"));
    CHECK(bf4.well_defined);
    CHECK(bf4.surjective);
    CHECK(bf4.domain.is_trivial());
    CHECK(bf4.codomain.is_trivial());

    BetaReport b6 = beta_map(parse_ring_spec("Z/6"));
    CHECK(b6.well_defined);
    CHECK(b6.surjective);
    CHECK(b6.domain.torsion_order() % b6.codomain.torsion_order() == 0);
}
