#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "curvex/classical.hpp"
#include "curvex/families.hpp"
#include "oracles.hpp"

using namespace curvex;

namespace {

BinaryForm power_sum(int n) {
    std::vector<Poly> cs(n + 1, Poly());
    cs[0] = Poly(Rat(1));
    cs[n] = Poly(Rat(1));
    return BinaryForm(n, std::move(cs));
}

Poly table_poly(families::Table which) {
    Poly s = Poly::variable("s"), t = Poly::variable("t");
    return families::eval_table(which, s, t, [](const Rat& c) { return Poly(c); });
}

}  // namespace

TEST_CASE("quartic invariants on the diagonal family") {
    QuarticInvariants inv = quartic_invariants(families::diagonal_quartic_at(Rat(1)));
    CHECK(inv.I2.constant_value() == Rat(13, 12));
    CHECK(inv.I3.constant_value() == Rat(35, 216));
    CHECK(inv.delta.constant_value() == Rat(9, 16));
    CHECK(inv.J.defined);
    CHECK(inv.J.value.rational_value() == Rat(2197, 972));
    CHECK(inv.K.value.rational_value() == Rat(2197, 1225));
    CHECK_THROWS_AS(quartic_invariants(power_sum(5)), std::domain_error);
}

TEST_CASE("quartic delta is the discriminant") {
    // symbolic identity on the parametric family
    BinaryForm q = families::diagonal_quartic();
    CHECK(quartic_invariants(q).delta == discriminant(q));
}

TEST_CASE("quartic absolute invariants satisfy 1/J + 1/K = 1") {
    for (long t : {0L, 1L, 3L, -5L}) {
        QuarticInvariants inv = quartic_invariants(families::diagonal_quartic_at(Rat(t)));
        if (!inv.J.defined || !inv.K.defined) continue;
        Rat j = inv.J.value.rational_value(), k = inv.K.value.rational_value();
        CHECK(Rat(1) / j + Rat(1) / k == 1);
    }
}

TEST_CASE("quartic undefined cases") {
    // t = 2 gives (z^2 + w^2)^2: delta vanishes with the discriminant
    QuarticInvariants dbl = quartic_invariants(families::diagonal_quartic_at(Rat(2)));
    CHECK(dbl.delta.is_zero());
    CHECK(!dbl.J.defined);
    // z^4 + w^4 has vanishing catalecticant, so K drops out but J survives
    QuarticInvariants ps = quartic_invariants(power_sum(4));
    CHECK(ps.I3.is_zero());
    CHECK(!ps.K.defined);
    CHECK(ps.J.value.rational_value() == 1);
}

TEST_CASE("quintic invariants golden values") {
    QuinticInvariants ps = quintic_invariants(power_sum(5));
    CHECK(ps.I4.constant_value() == 1);
    CHECK(ps.I8.is_zero());
    CHECK(ps.I12.is_zero());
    CHECK(ps.delta.constant_value() == 1);
    CHECK(ps.J.value.rational_value() == Rat("682638940569600000000000000"));
    CHECK(ps.K.value.rational_value() == 0);
    CHECK(ps.L.value.rational_value() == 0);

    QuinticInvariants f11 = quintic_invariants(families::family_st_at(Rat(1), Rat(1)));
    CHECK(f11.I4.constant_value() == Rat(122, 125));
    CHECK(f11.I8.constant_value() == Rat(-1419, 500000));
    CHECK(f11.I12.constant_value() == Rat(98293, 10000000000LL));
    CHECK(f11.delta.constant_value() == Rat(4112, 3125));
    CHECK(f11.J.value.rational_value() == Rat("127004974892974080000000000000/257"));
    CHECK(f11.K.value.rational_value() == Rat("9661513849/227829130618470400000"));
    CHECK(f11.L.value.rational_value() == Rat("19123087449375/132098"));
    CHECK_THROWS_AS(quintic_invariants(power_sum(4)), std::domain_error);
}

TEST_CASE("quintic structure relations") {
    // I8 wiring and L^2 = J K, symbolically on the two-parameter family
    BinaryForm q = families::family_st();
    QuinticInvariants inv = quintic_invariants(q);
    CHECK(Rat(128) * inv.I8 == inv.I4 * inv.I4 - inv.delta);
    CHECK(inv.L.value * inv.L.value == inv.J.value * inv.K.value);
    CHECK(inv.delta == discriminant(q));
}

TEST_CASE("canonizant") {
    CHECK(canonizant(power_sum(5)).is_zero());
    BinaryForm f = families::family_st_at(Rat(5), Rat(10));
    BinaryForm c = canonizant(f);
    CHECK(c.degree() == 3);
    // covariance: canonizant(act(m,q)) = act(m, canonizant(q)) * det(m)^-6
    auto rng = testutil::seeded_rng(301);
    for (int trial = 0; trial < 5; ++trial) {
        LinearMap2 m = testutil::rand_map(rng);
        CHECK(canonizant(act(m, f)) == act(m, c).scaled(rat_pow(m.det(), -6)));
    }
    CHECK_THROWS_AS(canonizant(power_sum(4)), std::domain_error);
}

TEST_CASE("I12 of the two-parameter quintic family in closed form") {
    BinaryForm q = families::family_st();
    Poly expect = Rat(-1, 10000000000LL) * table_poly(families::Table::i12num);
    CHECK(quintic_invariants(q).I12 == expect);
}

TEST_CASE("I18 square witness") {
    auto w = verify_i18_square(families::family_st_at(Rat(1), Rat(1)));
    REQUIRE(w.has_value());
    CHECK(*w == Rat(1100358071, 1000000000000000LL));
    auto rng = testutil::seeded_rng(302);
    for (int trial = 0; trial < 10; ++trial)
        CHECK(verify_i18_square(testutil::rand_form(rng, 5)).has_value());
    CHECK_THROWS_AS(verify_i18_square(power_sum(4)), std::domain_error);
    CHECK_THROWS_AS(verify_i18_square(families::family_st()), std::invalid_argument);
}

TEST_CASE("sextic calibration constants") {
    const SexticCalibrationOutcome& out = try_sextic_calibration();
    REQUIRE(out.ok);
    CHECK(out.samples == 20);
    CHECK(out.details.find("zero residual") != std::string::npos);
    const SexticCalibration& cal = sextic_calibration();
    CHECK(cal.alpha == Rat(1, 3));
    CHECK(cal.beta == Rat(1, 9674588160000LL));
    CHECK(cal.gamma[0] == Rat(8, 405));
    CHECK(cal.gamma[1] == Rat(-37, 1306069401600000LL));
    CHECK(cal.gamma[2] == Rat("7/701982420492091392000000000"));
    CHECK(cal.gamma[3] == 0);
    CHECK(cal.gamma[4] == 0);
    CHECK(cal.gamma[5] == Rat("1/24260512452206678507520000000000"));
}

TEST_CASE("sextic invariants") {
    SexticInvariants ps = sextic_invariants(power_sum(6));
    CHECK(ps.I2.constant_value() == 2);
    // z^6 + w^6 sits on E = I2^2 - 2 I4 = 0, so the absolute invariants drop out
    CHECK(!ps.J.defined);

    // the sextic associated to the (s,t) = (5,10) quintic carries known values
    BinaryForm a = families::family_st_associated_at(Rat(5), Rat(10));
    SexticInvariants inv = sextic_invariants(a);
    CHECK(inv.J.value.rational_value() == Rat(605, 1273));
    CHECK(inv.K.value.rational_value() == Rat("1051482012800000/2062933417"));
    CHECK(inv.L.value.rational_value() == Rat(-797588000, 1620529));

    std::vector<Poly> z6(7, Poly());
    z6[6] = Poly(Rat(1));
    SexticInvariants degen = sextic_invariants(BinaryForm(6, z6));
    CHECK(degen.I2.is_zero());
    CHECK(degen.I4.is_zero());
    CHECK(!degen.J.defined);
    CHECK_THROWS_AS(sextic_invariants(power_sum(5)), std::domain_error);
}

TEST_CASE("generic J") {
    CHECK(inv_J(power_sum(5)).value.rational_value() == Rat("682638940569600000000000000"));
    // even degree goes through T^(n-1); on quartics it is 1152^3 times the
    // normalized quartic J
    InvariantValue j4 = inv_J(families::diagonal_quartic_at(Rat(1)));
    CHECK(j4.value.rational_value() == Rat(3455582208LL));
    CHECK(j4.value.rational_value() == rat_pow(Rat(1152), 3) * Rat(2197, 972));
    CHECK_THROWS_AS(inv_J(BinaryForm(2, {Poly(Rat(1)), Poly(), Poly(Rat(1))})),
                    std::domain_error);
}

TEST_CASE("generic M") {
    InvariantValue m = inv_M(families::diagonal_quartic_at(Rat(1)));
    REQUIRE(m.defined);
    CHECK(m.value.rational_value() == Rat(3, 2));
    CHECK_THROWS_AS(inv_M(power_sum(5)), std::domain_error);
    CHECK_THROWS_AS(inv_M(BinaryForm(2, {Poly(Rat(1)), Poly(), Poly(Rat(1))})),
                    std::domain_error);
}

TEST_CASE("absolute invariants are constant on orbits") {
    auto rng = testutil::seeded_rng(303);
    for (int trial = 0; trial < 4; ++trial) {
        LinearMap2 m = testutil::rand_map(rng);

        BinaryForm q4 = testutil::rand_square_free_form(rng, 4);
        QuarticInvariants a4 = quartic_invariants(q4), b4 = quartic_invariants(act(m, q4));
        CHECK(a4.J.value == b4.J.value);

        BinaryForm q5 = testutil::rand_square_free_form(rng, 5);
        QuinticInvariants a5 = quintic_invariants(q5), b5 = quintic_invariants(act(m, q5));
        CHECK(a5.J.value == b5.J.value);
        CHECK(a5.K.value == b5.K.value);
        CHECK(a5.L.value == b5.L.value);

        CHECK(inv_J(q4).value == inv_J(act(m, q4)).value);
        CHECK(inv_M(q4).value == inv_M(act(m, q4)).value);
    }
}
