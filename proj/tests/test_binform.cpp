#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "curvex/binary_form.hpp"
#include "curvex/families.hpp"
#include "oracles.hpp"

using namespace curvex;

namespace {

BinaryForm power_sum(int n) {
    // z^n + w^n
    std::vector<Poly> cs(n + 1, Poly());
    cs[0] = Poly(Rat(1));
    cs[n] = Poly(Rat(1));
    return BinaryForm(n, std::move(cs));
}

LinearMap2 inverse(const LinearMap2& m) {
    Rat d = m.det();
    return LinearMap2{m.d / d, -m.b / d, -m.c / d, m.a / d};
}

}  // namespace

TEST_CASE("construction and accessors") {
    BinaryForm f(2, {Poly(Rat(1)), Poly(Rat(4)), Poly(Rat(3))});
    CHECK(f.degree() == 2);
    CHECK(f.coeff(0).constant_value() == 1);
    CHECK(f.coeff(2).constant_value() == 3);
    CHECK(f.abin(1) == Poly(Rat(2)));  // coeff / C(2,1)
    CHECK_THROWS_AS(f.coeff(3), std::out_of_range);
    CHECK_THROWS_AS(f.coeff(-1), std::out_of_range);
    CHECK_THROWS_AS(BinaryForm(1, {Poly(Rat(1))}), std::invalid_argument);
    CHECK_THROWS_AS(BinaryForm(-2, {}), std::invalid_argument);
    CHECK(BinaryForm::zero(3).is_zero());
    CHECK(!f.is_zero());
    CHECK(f.has_rational_coeffs());
    CHECK(f.rational_coeffs() == std::vector<Rat>{Rat(1), Rat(4), Rat(3)});
    CHECK(f.str() == "3*z^2 + 4*z*w + w^2");
}

TEST_CASE("poly round trip") {
    BinaryForm q = families::family_st();  // parametric in s, t
    CHECK(!q.has_rational_coeffs());
    CHECK(BinaryForm::from_poly(q.to_poly()) == q);
    CHECK_THROWS_AS(BinaryForm::from_poly(Poly::variable("z") + Poly(Rat(1))),
                    std::invalid_argument);
    CHECK_THROWS_AS(BinaryForm::from_poly(Poly()), std::invalid_argument);
    // a constant is homogeneous of degree 0
    CHECK(BinaryForm::from_poly(Poly(Rat(5))).degree() == 0);
}

TEST_CASE("parameter binding") {
    BinaryForm q = families::family_st();
    BinaryForm at = q.evaluated_params({{"s", Rat(5)}, {"t", Rat(10)}});
    CHECK(at == families::family_st_at(Rat(5), Rat(10)));
    // substituting s by a polynomial keeps the form parametric
    BinaryForm sub = q.substituted_params({{"s", Poly::variable("t")}});
    CHECK(sub.coeff(4) == Poly::variable("t"));
}

TEST_CASE("arithmetic") {
    BinaryForm a = power_sum(3);
    BinaryForm b = BinaryForm(3, {Poly(Rat(1)), Poly(), Poly(), Poly(Rat(-1))});
    CHECK((a + b).coeff(0).constant_value() == 2);
    CHECK((a - a).is_zero());
    CHECK((a * b).degree() == 6);
    CHECK(a.scaled(Rat(3)).coeff(3).constant_value() == 3);
    CHECK_THROWS_AS(a + power_sum(4), std::invalid_argument);
    // product against the poly route
    auto rng = testutil::seeded_rng(201);
    for (int trial = 0; trial < 5; ++trial) {
        BinaryForm p = testutil::rand_form(rng, 3), s = testutil::rand_form(rng, 4);
        CHECK((p * s).to_poly() == p.to_poly() * s.to_poly());
    }
}

TEST_CASE("derivatives") {
    auto rng = testutil::seeded_rng(202);
    BinaryForm q = testutil::rand_form(rng, 5);
    CHECK(q.derivative(1, 0).derivative(0, 1) == q.derivative(0, 1).derivative(1, 0));
    CHECK(q.derivative(2, 3).degree() == 0);
    CHECK_THROWS_AS(q.derivative(3, 3), std::domain_error);
    // Euler: z q_z + w q_w = n q
    Poly z = Poly::variable("z"), w = Poly::variable("w");
    Poly euler = z * q.derivative(1, 0).to_poly() + w * q.derivative(0, 1).to_poly();
    CHECK(euler == Rat(5) * q.to_poly());
}

TEST_CASE("linear action is a group action") {
    auto rng = testutil::seeded_rng(203);
    for (int trial = 0; trial < 8; ++trial) {
        BinaryForm q = testutil::rand_form(rng, 4);
        LinearMap2 m1 = testutil::rand_map(rng), m2 = testutil::rand_map(rng);
        CHECK(act(m1, act(m2, q)) == act(testutil::compose(m1, m2), q));
        CHECK(act(inverse(m1), act(m1, q)) == q);
    }
    LinearMap2 id{Rat(1), Rat(0), Rat(0), Rat(1)};
    BinaryForm q = power_sum(4);
    CHECK(act(id, q) == q);
    // scalar matrix u*I scales a degree-n form by u^(-n)
    LinearMap2 scale{Rat(3), Rat(0), Rat(0), Rat(3)};
    CHECK(act(scale, q) == q.scaled(Rat(1, 81)));
    CHECK_THROWS_AS(act(LinearMap2{Rat(1), Rat(2), Rat(2), Rat(4)}, q), std::domain_error);
}

TEST_CASE("from_roots") {
    std::vector<std::pair<Rat, Rat>> roots = {{Rat(2), Rat(1)}, {Rat(-1), Rat(3)}, {Rat(1), Rat(0)}};
    BinaryForm f = from_roots(roots);
    CHECK(f.degree() == 3);
    for (const auto& [a, b] : roots) {
        Poly v = f.to_poly().substituted({{"z", Poly(a)}, {"w", Poly(b)}});
        CHECK(v.is_zero());
    }
    CHECK_THROWS_AS(from_roots({{Rat(0), Rat(0)}}), std::domain_error);
    CHECK(from_roots({}).degree() == 0);
}

TEST_CASE("transvectant basics") {
    auto rng = testutil::seeded_rng(204);
    BinaryForm p = testutil::rand_form(rng, 4), s = testutil::rand_form(rng, 5);
    CHECK(transvectant(p, s, 0) == p * s);
    for (int r = 1; r <= 4; ++r) {
        BinaryForm lhs = transvectant(p, s, r), rhs = transvectant(s, p, r);
        CHECK(lhs == (r % 2 ? rhs.scaled(Rat(-1)) : rhs));
        CHECK(lhs.degree() == 4 + 5 - 2 * r);
    }
    // odd self-transvectants vanish
    CHECK(transvectant(s, s, 3).is_zero());
    // bilinearity in the first slot
    BinaryForm p2 = testutil::rand_form(rng, 4);
    CHECK(transvectant(p + p2, s, 2) == transvectant(p, s, 2) + transvectant(p2, s, 2));
    CHECK_THROWS_AS(transvectant(p, s, 5), std::domain_error);
    CHECK_THROWS_AS(transvectant(p, s, -1), std::domain_error);
}

TEST_CASE("second self-transvectant is twice the hessian") {
    auto rng = testutil::seeded_rng(205);
    for (int n : {3, 4, 5, 6}) {
        BinaryForm q = testutil::rand_form(rng, n);
        CHECK(transvectant(q, q, 2) == hessian(q).scaled(Rat(2)));
    }
}

TEST_CASE("transvectant covariance under coordinate changes") {
    auto rng = testutil::seeded_rng(206);
    for (int trial = 0; trial < 6; ++trial) {
        BinaryForm p = testutil::rand_form(rng, 4), s = testutil::rand_form(rng, 4);
        LinearMap2 m = testutil::rand_map(rng);
        for (int r : {1, 2, 4}) {
            BinaryForm lhs = transvectant(act(m, p), act(m, s), r);
            BinaryForm rhs = act(m, transvectant(p, s, r)).scaled(rat_pow(m.det(), -r));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("hessian") {
    auto rng = testutil::seeded_rng(207);
    BinaryForm q = testutil::rand_form(rng, 5);
    CHECK(hessian(q).degree() == 6);
    CHECK_THROWS_AS(hessian(BinaryForm(1, {Poly(Rat(1)), Poly(Rat(1))})), std::domain_error);
    // powers of a linear form are degenerate
    BinaryForm lin(1, {Poly(Rat(1)), Poly(Rat(1))});
    BinaryForm pow4 = lin * lin * lin * lin;
    CHECK(hessian(pow4).is_zero());
    for (int trial = 0; trial < 6; ++trial) {
        BinaryForm f = testutil::rand_form(rng, 4);
        LinearMap2 m = testutil::rand_map(rng);
        CHECK(hessian(act(m, f)) == act(m, hessian(f)).scaled(rat_pow(m.det(), -2)));
    }
}

TEST_CASE("resultant") {
    // degree-1 pair: res(az + bw, cz + dw) = ad - bc
    BinaryForm l1(1, {Poly(Rat(3)), Poly(Rat(2))});
    BinaryForm l2(1, {Poly(Rat(5)), Poly(Rat(4))});
    CHECK(resultant(l1, l2).constant_value() == -2);

    auto rng = testutil::seeded_rng(208);
    for (int trial = 0; trial < 6; ++trial) {
        BinaryForm p = testutil::rand_form(rng, 2), q = testutil::rand_form(rng, 3),
                   s = testutil::rand_form(rng, 2);
        CHECK(resultant(p * q, s) == resultant(p, s) * resultant(q, s));
        // swap picks up (-1)^(deg p * deg s)
        Rat sign = (p.degree() * s.degree()) % 2 ? Rat(-1) : Rat(1);
        CHECK(resultant(p, s) == sign * resultant(s, p));
    }
    // a shared root forces the resultant to vanish
    BinaryForm shared = from_roots({{Rat(1), Rat(2)}});
    BinaryForm f1 = shared * from_roots({{Rat(3), Rat(1)}});
    BinaryForm f2 = shared * from_roots({{Rat(0), Rat(1)}});
    CHECK(resultant(f1, f2).is_zero());
    CHECK_THROWS_AS(resultant(BinaryForm::zero(2), l1), std::domain_error);
}

TEST_CASE("discriminant golden values") {
    CHECK(discriminant(power_sum(5)).constant_value() == 1);
    CHECK(discriminant(families::diagonal_quartic_at(Rat(1))).constant_value() == Rat(9, 16));
    CHECK(discriminant(BinaryForm(1, {Poly(Rat(2)), Poly(Rat(7))})).constant_value() == 1);
    CHECK_THROWS_AS(discriminant(BinaryForm(0, {Poly(Rat(1))})), std::domain_error);
    // a repeated factor kills it
    BinaryForm dbl = from_roots({{Rat(1), Rat(2)}, {Rat(1), Rat(2)}, {Rat(0), Rat(1)}});
    CHECK(discriminant(dbl).is_zero());
    // vanishing leading coefficient is fine: w * (z^3 + w^3) is square-free
    BinaryForm wcube(4, {Poly(Rat(1)), Poly(), Poly(), Poly(Rat(1)), Poly()});
    CHECK(!discriminant(wcube).is_zero());
}

TEST_CASE("discriminant matches the root-pair product") {
    auto rng = testutil::seeded_rng(209);
    std::uniform_int_distribution<int> pick(-6, 6);
    for (int n = 2; n <= 5; ++n) {
        for (int trial = 0; trial < 6; ++trial) {
            // distinct projective rational roots
            std::vector<std::pair<Rat, Rat>> roots;
            while (static_cast<int>(roots.size()) < n) {
                Rat a(pick(rng)), b(pick(rng));
                if (a == 0 && b == 0) continue;
                bool dup = false;
                for (const auto& [c, d] : roots) dup = dup || a * d - b * c == 0;
                if (!dup) roots.emplace_back(a, b);
            }
            BinaryForm f = from_roots(roots);
            CHECK(discriminant(f).constant_value() == testutil::disc_from_roots(roots));
        }
    }
}

TEST_CASE("discriminant weight under coordinate changes") {
    auto rng = testutil::seeded_rng(210);
    for (int n : {3, 4, 5}) {
        for (int trial = 0; trial < 5; ++trial) {
            BinaryForm q = testutil::rand_form(rng, n);
            LinearMap2 m = testutil::rand_map(rng);
            Rat weight = rat_pow(m.det(), n * (n - 1));
            CHECK(discriminant(q).constant_value() ==
                  weight * discriminant(act(m, q)).constant_value());
        }
    }
}

TEST_CASE("universal discriminant specializes correctly") {
    auto rng = testutil::seeded_rng(211);
    for (int n = 2; n <= 6; ++n) {
        const Poly& u = universal_discriminant(n);
        for (int trial = 0; trial < 3; ++trial) {
            BinaryForm q = testutil::rand_form(rng, n);
            std::map<std::string, Rat> bind;
            for (int i = 0; i <= n; ++i) {
                std::string name = "#u0" + std::to_string(i);
                bind[name] = q.coeff(i).constant_value();
            }
            CHECK(u.evaluate(bind) == discriminant(q).constant_value());
        }
    }
    CHECK_THROWS_AS(universal_discriminant(1), std::domain_error);
    CHECK_THROWS_AS(universal_discriminant(7), std::domain_error);
}

TEST_CASE("square-free detection against the euclidean oracle") {
    auto rng = testutil::seeded_rng(212);
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            BinaryForm q = testutil::rand_form(rng, n);
            CHECK(is_square_free(q) == testutil::square_free_oracle(q));
        }
    }
    // engineered repeated factors
    BinaryForm sq = from_roots({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}});
    CHECK(!is_square_free(sq * from_roots({{Rat(2), Rat(1)}})));
    // double root at (1:0), i.e. w^2 divides: w^2 (z + w)
    BinaryForm winf(3, {Poly(Rat(1)), Poly(Rat(1)), Poly(), Poly()});
    CHECK(!is_square_free(winf));
    CHECK(!testutil::square_free_oracle(winf));
    CHECK(is_square_free(from_roots({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}})));
    CHECK_THROWS_AS(is_square_free(BinaryForm::zero(2)), std::domain_error);
}

TEST_CASE("parametric discriminant of the one-parameter family") {
    // symbolic in t for one degree; the per-degree sweep lives in the
    // acceptance run
    int n = 5;
    Poly t = Poly::variable("t");
    Poly expect = Rat(256, 3125) * t.pow(5) + Poly(Rat(1));
    CHECK(discriminant(families::family_t(n)) == expect);
}
