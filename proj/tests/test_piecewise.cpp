#include <random>

#include "doctest.h"
#include "nctorus/piecewise.hpp"

using namespace nct;

TEST_CASE("polyx basics") {
    PolyX p({Rat(1), Rat(2), Rat(3)}); // 1 + 2x + 3x^2
    CHECK(p.eval(Rat(2)) == Rat(17));
    CHECK(p.derivative() == PolyX({Rat(2), Rat(6)}));
    CHECK(p.antiderivative().derivative() == p);
    auto q = p.compose_affine(Rat(2), Rat(1)); // p(2x+1)
    CHECK(q.eval(Rat(1)) == p.eval(Rat(3)));
    auto d = (p * p).divided_by(p);
    REQUIRE(d.has_value());
    CHECK(*d == p);
    CHECK_FALSE((p + PolyX::constant(Rat(1))).divided_by(p).has_value());
}

TEST_CASE("piecewise construction and continuity") {
    Rat a(3, 10), e(1, 10);
    auto f = rieffel_f(a, e, Ramp::quintic);
    CHECK(f.continuity_defect() < 1e-12);
    CHECK(f.eval(0.0) == doctest::Approx(0.0));
    CHECK(f.eval(0.2) == doctest::Approx(1.0));
    CHECK(f.eval(0.9) == doctest::Approx(0.0));

    auto g = rieffel_g(a, e, Ramp::quintic);
    CHECK(g.radicands_nonnegative());
    CHECK(g.continuity_defect() < 1e-12);
    // f(x) = 1 - f(x - alpha) on the down ramp
    for (double x : {0.31, 0.33, 0.36, 0.39})
        CHECK(f.eval(x) == doctest::Approx(1.0 - f.eval(x - 0.3)).epsilon(1e-12));
}

TEST_CASE("pw_integrate") {
    CHECK(PiecewiseFn::constant(Rat(1)).integral().exact_value == Rat(1));

    for (Ramp r : {Ramp::quintic, Ramp::cubic}) {
        Rat a(3, 10), e(1, 10);
        auto f = rieffel_f(a, e, r);
        auto I = f.integral();
        REQUIRE(I.exact);
        CHECK(I.exact_value == a); // ramp contributions cancel: f(x) = 1 - f(x-alpha)
        CHECK(std::abs(I.value - 0.3) < 1e-10);

        // integral of g^2 f' over the ramp: substitution u = f gives
        // int_1^0 (u - u^2) du = -1/6
        auto g = rieffel_g(a, e, r);
        auto gg = g * g;
        auto integrand = gg * f.derivative();
        auto J = integrand.integral();
        REQUIRE(J.exact); // even root powers fold back into polynomials
        CHECK(J.exact_value == make_rat(-1, 6));
        CHECK(std::abs(J.value + 1.0 / 6.0) < 1e-10);

        // quadrature cross-check on the raw evaluation
        double quad = adaptive_quad([&](double x) { return g.eval(x) * g.eval(x) * f.derivative().eval(x); },
                                    0.0, 1.0);
        CHECK(std::abs(quad + 1.0 / 6.0) < 1e-9);
    }
}

TEST_CASE("pw ring identities for the projection data") {
    for (Ramp r : {Ramp::quintic, Ramp::cubic}) {
        Rat a(3, 10), e(1, 10);
        auto f = rieffel_f(a, e, r);
        auto g = rieffel_g(a, e, r);

        // disjoint supports
        CHECK((g * g.translated(a)).is_zero());
        CHECK((g * g.translated(-a)).is_zero());
        // g (f + f(.-alpha)) = g
        CHECK(g * (f + f.translated(a)) == g);
        // f^2 + g^2 + g(.+alpha)^2 = f
        CHECK(f * f + g * g + g.translated(-a) * g.translated(-a) == f);
    }
}

TEST_CASE("pw derive on root pieces") {
    Rat a(3, 10), e(1, 10);
    auto g = rieffel_g(a, e, Ramp::quintic);
    auto gp = g.derivative();
    // g g' = (g^2)'/2, and g^2 folds back to a piecewise polynomial
    auto lhs = g * gp;
    auto rhs = (g * g).derivative().scaled(make_rat(1, 2));
    CHECK(lhs == rhs);

    // interior radicand zero is rejected: sqrt(x - 1/2 ... ) crossing zero
    PwPiece piece;
    piece.odd[1] = PolyX::constant(Rat(1));
    piece.radicand = PolyX({make_rat(-1, 2), Rat(1)}); // x - 1/2, zero inside (0,1)
    auto bad = PiecewiseFn::from_pieces({Rat(0)}, {piece});
    CHECK_THROWS_AS(bad.derivative(), ConstraintViolation);
}

TEST_CASE("pw translate") {
    Rat a(3, 10), e(1, 10);
    auto f = rieffel_f(a, e, Ramp::quintic);
    auto t = f.translated(make_rat(1, 4));
    for (double x : {0.1, 0.3, 0.52, 0.8, 0.97})
        CHECK(t.eval(x) == doctest::Approx(f.eval(x - 0.25)).epsilon(1e-12));
    CHECK(t.translated(make_rat(3, 4)) == f); // full-period round trip
    CHECK(f.translated(Rat(0)) == f);

    // translation is additive
    CHECK(f.translated(make_rat(1, 5)).translated(make_rat(1, 7)) == f.translated(make_rat(12, 35)));
}

TEST_CASE("pw series arithmetic") {
    Rat a(3, 10), e(1, 10);
    auto f = rieffel_f(a, e, Ramp::quintic);
    auto one = PwSeries::fn(PiecewiseFn::constant(Rat(1)), 4);
    auto hf = PwSeries::fn(f, 4).shifted(1); // h*f
    auto u = one + hf;
    auto sq = u * u;
    CHECK(sq.coeff(0) == PiecewiseFn::constant(Rat(1)));
    CHECK(sq.coeff(1) == f.scaled(Rat(2)));
    CHECK(sq.coeff(2) == f * f);

    Ctx c;
    c.trunc = 4;
    auto I = u.integral(c);
    CHECK(I.coeff(0).is_one());
    CHECK(I.coeff(1) == c.rational(a));
}
