#include <random>

#include "doctest.h"
#include "nctorus/scalar.hpp"

using namespace nct;

namespace {

Scalar random_scalar(std::mt19937_64& rng, Backend b) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5), pick(0, 5);
    if (b == Backend::numeric) {
        std::uniform_real_distribution<double> d(-2.0, 2.0);
        return Scalar::numeric({d(rng), d(rng)});
    }
    Scalar s = Scalar::from_rat(make_rat(num(rng), den(rng)));
    switch (pick(rng)) {
        case 0: s = s * Scalar::theta_sym(); break;
        case 1: s = s * Scalar::pi_sym(); break;
        case 2: s = s * Scalar::u_pow(num(rng) % 3); break;
        case 3: s = s * Scalar::imag_unit() + Scalar::from_int(num(rng)); break;
        case 4: s = s + Scalar::theta_sym() * Scalar::from_int(num(rng)); break;
        default: break;
    }
    return s;
}

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-12) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
}

} // namespace

TEST_CASE("exact field basics") {
    Scalar u = Scalar::u_pow(1);
    Scalar uinv = Scalar::u_pow(-1);
    CHECK((u * uinv).is_one());
    Scalar v = Scalar::v_pow(1);
    CHECK((v * Scalar::v_pow(-1)).is_one());

    Scalar th = Scalar::theta_sym();
    Scalar q = (th * th - Scalar::one(Backend::exact)) / (th - Scalar::one(Backend::exact));
    CHECK(q == th + Scalar::one(Backend::exact)); // gcd reduction

    CHECK_THROWS_AS(th / Scalar::zero(Backend::exact), DivisionByZero);
    // 1 - u^a v^b invertible for (a,b) != 0 (rational independence)
    Scalar d = Scalar::one(Backend::exact) - Scalar::u_pow(2) * Scalar::v_pow(-1);
    CHECK_FALSE(d.is_zero());
    Scalar r = Scalar::one(Backend::exact) / d;
    CHECK((r * d).is_one());
}

TEST_CASE("ring axioms on random triples, both backends") {
    for (Backend b : {Backend::exact, Backend::numeric}) {
        std::mt19937_64 rng(12345);
        for (int t = 0; t < 200; ++t) {
            Scalar x = random_scalar(rng, b), y = random_scalar(rng, b), z = random_scalar(rng, b);
            if (b == Backend::exact) {
                CHECK((x + y) * z == x * z + y * z);
                CHECK((x * y) * z == x * (y * z));
                CHECK(x * y == y * x);
                CHECK(x + y == y + x);
            } else {
                Bindings bd;
                CHECK(close(((x + y) * z).eval(bd), (x * z + y * z).eval(bd)));
                CHECK(close(((x * y) * z).eval(bd), (x * (y * z)).eval(bd)));
            }
        }
    }
}

TEST_CASE("backend mixing is rejected") {
    CHECK_THROWS_AS(Scalar::theta_sym() + Scalar::numeric(1.0), BackendMismatch);
}

TEST_CASE("exact to numeric evaluation is a field homomorphism") {
    Bindings bd{0.7, 0.3, 0.41};
    std::mt19937_64 rng(777);
    for (int t = 0; t < 200; ++t) {
        Scalar x = random_scalar(rng, Backend::exact), y = random_scalar(rng, Backend::exact);
        CHECK(close((x + y).eval(bd), x.eval(bd) + y.eval(bd)));
        CHECK(close((x - y).eval(bd), x.eval(bd) - y.eval(bd)));
        CHECK(close((x * y).eval(bd), x.eval(bd) * y.eval(bd)));
        if (!y.is_zero()) CHECK(close((x / y).eval(bd), x.eval(bd) / y.eval(bd)));
    }
    // repeated binding is bit-identical
    Scalar s = random_scalar(rng, Backend::exact);
    auto a = s.eval(bd), b = s.eval(bd);
    CHECK(a == b);
}

TEST_CASE("canonical printing") {
    Scalar m = -(Scalar::one(Backend::exact)) / (Scalar::theta_sym());
    CHECK(m.str() == "-1/theta");
    CHECK(rat_from_string("0.3") == Rat(3, 10));
    CHECK(rat_from_string("-7/2") == Rat(-7, 2));
    CHECK(rat_from_string("1e-3") == Rat(1, 1000));
    CHECK(rat_from_string("2.5e2") == Rat(250));
}
