#include <random>

#include "doctest.h"
#include "nctorus/laurent.hpp"

using namespace nct;

namespace {

FormalLaurent random_series(std::mt19937_64& rng, int trunc, int min_ord, Backend b = Backend::exact) {
    std::uniform_int_distribution<int> ord(min_ord, trunc), coeff(-4, 4), count(1, 4);
    FormalLaurent f(b, trunc, 2);
    int n = count(rng);
    for (int i = 0; i < n; ++i) f.set_coeff(ord(rng), Scalar::from_int(coeff(rng), b));
    f.set_coeff(min_ord, Scalar::from_int(1 + (coeff(rng) & 3), b));
    return f;
}

// independent oracle: plain coefficientwise convolution over a dense window
bool matches_convolution(const FormalLaurent& prod, const FormalLaurent& a, const FormalLaurent& b) {
    for (int n = -2; n <= prod.trunc() && n <= 12; ++n) {
        Scalar acc = Scalar::zero(a.backend());
        for (int i = -4; i <= 16; ++i) acc = acc + a.coeff(i) * b.coeff(n - i);
        if (!(prod.coeff(n) == acc)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("series addition") {
    Backend b = Backend::exact;
    auto h = FormalLaurent::hbar(b, 6);
    CHECK((h + (-h)).is_zero());

    auto one = FormalLaurent::one(b, 6);
    auto h2 = FormalLaurent::hbar_pow(2, b, 6);
    auto s = (one + h) + h2;
    CHECK(s.coeff(0).is_one());
    CHECK(s.coeff(1).is_one());
    CHECK(s.coeff(2).is_one());

    // min-trunc propagation, checked against a coefficientwise oracle
    auto a4 = FormalLaurent::one(b, 4) + FormalLaurent::hbar_pow(3, b, 4);
    auto b2 = FormalLaurent::hbar_pow(2, b, 2);
    auto sum = a4 + b2;
    CHECK(sum.trunc() == 2);
    CHECK(sum.coeff(3).is_zero());
    CHECK(sum.coeff(2).is_one());
}

TEST_CASE("series multiplication") {
    Backend b = Backend::exact;
    auto hinv = FormalLaurent::hbar_pow(-1, b, 6);
    auto h = FormalLaurent::hbar(b, 6);
    CHECK((hinv * h) == FormalLaurent::one(b, 6));

    auto one = FormalLaurent::one(b, 6);
    auto p = (one + h) * (one - h);
    CHECK(p.coeff(0).is_one());
    CHECK(p.coeff(1).is_zero());
    CHECK(p.coeff(2) == Scalar::from_int(-1));

    std::mt19937_64 rng(99);
    for (int t = 0; t < 50; ++t) {
        auto x = random_series(rng, 6, t % 2 ? -1 : 0);
        auto y = random_series(rng, 6, 0), z = random_series(rng, 6, 0);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(matches_convolution(x * y, x, y));
    }
}

TEST_CASE("floor is enforced") {
    Backend b = Backend::exact;
    auto hm2 = FormalLaurent::hbar_pow(-2, b, 6, 2);
    CHECK_THROWS_AS(hm2 * hm2, FloorExceeded);
    CHECK_THROWS_AS(FormalLaurent::hbar_pow(-3, b, 6, 2), FloorExceeded);
}

TEST_CASE("series inversion") {
    Backend b = Backend::exact;
    // monomial: (h theta)^-1 = h^-1 theta^-1
    auto m = FormalLaurent::hbar(b, 6) * Scalar::theta_sym();
    auto mi = m.inverse();
    CHECK(mi.coeff(-1) == Scalar::one(b) / Scalar::theta_sym());
    auto prod = m * mi;
    CHECK(prod.coeff(0).is_one());
    CHECK(prod.min_order().value() == 0);

    // geometric series oracle: (1 - h)^-1 = sum h^k
    auto s = (FormalLaurent::one(b, 6) - FormalLaurent::hbar(b, 6)).inverse();
    for (int k = 0; k <= 6; ++k) CHECK(s.coeff(k).is_one());

    CHECK_THROWS_AS(FormalLaurent::zero(b, 6).inverse(), NotInvertible);

    std::mt19937_64 rng(123);
    for (int t = 0; t < 30; ++t) {
        auto x = random_series(rng, 6, (t % 3) - 1);
        auto xi = x.inverse();
        auto prod = x * xi;
        CHECK(prod.coeff(0).is_one());
        for (int k = 1; k <= prod.trunc() - 2; ++k) CHECK(prod.coeff(k).is_zero());
    }
}

TEST_CASE("exact/numeric evaluation commutes with arithmetic") {
    Bindings bd{1.3, 0.21, 0.34};
    std::mt19937_64 rng(4242);
    for (int t = 0; t < 40; ++t) {
        auto x = random_series(rng, 5, 0), y = random_series(rng, 5, 0);
        auto lhs = (x * y).eval(bd);
        auto rhs = x.eval(bd) * y.eval(bd);
        for (int k = -2; k <= 5; ++k)
            CHECK(std::abs(lhs.coeff(k).eval(bd) - rhs.coeff(k).eval(bd)) < 1e-9);
    }
}

TEST_CASE("text form") {
    auto s = FormalLaurent::one(Backend::exact, 4) + FormalLaurent::hbar(Backend::exact, 4) * Scalar::theta_sym();
    CHECK(s.str() == "1 * h^0 + theta * h^1");
}
