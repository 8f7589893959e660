#pragma once

#include <map>

#include "nctorus/context.hpp"

namespace nct {

struct ModeIndex {
    long k1 = 0, k2 = 0;
    auto operator<=>(const ModeIndex&) const = default;
    ModeIndex operator+(const ModeIndex& o) const { return {k1 + o.k1, k2 + o.k2}; }
};

// Finitely supported Fourier polynomial sum_k c_k e_k with
// e_k(t) = exp(2*pi*i*(k1*t1 + k2*t2)) and FormalLaurent coefficients.
class FourierPoly {
public:
    FourierPoly() = default;

    static FourierPoly zero() { return FourierPoly(); }
    static FourierPoly mode(const ModeIndex& k, const FormalLaurent& coeff);
    static FourierPoly constant(const FormalLaurent& coeff) { return mode({0, 0}, coeff); }
    static FourierPoly one(const Ctx& c) { return constant(c.series_one()); }

    bool is_zero() const { return c_.empty(); }
    const std::map<ModeIndex, FormalLaurent>& coeffs() const { return c_; }
    FormalLaurent coeff(const ModeIndex& k) const;
    void set_coeff(const ModeIndex& k, const FormalLaurent& s);

    FourierPoly operator-() const;
    FourierPoly operator+(const FourierPoly& o) const;
    FourierPoly operator-(const FourierPoly& o) const;
    FourierPoly scaled(const FormalLaurent& s) const;
    FourierPoly scaled(const Scalar& s) const;
    bool operator==(const FourierPoly& o) const { return c_ == o.c_; }

    // smallest effective truncation among stored coefficients
    int effective_trunc() const;
    bool supported_on_axis1() const; // all modes have k2 == 0

    std::string str() const;

private:
    std::map<ModeIndex, FormalLaurent> c_;
};

struct TorusPoissonData {
    Scalar theta;
    explicit TorusPoissonData(const Scalar& t) : theta(t) {
        if (t.is_zero()) throw ConstraintViolation("poisson coefficient theta must be nonzero");
    }
    static TorusPoissonData standard(const Ctx& c) { return TorusPoissonData(c.theta()); }
};

// e_k * e_l = exp(2 pi^2 i hbar theta (k1 l2 - k2 l1)) e_{k+l}, the closed
// phase form of the fiberwise exponential product with constant theta.
FourierPoly moyal_star(const FourierPoly& a, const FourierPoly& b, const TorusPoissonData& d, const Ctx& c);

// {a, b} = theta (d1 a d2 b - d2 a d1 b)
FourierPoly poisson_bracket(const FourierPoly& a, const FourierPoly& b, const TorusPoissonData& d, const Ctx& c);

// normalized Haar measure: the (0,0) coefficient
FormalLaurent integrate(const FourierPoly& a, const Ctx& c);

// left translation action: translate(a, m)(x) = a(x - m(alpha, beta)),
// i.e. c_k -> u^{-m k1} v^{-m k2} c_k
FourierPoly translate(const FourierPoly& a, long m, const Ctx& c);

// d/dtheta^i, i in {1,2}
FourierPoly partial(const FourierPoly& a, int i, const Ctx& c);

// plain commutative product (mode-additive convolution)
FourierPoly pointwise_mul(const FourierPoly& a, const FourierPoly& b);

} // namespace nct
