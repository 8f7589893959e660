#pragma once

#include <complex>
#include <string>

#include "nctorus/poly.hpp"

namespace nct {

enum class Backend { exact, numeric };

// Numeric-mode parameter values; u = exp(2*pi*i*alpha), v = exp(2*pi*i*beta).
struct Bindings {
    double theta = 1.0;
    double alpha = 0.0;
    double beta = 0.0;
};

// Field element: either a rational function in {pi, theta, u, v} over the
// Gaussian rationals (u, v Laurent), or a complex double.
class Scalar {
public:
    Scalar() : backend_(Backend::exact), num_(), den_(Poly::one()) {}

    static Scalar zero(Backend b);
    static Scalar one(Backend b);
    static Scalar from_rat(const Rat& q, Backend b = Backend::exact);
    static Scalar from_int(long n, Backend b = Backend::exact);
    static Scalar imag_unit(Backend b = Backend::exact);
    static Scalar pi_sym();              // exact symbol
    static Scalar theta_sym();           // exact symbol
    static Scalar u_pow(long e);         // exact u^e
    static Scalar v_pow(long e);         // exact v^e
    static Scalar numeric(std::complex<double> v);
    static Scalar from_fraction(Poly num, Poly den);

    Backend backend() const { return backend_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;

    // Evaluates at bound parameter values (pure; identical inputs give
    // bit-identical results).
    std::complex<double> eval(const Bindings& b) const;
    std::complex<double> numeric_value() const; // numeric backend only

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    std::string str() const;

private:
    Backend backend_;
    Poly num_, den_;             // exact
    std::complex<double> val_{}; // numeric

    void reduce();
    static void check(const Scalar& a, const Scalar& b);
};

} // namespace nct
