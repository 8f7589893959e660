#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "nctorus/laurent.hpp"

namespace nct {

// Per-computation configuration threaded through the algebra operations.
// No global state; values are immutable once a computation starts.
struct Ctx {
    Backend backend = Backend::exact;
    int trunc = 6;  // h truncation order N
    int floor = 2;  // Laurent floor L (min h order is -L)
    Rat alpha_rat = Rat(3, 10);
    Rat beta_rat = Rat(0);
    Bindings bind{1.0, 0.3, 0.0};
    std::vector<std::string>* warnings = nullptr;

    Scalar theta() const {
        return backend == Backend::exact ? Scalar::theta_sym() : Scalar::numeric(bind.theta);
    }
    Scalar imag() const { return Scalar::imag_unit(backend); }
    Scalar pi() const {
        return backend == Backend::exact ? Scalar::pi_sym() : Scalar::numeric(3.141592653589793238462643383279502884);
    }
    // u^e resp. v^e in the active backend
    Scalar u_pow(long e) const {
        if (backend == Backend::exact) return Scalar::u_pow(e);
        double ang = 2.0 * 3.141592653589793238462643383279502884 * e * bind.alpha;
        return Scalar::numeric({std::cos(ang), std::sin(ang)});
    }
    Scalar v_pow(long e) const {
        if (backend == Backend::exact) return Scalar::v_pow(e);
        double ang = 2.0 * 3.141592653589793238462643383279502884 * e * bind.beta;
        return Scalar::numeric({std::cos(ang), std::sin(ang)});
    }
    Scalar integer(long n) const { return Scalar::from_int(n, backend); }
    Scalar rational(const Rat& q) const { return Scalar::from_rat(q, backend); }

    FormalLaurent series_zero() const { return FormalLaurent::zero(backend, trunc, floor); }
    FormalLaurent series_one() const { return FormalLaurent::one(backend, trunc, floor); }
    FormalLaurent series_scalar(const Scalar& s) const { return FormalLaurent::scalar(s, trunc, floor); }
    FormalLaurent hbar_pow(int n) const { return FormalLaurent::hbar_pow(n, backend, trunc, floor); }

    void warn(const std::string& msg) const {
        if (warnings) warnings->push_back(msg);
    }
};

} // namespace nct
