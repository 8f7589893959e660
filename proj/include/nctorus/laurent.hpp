#pragma once

#include <map>
#include <optional>

#include "nctorus/scalar.hpp"

namespace nct {

// Truncated formal Laurent series in the deformation parameter h.
// Orders above trunc() are never stored; min order is bounded below by
// the configured floor -L.
class FormalLaurent {
public:
    static constexpr int kUnbounded = 1 << 20;

    explicit FormalLaurent(Backend b = Backend::exact, int trunc = kUnbounded, int floor = 2)
        : backend_(b), trunc_(trunc), floor_(floor) {}

    static FormalLaurent scalar(const Scalar& s, int trunc = kUnbounded, int floor = 2);
    static FormalLaurent hbar(Backend b, int trunc = kUnbounded, int floor = 2); // h^1
    static FormalLaurent hbar_pow(int n, Backend b, int trunc = kUnbounded, int floor = 2);
    static FormalLaurent zero(Backend b, int trunc = kUnbounded, int floor = 2) {
        return FormalLaurent(b, trunc, floor);
    }
    static FormalLaurent one(Backend b, int trunc = kUnbounded, int floor = 2) {
        return scalar(Scalar::one(b), trunc, floor);
    }

    Backend backend() const { return backend_; }
    int trunc() const { return trunc_; }
    int floor_limit() const { return floor_; }
    bool is_zero() const { return c_.empty(); }
    std::optional<int> min_order() const;
    Scalar coeff(int order) const;
    const std::map<int, Scalar>& coeffs() const { return c_; }

    void set_coeff(int order, const Scalar& s);

    FormalLaurent operator-() const;
    FormalLaurent operator+(const FormalLaurent& o) const;
    FormalLaurent operator-(const FormalLaurent& o) const;
    FormalLaurent operator*(const FormalLaurent& o) const;
    FormalLaurent operator*(const Scalar& s) const;
    bool operator==(const FormalLaurent& o) const;
    bool operator!=(const FormalLaurent& o) const { return !(*this == o); }

    // Inverse as a Laurent series; throws NotInvertible on zero input.
    FormalLaurent inverse() const;

    FormalLaurent with_trunc(int trunc) const;
    FormalLaurent shifted(int by) const; // multiply by h^by

    FormalLaurent eval(const Bindings& b) const; // exact -> numeric series

    std::string str() const; // sum(c_n * h^n)

private:
    Backend backend_;
    int trunc_;
    int floor_;
    std::map<int, Scalar> c_;

    void prune();
    static void check(const FormalLaurent& a, const FormalLaurent& b);
};

} // namespace nct
