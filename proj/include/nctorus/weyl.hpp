#pragma once

#include "nctorus/fourier.hpp"

namespace nct {

struct YMono {
    int a = 0, b = 0; // y1^a y2^b
    auto operator<=>(const YMono&) const = default;
};

// Section of the formal Weyl algebra bundle: polynomial in the fiber
// coordinates y1, y2 with FourierPoly coefficients.  Terms above the Fedosov
// degree cap (2*h-order + y-degree) are dropped; the cap is carried along.
class WeylSection {
public:
    explicit WeylSection(int cap = 16) : cap_(cap) {}

    static WeylSection zero(int cap) { return WeylSection(cap); }
    static WeylSection from_symbol(const FourierPoly& f, int cap);
    static WeylSection y_coord(int i, int cap, const Ctx& c); // y^i

    int cap() const { return cap_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<YMono, FourierPoly>& coeffs() const { return c_; }
    FourierPoly coeff(const YMono& m) const;
    void set_coeff(const YMono& m, const FourierPoly& f);

    WeylSection operator-() const;
    WeylSection operator+(const WeylSection& o) const;
    WeylSection operator-(const WeylSection& o) const;
    WeylSection scaled(const FormalLaurent& s) const;
    WeylSection scaled(const Scalar& s) const;
    bool operator==(const WeylSection& o) const { return c_ == o.c_; }

    std::string str() const;

private:
    int cap_;
    std::map<YMono, FourierPoly> c_;
    void enforce_cap();
    friend WeylSection weyl_product(const WeylSection&, const WeylSection&, const TorusPoissonData&,
                                    const Ctx&);
};

// fiberwise exponential product in the y variables, coefficients multiply
// pointwise on the base
WeylSection weyl_product(const WeylSection& s, const WeylSection& t, const TorusPoissonData& d,
                         const Ctx& c);

WeylSection base_partial(const WeylSection& s, int i, const Ctx& c); // d/dtheta^i
WeylSection fiber_partial(const WeylSection& s, int i, const Ctx& c); // d/dy^i

FourierPoly symbol(const WeylSection& s);

// the unique flat section with the given symbol: mode k gets
// sum (2 pi i k1)^a (2 pi i k2)^b / (a! b!) y1^a y2^b within the cap
WeylSection quantize(const FourierPoly& f, int cap, const Ctx& c);

// Weyl-algebra-valued differential form on the torus
struct WeylFormSection {
    WeylSection s0, s1, s2, s12; // scalar, dtheta1, dtheta2, dtheta1^dtheta2

    static WeylFormSection zero(int cap) {
        return {WeylSection(cap), WeylSection(cap), WeylSection(cap), WeylSection(cap)};
    }
    static WeylFormSection from_section(const WeylSection& s) {
        return {s, WeylSection(s.cap()), WeylSection(s.cap()), WeylSection(s.cap())};
    }
    bool is_zero() const { return s0.is_zero() && s1.is_zero() && s2.is_zero() && s12.is_zero(); }
    WeylFormSection operator+(const WeylFormSection& o) const {
        return {s0 + o.s0, s1 + o.s1, s2 + o.s2, s12 + o.s12};
    }
    WeylFormSection operator-(const WeylFormSection& o) const {
        return {s0 - o.s0, s1 - o.s1, s2 - o.s2, s12 - o.s12};
    }
    bool operator==(const WeylFormSection& o) const {
        return s0 == o.s0 && s1 == o.s1 && s2 == o.s2 && s12 == o.s12;
    }
};

// flat connection D = dtheta^i (d/dtheta^i - d/dy^i)
WeylFormSection fedosov_D(const WeylFormSection& x, const Ctx& c);

// the same operator in the form d + (i/h)[A, -] with
// A = -(1/theta)(y1 dtheta2 - y2 dtheta1); kept as an independent route
WeylFormSection fedosov_D_via_connection(const WeylFormSection& x, const TorusPoissonData& d,
                                         const Ctx& c);

// graded wedge with fiberwise products
WeylFormSection wedge(const WeylFormSection& a, const WeylFormSection& b, const TorusPoissonData& d,
                      const Ctx& c);

// symbol(quantize(f) o quantize(g)); cap defaults to 2N+4, errors when the
// cap cannot certify the requested order
FourierPoly star_via_fedosov(const FourierPoly& f, const FourierPoly& g, const TorusPoissonData& d,
                             const Ctx& c, int cap = -1);

} // namespace nct
