#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "nctorus/context.hpp"

namespace nct {

// Dense univariate polynomial with exact rational coefficients.
class PolyX {
public:
    PolyX() = default;
    explicit PolyX(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
        for (auto& q : c_) q.canonicalize();
        trim();
    }
    static PolyX constant(const Rat& q) { return PolyX({q}); }
    static PolyX x() { return PolyX({Rat(0), Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }

    PolyX operator-() const;
    PolyX operator+(const PolyX& o) const;
    PolyX operator-(const PolyX& o) const;
    PolyX operator*(const PolyX& o) const;
    PolyX scaled(const Rat& q) const;
    bool operator==(const PolyX& o) const { return c_ == o.c_; }

    Rat eval(const Rat& x) const;
    double eval_d(double x) const;
    PolyX derivative() const;
    PolyX antiderivative() const;
    // p(x) -> p(a*x + b)
    PolyX compose_affine(const Rat& a, const Rat& b) const;
    // exact division; nullopt if not divisible
    std::optional<PolyX> divided_by(const PolyX& o) const;

    std::string str() const;

private:
    std::vector<Rat> c_;
    void trim();
};

// One piece: poly + sum_e factor_e * radicand^(e/2) over odd e.  All
// polynomials are in the local coordinate t = x - piece_start, which keeps
// double evaluation well conditioned for narrow ramps.
struct PwPiece {
    PolyX poly;
    std::map<int, PolyX> odd; // odd half-exponents only
    PolyX radicand;

    bool pure_poly() const { return odd.empty(); }
    bool operator==(const PwPiece& o) const {
        return poly == o.poly && odd == o.odd && (odd.empty() || radicand == o.radicand);
    }
};

struct PwIntegral {
    bool exact = true;
    Rat exact_value;
    double value = 0.0;
};

// Piecewise function on the period-1 circle.  Breakpoints are rationals in
// [0,1) starting at 0; piece i lives on [bp[i], bp[i+1]) and the last piece
// on [bp.back(), 1).
class PiecewiseFn {
public:
    PiecewiseFn(); // zero
    static PiecewiseFn zero() { return PiecewiseFn(); }
    static PiecewiseFn constant(const Rat& q);
    static PiecewiseFn from_pieces(std::vector<Rat> breakpoints, std::vector<PwPiece> pieces);

    const std::vector<Rat>& breakpoints() const { return bp_; }
    const std::vector<PwPiece>& pieces() const { return pieces_; }

    bool is_zero() const;
    bool is_constant() const;
    Rat constant_value() const; // requires is_constant()
    // piecewise mean of the polynomial parts (exact linear functional, 1 -> 1)
    Rat poly_mean() const;

    double eval(double x) const;

    PiecewiseFn operator-() const;
    PiecewiseFn operator+(const PiecewiseFn& o) const;
    PiecewiseFn operator-(const PiecewiseFn& o) const;
    PiecewiseFn operator*(const PiecewiseFn& o) const;
    PiecewiseFn scaled(const Rat& q) const;
    bool operator==(const PiecewiseFn& o) const;

    PiecewiseFn derivative() const;      // throws on interior radicand zeros
    PiecewiseFn translated(const Rat& s) const;

    PwIntegral integral() const;

    // max |left-right| mismatch over breakpoints, via double evaluation
    double continuity_defect() const;
    // radicand nonnegativity at Chebyshev sample points
    bool radicands_nonnegative() const;

    std::string str() const;

private:
    std::vector<Rat> bp_;
    std::vector<PwPiece> pieces_;

    void normalize();
    static std::pair<PiecewiseFn, PiecewiseFn> aligned(const PiecewiseFn& a, const PiecewiseFn& b);
    Rat piece_end(size_t i) const { return i + 1 < bp_.size() ? bp_[i + 1] : Rat(1); }
};

// ramp profiles for the projection bump; both are monotone 0 -> 1 on [0,1]
enum class Ramp { quintic, cubic };
PolyX ramp_poly(Ramp r);

// f: 0 at 0, ramps to 1 on [0,eps], 1 on [eps,alpha], 1 - f(x-alpha) on
// [alpha, alpha+eps], 0 on [alpha+eps, 1)
PiecewiseFn rieffel_f(const Rat& alpha, const Rat& eps, Ramp ramp);
// g = sqrt(f - f^2) on [alpha, alpha+eps], 0 elsewhere
PiecewiseFn rieffel_g(const Rat& alpha, const Rat& eps, Ramp ramp);

// adaptive Gauss quadrature of a double-valued function, tolerance ~1e-12
double adaptive_quad(const std::function<double(double)>& f, double a, double b, double tol = 1e-12);

// h-series with piecewise coefficients (the subalgebra-mode coefficient type)
class PwSeries {
public:
    explicit PwSeries(int trunc = FormalLaurent::kUnbounded, int floor = 2)
        : trunc_(trunc), floor_(floor) {}
    static PwSeries fn(const PiecewiseFn& f, int trunc = FormalLaurent::kUnbounded, int floor = 2);

    int trunc() const { return trunc_; }
    int floor_limit() const { return floor_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<int, PiecewiseFn>& coeffs() const { return c_; }
    PiecewiseFn coeff(int order) const;
    void set_coeff(int order, const PiecewiseFn& f);

    PwSeries operator-() const;
    PwSeries operator+(const PwSeries& o) const;
    PwSeries operator-(const PwSeries& o) const;
    PwSeries operator*(const PwSeries& o) const;
    PwSeries scaled(const Rat& q) const;
    PwSeries shifted(int by) const;
    bool operator==(const PwSeries& o) const { return c_ == o.c_; }

    PwSeries derivative() const;
    PwSeries translated(const Rat& s) const;
    // exact when every piece is polynomial, quadrature otherwise
    FormalLaurent integral(const Ctx& c) const;

    std::string str() const;

private:
    int trunc_;
    int floor_;
    std::map<int, PiecewiseFn> c_;
    void prune();
};

} // namespace nct
