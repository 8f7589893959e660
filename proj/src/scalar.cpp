#include "nctorus/scalar.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace nct {

Scalar Scalar::zero(Backend b) {
    Scalar s;
    s.backend_ = b;
    if (b == Backend::numeric) s.val_ = 0.0;
    return s;
}

Scalar Scalar::one(Backend b) {
    Scalar s;
    s.backend_ = b;
    if (b == Backend::numeric)
        s.val_ = 1.0;
    else
        s.num_ = Poly::one();
    return s;
}

Scalar Scalar::from_rat(const Rat& q, Backend b) {
    if (b == Backend::numeric) return numeric(rat_to_double(q));
    Scalar s;
    s.num_ = Poly::constant(GaussRat(q));
    return s;
}

Scalar Scalar::from_int(long n, Backend b) { return from_rat(Rat(n), b); }

Scalar Scalar::imag_unit(Backend b) {
    if (b == Backend::numeric) return numeric({0.0, 1.0});
    Scalar s;
    s.num_ = Poly::constant(GaussRat::i());
    return s;
}

Scalar Scalar::pi_sym() {
    Scalar s;
    s.num_ = Poly::sym(0);
    return s;
}

Scalar Scalar::theta_sym() {
    Scalar s;
    s.num_ = Poly::sym(1);
    return s;
}

Scalar Scalar::u_pow(long e) {
    Scalar s;
    s.num_ = Poly::sym(2, static_cast<int>(e));
    return s;
}

Scalar Scalar::v_pow(long e) {
    Scalar s;
    s.num_ = Poly::sym(3, static_cast<int>(e));
    return s;
}

Scalar Scalar::numeric(std::complex<double> v) {
    Scalar s;
    s.backend_ = Backend::numeric;
    s.val_ = v;
    return s;
}

Scalar Scalar::from_fraction(Poly num, Poly den) {
    if (den.is_zero()) throw DivisionByZero();
    Scalar s;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.reduce();
    return s;
}

bool Scalar::is_zero() const {
    return backend_ == Backend::exact ? num_.is_zero() : val_ == std::complex<double>(0.0);
}

bool Scalar::is_one() const {
    if (backend_ == Backend::numeric) return val_ == std::complex<double>(1.0);
    return den_ == Poly::one() && num_ == Poly::one();
}

void Scalar::check(const Scalar& a, const Scalar& b) {
    if (a.backend_ != b.backend_) throw BackendMismatch();
}

// canonical form: gcd-reduced, denominator with nonnegative u,v exponents and
// lex-leading coefficient 1
void Scalar::reduce() {
    if (backend_ == Backend::numeric) return;
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        // align Laurent content so divexact succeeds
        for (int v = 2; v < 4; ++v) {
            int mn = std::min(num_.min_exp(v), den_.min_exp(v));
            if (mn != 0) {
                num_ = num_.shifted(v, -mn);
                den_ = den_.shifted(v, -mn);
            }
        }
        num_ = poly_divexact(num_, g);
        den_ = poly_divexact(den_, g);
    }
    // move all u,v Laurent weight of the denominator into the numerator
    for (int v = 2; v < 4; ++v) {
        int mn = den_.min_exp(v);
        if (mn != 0) {
            den_ = den_.shifted(v, -mn);
            num_ = num_.shifted(v, -mn);
        }
    }
    GaussRat lead = den_.leading().second;
    if (!lead.is_one()) {
        GaussRat inv = GaussRat(Rat(1)) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (backend_ == Backend::numeric)
        r.val_ = -r.val_;
    else
        r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check(*this, o);
    if (backend_ == Backend::numeric) return numeric(val_ + o.val_);
    Scalar r;
    if (den_ == o.den_) {
        r.num_ = num_ + o.num_;
        r.den_ = den_;
    } else {
        r.num_ = num_ * o.den_ + o.num_ * den_;
        r.den_ = den_ * o.den_;
    }
    r.reduce();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check(*this, o);
    if (backend_ == Backend::numeric) return numeric(val_ * o.val_);
    Scalar r;
    r.num_ = num_ * o.num_;
    r.den_ = den_ * o.den_;
    r.reduce();
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check(*this, o);
    if (o.is_zero()) throw DivisionByZero();
    if (backend_ == Backend::numeric) return numeric(val_ / o.val_);
    Scalar r;
    r.num_ = num_ * o.den_;
    r.den_ = den_ * o.num_;
    r.reduce();
    return r;
}

Scalar Scalar::inverse() const { return one(backend_) / *this; }

bool Scalar::operator==(const Scalar& o) const {
    if (backend_ != o.backend_) return false;
    if (backend_ == Backend::numeric) return val_ == o.val_;
    return num_ == o.num_ && den_ == o.den_;
}

namespace {

std::complex<double> eval_poly(const Poly& p, const Bindings& b) {
    using std::numbers::pi;
    std::complex<double> acc = 0.0;
    for (auto& [m, c] : p.t) {
        std::complex<double> term(rat_to_double(c.re), rat_to_double(c.im));
        if (m.e[0] != 0) term *= std::pow(pi, m.e[0]);
        if (m.e[1] != 0) term *= std::pow(std::complex<double>(b.theta), m.e[1]);
        double ang = 2.0 * pi * (m.e[2] * b.alpha + m.e[3] * b.beta);
        if (m.e[2] != 0 || m.e[3] != 0) term *= std::complex<double>(std::cos(ang), std::sin(ang));
        acc += term;
    }
    return acc;
}

} // namespace

std::complex<double> Scalar::eval(const Bindings& b) const {
    if (backend_ == Backend::numeric) return val_;
    return eval_poly(num_, b) / eval_poly(den_, b);
}

std::complex<double> Scalar::numeric_value() const {
    if (backend_ != Backend::numeric) throw BackendMismatch();
    return val_;
}

std::string Scalar::str() const {
    if (backend_ == Backend::numeric) {
        std::ostringstream os;
        os.precision(17);
        os << val_.real();
        if (val_.imag() != 0.0) os << (val_.imag() > 0 ? "+" : "") << val_.imag() << "i";
        return os.str();
    }
    if (den_ == Poly::one()) return num_.str();
    std::string n = num_.str(), d = den_.str();
    if (num_.t.size() > 1) n = "(" + n + ")";
    if (den_.t.size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

} // namespace nct
