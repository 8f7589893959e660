#include "nctorus/fourier.hpp"

#include <algorithm>
#include <sstream>

namespace nct {

FourierPoly FourierPoly::mode(const ModeIndex& k, const FormalLaurent& coeff) {
    FourierPoly p;
    if (!coeff.is_zero()) p.c_[k] = coeff;
    return p;
}

FormalLaurent FourierPoly::coeff(const ModeIndex& k) const {
    auto it = c_.find(k);
    if (it == c_.end()) return FormalLaurent(Backend::exact, FormalLaurent::kUnbounded);
    return it->second;
}

void FourierPoly::set_coeff(const ModeIndex& k, const FormalLaurent& s) {
    if (s.is_zero())
        c_.erase(k);
    else
        c_[k] = s;
}

FourierPoly FourierPoly::operator-() const {
    FourierPoly r;
    for (auto& [k, s] : c_) r.c_[k] = -s;
    return r;
}

FourierPoly FourierPoly::operator+(const FourierPoly& o) const {
    FourierPoly r = *this;
    for (auto& [k, s] : o.c_) {
        auto it = r.c_.find(k);
        if (it == r.c_.end()) {
            r.c_[k] = s;
        } else {
            auto sum = it->second + s;
            if (sum.is_zero())
                r.c_.erase(it);
            else
                it->second = sum;
        }
    }
    return r;
}

FourierPoly FourierPoly::operator-(const FourierPoly& o) const { return *this + (-o); }

FourierPoly FourierPoly::scaled(const FormalLaurent& s) const {
    FourierPoly r;
    for (auto& [k, t] : c_) {
        auto p = t * s;
        if (!p.is_zero()) r.c_[k] = p;
    }
    return r;
}

FourierPoly FourierPoly::scaled(const Scalar& s) const {
    FourierPoly r;
    if (s.is_zero()) return r;
    for (auto& [k, t] : c_) {
        auto p = t * s;
        if (!p.is_zero()) r.c_[k] = p;
    }
    return r;
}

int FourierPoly::effective_trunc() const {
    int t = FormalLaurent::kUnbounded;
    for (auto& [k, s] : c_) t = std::min(t, s.trunc());
    return t;
}

bool FourierPoly::supported_on_axis1() const {
    for (auto& [k, s] : c_)
        if (k.k2 != 0) return false;
    return true;
}

std::string FourierPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, s] : c_) {
        if (!first) os << " + ";
        os << "[" << k.k1 << "," << k.k2 << "]:(" << s.str() << ")";
        first = false;
    }
    return os.str();
}

namespace {

// phase series exp(z * h) truncated, z = 2 pi^2 i theta w
FormalLaurent phase_series(long w, const TorusPoissonData& d, const Ctx& c, int trunc) {
    FormalLaurent r(c.backend, trunc, c.floor);
    if (w == 0 || trunc < 0) {
        if (trunc >= 0) r.set_coeff(0, Scalar::one(c.backend));
        return r;
    }
    Scalar z = c.integer(2) * c.pi() * c.pi() * c.imag() * d.theta * c.integer(w);
    Scalar term = Scalar::one(c.backend);
    r.set_coeff(0, term);
    for (int m = 1; m <= trunc; ++m) {
        term = term * z / c.integer(m);
        r.set_coeff(m, term);
    }
    return r;
}

} // namespace

FourierPoly moyal_star(const FourierPoly& a, const FourierPoly& b, const TorusPoissonData& d, const Ctx& c) {
    FourierPoly r;
    int trunc = std::min({a.effective_trunc(), b.effective_trunc(), c.trunc});
    for (auto& [k, s] : a.coeffs())
        for (auto& [l, t] : b.coeffs()) {
            long w = k.k1 * l.k2 - k.k2 * l.k1;
            FormalLaurent coeff = s * t * phase_series(w, d, c, trunc);
            if (coeff.is_zero()) continue;
            ModeIndex m = k + l;
            auto sum = r.coeff(m) + coeff;
            r.set_coeff(m, sum);
        }
    return r;
}

FourierPoly poisson_bracket(const FourierPoly& a, const FourierPoly& b, const TorusPoissonData& d,
                            const Ctx& c) {
    FourierPoly r;
    Scalar two_pi_i = c.integer(2) * c.pi() * c.imag();
    for (auto& [k, s] : a.coeffs())
        for (auto& [l, t] : b.coeffs()) {
            long w = k.k1 * l.k2 - k.k2 * l.k1;
            if (w == 0) continue;
            Scalar factor = d.theta * two_pi_i * two_pi_i * c.integer(w);
            FormalLaurent coeff = s * t * factor;
            if (coeff.is_zero()) continue;
            ModeIndex m = k + l;
            r.set_coeff(m, r.coeff(m) + coeff);
        }
    return r;
}

FormalLaurent integrate(const FourierPoly& a, const Ctx& c) {
    auto it = a.coeffs().find(ModeIndex{0, 0});
    if (it == a.coeffs().end()) return c.series_zero();
    return it->second;
}

FourierPoly translate(const FourierPoly& a, long m, const Ctx& c) {
    if (m == 0) return a;
    FourierPoly r;
    for (auto& [k, s] : a.coeffs()) {
        Scalar f = c.u_pow(-m * k.k1) * c.v_pow(-m * k.k2);
        r.set_coeff(k, s * f);
    }
    return r;
}

FourierPoly pointwise_mul(const FourierPoly& a, const FourierPoly& b) {
    FourierPoly r;
    for (auto& [k, s] : a.coeffs())
        for (auto& [l, t] : b.coeffs()) {
            ModeIndex m = k + l;
            r.set_coeff(m, r.coeff(m) + s * t);
        }
    return r;
}

FourierPoly partial(const FourierPoly& a, int i, const Ctx& c) {
    if (i != 1 && i != 2) throw IndexOutOfRange("partial derivative index must be 1 or 2");
    FourierPoly r;
    Scalar two_pi_i = c.integer(2) * c.pi() * c.imag();
    for (auto& [k, s] : a.coeffs()) {
        long ki = (i == 1) ? k.k1 : k.k2;
        if (ki == 0) continue;
        r.set_coeff(k, s * (two_pi_i * c.integer(ki)));
    }
    return r;
}

} // namespace nct
