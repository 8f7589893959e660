#include "nctorus/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace nct {

FormalLaurent FormalLaurent::scalar(const Scalar& s, int trunc, int floor) {
    FormalLaurent f(s.backend(), trunc, floor);
    if (!s.is_zero() && trunc >= 0) f.c_[0] = s;
    return f;
}

FormalLaurent FormalLaurent::hbar(Backend b, int trunc, int floor) {
    return hbar_pow(1, b, trunc, floor);
}

FormalLaurent FormalLaurent::hbar_pow(int n, Backend b, int trunc, int floor) {
    if (n < -floor) throw FloorExceeded(n, floor);
    FormalLaurent f(b, trunc, floor);
    if (n <= trunc) f.c_[n] = Scalar::one(b);
    return f;
}

std::optional<int> FormalLaurent::min_order() const {
    if (c_.empty()) return std::nullopt;
    return c_.begin()->first;
}

Scalar FormalLaurent::coeff(int order) const {
    auto it = c_.find(order);
    if (it == c_.end()) return Scalar::zero(backend_);
    return it->second;
}

void FormalLaurent::set_coeff(int order, const Scalar& s) {
    if (order < -floor_) throw FloorExceeded(order, floor_);
    if (s.backend() != backend_) throw BackendMismatch();
    if (s.is_zero() || order > trunc_)
        c_.erase(order);
    else
        c_[order] = s;
}

void FormalLaurent::prune() {
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->second.is_zero() || it->first > trunc_)
            it = c_.erase(it);
        else
            ++it;
    }
    if (!c_.empty() && c_.begin()->first < -floor_) throw FloorExceeded(c_.begin()->first, floor_);
}

void FormalLaurent::check(const FormalLaurent& a, const FormalLaurent& b) {
    if (a.backend_ != b.backend_) throw BackendMismatch();
}

FormalLaurent FormalLaurent::operator-() const {
    FormalLaurent r = *this;
    for (auto& [n, s] : r.c_) s = -s;
    return r;
}

FormalLaurent FormalLaurent::operator+(const FormalLaurent& o) const {
    check(*this, o);
    FormalLaurent r(backend_, std::min(trunc_, o.trunc_), std::max(floor_, o.floor_));
    r.c_ = c_;
    for (auto& [n, s] : o.c_) {
        auto it = r.c_.find(n);
        if (it == r.c_.end())
            r.c_[n] = s;
        else
            it->second = it->second + s;
    }
    r.prune();
    return r;
}

FormalLaurent FormalLaurent::operator-(const FormalLaurent& o) const { return *this + (-o); }

FormalLaurent FormalLaurent::operator*(const FormalLaurent& o) const {
    check(*this, o);
    // a known mod h^{Na+1} with b starting at order mb determines ab up to
    // order Na+mb; this rule keeps truncated multiplication associative.
    int t = std::min(trunc_, o.trunc_);
    if (!c_.empty() && !o.c_.empty()) {
        long ta = static_cast<long>(trunc_) + o.c_.begin()->first;
        long tb = static_cast<long>(o.trunc_) + c_.begin()->first;
        long tt = std::min(ta, tb);
        t = (tt >= kUnbounded) ? kUnbounded : static_cast<int>(tt);
    }
    FormalLaurent r(backend_, t, std::max(floor_, o.floor_));
    for (auto& [n, s] : c_)
        for (auto& [m, t] : o.c_) {
            int k = n + m;
            if (k > r.trunc_) continue;
            if (k < -r.floor_) throw FloorExceeded(k, r.floor_);
            Scalar prod = s * t;
            auto it = r.c_.find(k);
            if (it == r.c_.end())
                r.c_[k] = prod;
            else
                it->second = it->second + prod;
        }
    r.prune();
    return r;
}

FormalLaurent FormalLaurent::operator*(const Scalar& s) const {
    FormalLaurent r(backend_, trunc_, floor_);
    if (s.is_zero()) return r;
    for (auto& [n, t] : c_) r.c_[n] = t * s;
    r.prune();
    return r;
}

bool FormalLaurent::operator==(const FormalLaurent& o) const {
    return backend_ == o.backend_ && c_ == o.c_;
}

FormalLaurent FormalLaurent::inverse() const {
    if (c_.empty()) throw NotInvertible();
    int m = c_.begin()->first;
    Scalar lead = c_.begin()->second;
    if (lead.is_zero()) throw NotInvertible();
    if (-m < -floor_) throw FloorExceeded(-m, floor_);
    // a = lead*h^m (1 + x); a^-1 = lead^-1 h^-m sum (-x)^j
    int width = (trunc_ == kUnbounded) ? (c_.rbegin()->first - m) : (trunc_ + floor_);
    Scalar linv = lead.inverse();
    FormalLaurent x(backend_, width, kUnbounded); // relative orders >= 1
    for (auto& [n, s] : c_) {
        if (n == m) continue;
        x.c_[n - m] = s * linv;
    }
    if (trunc_ == kUnbounded && !x.is_zero())
        throw NotInvertible("series with infinite truncation and more than one term is not invertible exactly");
    FormalLaurent acc = FormalLaurent::one(backend_, width, kUnbounded);
    FormalLaurent pw = acc;
    for (int j = 1; j <= width && !x.is_zero(); ++j) {
        pw = pw * (-x);
        if (pw.is_zero()) break;
        acc = acc + pw;
    }
    int out_trunc = (trunc_ == kUnbounded) ? kUnbounded : trunc_ - 2 * m;
    FormalLaurent r(backend_, out_trunc, floor_);
    for (auto& [n, s] : acc.c_) {
        int k = n - m;
        if (k > r.trunc_) continue;
        if (k < -floor_) throw FloorExceeded(k, floor_);
        r.c_[k] = s * linv;
    }
    r.prune();
    return r;
}

FormalLaurent FormalLaurent::with_trunc(int trunc) const {
    FormalLaurent r(backend_, trunc, floor_);
    r.c_ = c_;
    r.prune();
    return r;
}

FormalLaurent FormalLaurent::shifted(int by) const {
    FormalLaurent r(backend_, trunc_, floor_);
    for (auto& [n, s] : c_) {
        int k = n + by;
        if (k > trunc_) continue;
        if (k < -floor_) throw FloorExceeded(k, floor_);
        r.c_[k] = s;
    }
    return r;
}

FormalLaurent FormalLaurent::eval(const Bindings& b) const {
    FormalLaurent r(Backend::numeric, trunc_, floor_);
    for (auto& [n, s] : c_) {
        auto v = s.eval(b);
        if (v != std::complex<double>(0.0)) r.c_[n] = Scalar::numeric(v);
    }
    return r;
}

std::string FormalLaurent::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [n, s] : c_) {
        if (!first) os << " + ";
        os << s.str() << " * h^" << n;
        first = false;
    }
    return os.str();
}

} // namespace nct
