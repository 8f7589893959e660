#include "nctorus/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

namespace nct {

void PolyX::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyX PolyX::operator-() const {
    PolyX r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

PolyX PolyX::operator+(const PolyX& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return PolyX(std::move(c));
}

PolyX PolyX::operator-(const PolyX& o) const { return *this + (-o); }

PolyX PolyX::operator*(const PolyX& o) const {
    if (c_.empty() || o.c_.empty()) return PolyX();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return PolyX(std::move(c));
}

PolyX PolyX::scaled(const Rat& q) const {
    if (q == 0) return PolyX();
    PolyX r = *this;
    for (auto& k : r.c_) k *= q;
    return r;
}

Rat PolyX::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double PolyX::eval_d(double x) const {
    // compensated Horner; keeps cancellation-prone radicand evaluation near
    // piece endpoints at ~1 ulp of the true value
    double s = 0.0, comp = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        double p = s * x;
        double pe = std::fma(s, x, -p);
        double a = rat_to_double(*it);
        double t = p + a;
        double z = t - p;
        double te = (p - (t - z)) + (a - z);
        comp = comp * x + (pe + te);
        s = t;
    }
    return s + comp;
}

PolyX PolyX::derivative() const {
    if (c_.size() <= 1) return PolyX();
    std::vector<Rat> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return PolyX(std::move(c));
}

PolyX PolyX::antiderivative() const {
    if (c_.empty()) return PolyX();
    std::vector<Rat> c(c_.size() + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i + 1] = c_[i] / Rat(static_cast<long>(i + 1));
    return PolyX(std::move(c));
}

PolyX PolyX::compose_affine(const Rat& a, const Rat& b) const {
    // Horner in (a x + b)
    PolyX lin({b, a});
    PolyX acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + PolyX::constant(*it);
    return acc;
}

std::optional<PolyX> PolyX::divided_by(const PolyX& o) const {
    if (o.is_zero()) return std::nullopt;
    PolyX rem = *this, quot;
    while (!rem.is_zero() && rem.degree() >= o.degree()) {
        int d = rem.degree() - o.degree();
        Rat q = rem.c_.back() / o.c_.back();
        std::vector<Rat> t(d + 1, Rat(0));
        t[d] = q;
        PolyX term(std::move(t));
        quot = quot + term;
        rem = rem - term * o;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

std::string PolyX::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << "+";
        os << c_[i];
        if (i > 0) os << "x^" << i;
        first = false;
    }
    return os.str();
}

PiecewiseFn::PiecewiseFn() : bp_{Rat(0)}, pieces_{PwPiece{}} {}

PiecewiseFn PiecewiseFn::constant(const Rat& q) {
    PiecewiseFn f;
    f.pieces_[0].poly = PolyX::constant(q);
    return f;
}

PiecewiseFn PiecewiseFn::from_pieces(std::vector<Rat> breakpoints, std::vector<PwPiece> pieces) {
    if (breakpoints.empty() || breakpoints.size() != pieces.size())
        throw ConstraintViolation("breakpoints and pieces must match and be nonempty");
    for (size_t i = 0; i < breakpoints.size(); ++i) {
        if (breakpoints[i] < 0 || breakpoints[i] >= 1)
            throw ConstraintViolation("breakpoints must lie in [0,1)");
        if (i > 0 && !(breakpoints[i - 1] < breakpoints[i]))
            throw ConstraintViolation("breakpoints must be strictly increasing");
    }
    if (breakpoints[0] != 0) throw ConstraintViolation("first breakpoint must be 0");
    PiecewiseFn f;
    f.bp_ = std::move(breakpoints);
    f.pieces_ = std::move(pieces);
    f.normalize();
    return f;
}

namespace {

PwPiece recentered(const PwPiece& p, const Rat& delta) {
    if (delta == 0) return p;
    PwPiece out;
    out.poly = p.poly.compose_affine(Rat(1), delta);
    for (auto& [e, f] : p.odd) out.odd[e] = f.compose_affine(Rat(1), delta);
    if (!p.odd.empty()) out.radicand = p.radicand.compose_affine(Rat(1), delta);
    return out;
}

} // namespace

void PiecewiseFn::normalize() {
    for (auto& p : pieces_) {
        for (auto it = p.odd.begin(); it != p.odd.end();) {
            if (it->second.is_zero())
                it = p.odd.erase(it);
            else
                ++it;
        }
        if (p.odd.empty()) p.radicand = PolyX();
    }
    // merge a piece into its predecessor when it is the predecessor's
    // smooth continuation (pieces are stored in local coordinates)
    std::vector<Rat> bp{bp_[0]};
    std::vector<PwPiece> ps{pieces_[0]};
    for (size_t i = 1; i < pieces_.size(); ++i) {
        if (pieces_[i] == recentered(ps.back(), bp_[i] - bp.back())) continue;
        bp.push_back(bp_[i]);
        ps.push_back(pieces_[i]);
    }
    bp_ = std::move(bp);
    pieces_ = std::move(ps);
}

bool PiecewiseFn::is_zero() const {
    for (auto& p : pieces_)
        if (!p.poly.is_zero() || !p.odd.empty()) return false;
    return true;
}

bool PiecewiseFn::is_constant() const {
    if (pieces_.size() != 1) return false;
    return pieces_[0].odd.empty() && pieces_[0].poly.degree() <= 0;
}

Rat PiecewiseFn::constant_value() const {
    if (!is_constant()) throw Error("piecewise function is not constant");
    return pieces_[0].poly.is_zero() ? Rat(0) : pieces_[0].poly.coeffs()[0];
}

Rat PiecewiseFn::poly_mean() const {
    Rat acc(0);
    for (size_t i = 0; i < pieces_.size(); ++i) {
        PolyX F = pieces_[i].poly.antiderivative();
        acc += F.eval(piece_end(i) - bp_[i]);
    }
    return acc;
}

double PiecewiseFn::eval(double x) const {
    x -= std::floor(x);
    size_t i = 0;
    for (size_t j = 0; j < bp_.size(); ++j)
        if (x >= rat_to_double(bp_[j])) i = j;
    const PwPiece& p = pieces_[i];
    double t = x - rat_to_double(bp_[i]);
    double acc = p.poly.eval_d(t);
    if (!p.odd.empty()) {
        double q = p.radicand.eval_d(t);
        if (q < 0) q = 0;
        double rq = std::sqrt(q);
        for (auto& [e, a] : p.odd) acc += a.eval_d(t) * std::pow(rq, e);
    }
    return acc;
}

std::pair<PiecewiseFn, PiecewiseFn> PiecewiseFn::aligned(const PiecewiseFn& a, const PiecewiseFn& b) {
    std::set<Rat> cuts(a.bp_.begin(), a.bp_.end());
    cuts.insert(b.bp_.begin(), b.bp_.end());
    std::vector<Rat> bp(cuts.begin(), cuts.end());
    auto refine = [&bp](const PiecewiseFn& f) {
        PiecewiseFn r;
        r.bp_ = bp;
        r.pieces_.clear();
        size_t src = 0;
        for (size_t i = 0; i < bp.size(); ++i) {
            while (src + 1 < f.bp_.size() && f.bp_[src + 1] <= bp[i]) ++src;
            r.pieces_.push_back(recentered(f.pieces_[src], bp[i] - f.bp_[src]));
        }
        return r;
    };
    return {refine(a), refine(b)};
}

PiecewiseFn PiecewiseFn::operator-() const {
    PiecewiseFn r = *this;
    for (auto& p : r.pieces_) {
        p.poly = -p.poly;
        for (auto& [e, f] : p.odd) f = -f;
    }
    return r;
}

PiecewiseFn PiecewiseFn::operator+(const PiecewiseFn& o) const {
    auto [a, b] = aligned(*this, o);
    for (size_t i = 0; i < a.pieces_.size(); ++i) {
        PwPiece& p = a.pieces_[i];
        const PwPiece& q = b.pieces_[i];
        p.poly = p.poly + q.poly;
        if (!q.odd.empty()) {
            if (!p.odd.empty() && !(p.radicand == q.radicand))
                throw Error("piecewise sum with mismatched radicands");
            if (p.odd.empty()) p.radicand = q.radicand;
            for (auto& [e, f] : q.odd) {
                auto it = p.odd.find(e);
                if (it == p.odd.end())
                    p.odd[e] = f;
                else
                    it->second = it->second + f;
            }
        }
    }
    a.normalize();
    return a;
}

PiecewiseFn PiecewiseFn::operator-(const PiecewiseFn& o) const { return *this + (-o); }

PiecewiseFn PiecewiseFn::operator*(const PiecewiseFn& o) const {
    auto [a, b] = aligned(*this, o);
    for (size_t i = 0; i < a.pieces_.size(); ++i) {
        PwPiece& p = a.pieces_[i];
        const PwPiece& q = b.pieces_[i];
        PwPiece out;
        if (!p.odd.empty() && !q.odd.empty() && !(p.radicand == q.radicand))
            throw Error("piecewise product with mismatched radicands");
        if (!p.odd.empty())
            out.radicand = p.radicand;
        else if (!q.odd.empty())
            out.radicand = q.radicand;
        out.poly = p.poly * q.poly;
        auto put = [&out](int e, const PolyX& f) {
            if (f.is_zero()) return;
            if (e % 2 != 0) {
                auto it = out.odd.find(e);
                if (it == out.odd.end())
                    out.odd[e] = f;
                else
                    it->second = it->second + f;
                return;
            }
            // fold even powers of the radicand into the polynomial part
            int half = e / 2;
            if (half >= 0) {
                PolyX acc = f;
                for (int j = 0; j < half; ++j) acc = acc * out.radicand;
                out.poly = out.poly + acc;
            } else {
                PolyX den = PolyX::constant(Rat(1));
                for (int j = 0; j < -half; ++j) den = den * out.radicand;
                auto d = f.divided_by(den);
                if (!d) throw Error("piecewise product leaves the polynomial ring");
                out.poly = out.poly + *d;
            }
        };
        for (auto& [e1, f1] : p.odd) put(e1, f1 * q.poly);
        for (auto& [e2, f2] : q.odd) put(e2, p.poly * f2);
        for (auto& [e1, f1] : p.odd)
            for (auto& [e2, f2] : q.odd) put(e1 + e2, f1 * f2);
        if (out.odd.empty()) out.radicand = PolyX();
        a.pieces_[i] = std::move(out);
    }
    a.normalize();
    return a;
}

PiecewiseFn PiecewiseFn::scaled(const Rat& q) const {
    PiecewiseFn r = *this;
    for (auto& p : r.pieces_) {
        p.poly = p.poly.scaled(q);
        for (auto& [e, f] : p.odd) f = f.scaled(q);
    }
    r.normalize();
    return r;
}

bool PiecewiseFn::operator==(const PiecewiseFn& o) const {
    auto [a, b] = aligned(*this, o);
    return a.bp_ == b.bp_ && a.pieces_ == b.pieces_;
}

namespace {

bool radicand_has_interior_zero(const PolyX& q, const Rat& len) {
    double b = rat_to_double(len);
    for (int j = 1; j < 32; ++j) {
        double t = b * (0.5 - 0.5 * std::cos(3.14159265358979324 * j / 32.0));
        if (std::abs(q.eval_d(t)) < 1e-13) return true;
    }
    return false;
}

} // namespace

PiecewiseFn PiecewiseFn::derivative() const {
    PiecewiseFn r = *this;
    for (size_t i = 0; i < r.pieces_.size(); ++i) {
        PwPiece& p = r.pieces_[i];
        PwPiece out;
        out.poly = p.poly.derivative();
        out.radicand = p.radicand;
        if (!p.odd.empty() && radicand_has_interior_zero(p.radicand, r.piece_end(i) - r.bp_[i]))
            throw ConstraintViolation("derivative of root piece with interior radicand zero");
        PolyX qp = p.radicand.derivative();
        for (auto& [e, a] : p.odd) {
            auto add = [&out](int ee, const PolyX& f) {
                if (f.is_zero()) return;
                auto it = out.odd.find(ee);
                if (it == out.odd.end())
                    out.odd[ee] = f;
                else
                    it->second = it->second + f;
            };
            add(e, a.derivative());
            add(e - 2, (a * qp).scaled(Rat(e, 2)));
        }
        if (out.odd.empty()) out.radicand = PolyX();
        r.pieces_[i] = std::move(out);
    }
    r.normalize();
    return r;
}

PiecewiseFn PiecewiseFn::translated(const Rat& s) const {
    Rat shift = s;
    while (shift < 0) shift += 1;
    while (shift >= 1) shift -= 1;
    if (shift == 0) return *this;
    std::set<Rat> cuts{Rat(0)};
    for (auto& b : bp_) {
        Rat c = b + shift;
        if (c >= 1) c -= 1;
        cuts.insert(c);
    }
    std::vector<Rat> bp(cuts.begin(), cuts.end());
    PiecewiseFn r;
    r.bp_ = bp;
    r.pieces_.clear();
    for (size_t i = 0; i < bp.size(); ++i) {
        Rat end = (i + 1 < bp.size()) ? bp[i + 1] : Rat(1);
        Rat mid = (bp[i] + end) / 2;
        // source point and integer branch
        Rat x0 = mid - shift;
        Rat branch(0);
        if (x0 < 0) {
            x0 += 1;
            branch = 1;
        }
        size_t src = 0;
        for (size_t j = 0; j < bp_.size(); ++j)
            if (bp_[j] <= x0) src = j;
        // local target coordinate t maps to source local coordinate t + off
        Rat off = bp[i] - shift + branch - bp_[src];
        r.pieces_.push_back(recentered(pieces_[src], off));
    }
    r.normalize();
    return r;
}

PwIntegral PiecewiseFn::integral() const {
    PwIntegral out;
    Rat acc(0);
    double approx = 0;
    bool exact = true;
    for (size_t i = 0; i < pieces_.size(); ++i) {
        const PwPiece& p = pieces_[i];
        PolyX F = p.poly.antiderivative();
        Rat part = F.eval(piece_end(i) - bp_[i]);
        acc += part;
        approx += rat_to_double(part);
        if (!p.odd.empty()) {
            exact = false;
            double len = rat_to_double(piece_end(i) - bp_[i]);
            approx += adaptive_quad(
                [&p](double t) {
                    double q = p.radicand.eval_d(t);
                    if (q < 0) q = 0;
                    double rq = std::sqrt(q);
                    double s = 0;
                    for (auto& [e, f] : p.odd) s += f.eval_d(t) * std::pow(rq, e);
                    return s;
                },
                0.0, len);
        }
    }
    out.exact = exact;
    out.exact_value = acc;
    out.value = approx;
    return out;
}

namespace {

// piece value at exact local coordinate; square roots are the only doubles
double piece_value_exact(const PwPiece& p, const Rat& t) {
    double acc = rat_to_double(p.poly.eval(t));
    if (!p.odd.empty()) {
        double q = rat_to_double(p.radicand.eval(t));
        if (q < 0) q = 0;
        double rq = std::sqrt(q);
        for (auto& [e, f] : p.odd) acc += rat_to_double(f.eval(t)) * std::pow(rq, e);
    }
    return acc;
}

} // namespace

double PiecewiseFn::continuity_defect() const {
    double worst = 0;
    size_t n = pieces_.size();
    for (size_t i = 0; i < n; ++i) {
        // join at bp_[i]: previous piece's limit vs this piece's value
        size_t prev = (i + n - 1) % n;
        Rat end_prev = (i == 0) ? Rat(1) : bp_[i];
        double left = piece_value_exact(pieces_[prev], end_prev - bp_[prev]);
        double right = piece_value_exact(pieces_[i], Rat(0));
        worst = std::max(worst, std::abs(left - right));
    }
    return worst;
}

bool PiecewiseFn::radicands_nonnegative() const {
    for (size_t i = 0; i < pieces_.size(); ++i) {
        const PwPiece& p = pieces_[i];
        if (p.odd.empty()) continue;
        double len = rat_to_double(piece_end(i) - bp_[i]);
        for (int j = 0; j <= 16; ++j) {
            double t = len * (0.5 - 0.5 * std::cos(3.14159265358979324 * j / 16.0));
            if (p.radicand.eval_d(t) < -1e-12) return false;
        }
    }
    return true;
}

std::string PiecewiseFn::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < pieces_.size(); ++i) {
        if (i) os << ";";
        os << "[" << bp_[i] << "](" << pieces_[i].poly.str();
        for (auto& [e, f] : pieces_[i].odd) os << "+(" << f.str() << ")q^" << e << "/2";
        if (!pieces_[i].odd.empty()) os << "|q=" << pieces_[i].radicand.str();
        os << ")";
    }
    return os.str();
}

PolyX ramp_poly(Ramp r) {
    if (r == Ramp::quintic) return PolyX({Rat(0), Rat(0), Rat(0), Rat(10), Rat(-15), Rat(6)});
    return PolyX({Rat(0), Rat(0), Rat(3), Rat(-2)});
}

static void check_rieffel_params(const Rat& alpha, const Rat& eps) {
    if (!(eps > 0)) throw ConstraintViolation("eps must be positive");
    if (!(eps < alpha)) throw ConstraintViolation("eps must be smaller than alpha");
    if (!(alpha + eps < Rat(1, 2))) throw ConstraintViolation("alpha + eps must be below 1/2");
}

PiecewiseFn rieffel_f(const Rat& alpha, const Rat& eps, Ramp ramp) {
    check_rieffel_params(alpha, eps);
    PolyX r = ramp_poly(ramp);
    // pieces carry local coordinates: ramp profile r(t/eps) on both ramps
    PolyX up = r.compose_affine(Rat(1) / eps, Rat(0));
    PolyX down = PolyX::constant(Rat(1)) - up;
    std::vector<Rat> bp{Rat(0), eps, alpha, alpha + eps};
    std::vector<PwPiece> ps(4);
    ps[0].poly = up;
    ps[1].poly = PolyX::constant(Rat(1));
    ps[2].poly = down;
    ps[3].poly = PolyX();
    return PiecewiseFn::from_pieces(bp, ps);
}

PiecewiseFn rieffel_g(const Rat& alpha, const Rat& eps, Ramp ramp) {
    check_rieffel_params(alpha, eps);
    PolyX r = ramp_poly(ramp);
    PolyX down = PolyX::constant(Rat(1)) - r.compose_affine(Rat(1) / eps, Rat(0));
    PolyX radicand = down - down * down; // f - f^2 on the down-ramp, locally
    std::vector<Rat> bp{Rat(0), alpha, alpha + eps};
    std::vector<PwPiece> ps(3);
    ps[1].odd[1] = PolyX::constant(Rat(1));
    ps[1].radicand = radicand;
    return PiecewiseFn::from_pieces(bp, ps);
}

double adaptive_quad(const std::function<double(double)>& f, double a, double b, double tol) {
    // 15-point Gauss-Legendre on [a,b] with recursive bisection
    static const double xs[8] = {0.0,
                                 0.2011940939974345,
                                 0.3941513470775634,
                                 0.5709721726085388,
                                 0.7244177313601701,
                                 0.8482065834104272,
                                 0.9372733924007060,
                                 0.9879925180204854};
    static const double ws[8] = {0.2025782419255613, 0.1984314853271116, 0.1861610000155622,
                                 0.1662692058169939, 0.1395706779261543, 0.1071592204671719,
                                 0.0703660474881081, 0.0307532419961173};
    std::function<double(double, double, int)> gl = [&](double lo, double hi, int) {
        double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
        double s = ws[0] * f(c);
        for (int i = 1; i < 8; ++i) s += ws[i] * (f(c - h * xs[i]) + f(c + h * xs[i]));
        return s * h;
    };
    std::function<double(double, double, double, int)> rec = [&](double lo, double hi, double whole,
                                                                 int depth) -> double {
        double mid = 0.5 * (lo + hi);
        double left = gl(lo, mid, 0), right = gl(mid, hi, 0);
        if (depth > 48 || std::abs(left + right - whole) < tol * (1 + std::abs(left + right)))
            return left + right;
        return rec(lo, mid, left, depth + 1) + rec(mid, hi, right, depth + 1);
    };
    if (a == b) return 0.0;
    return rec(a, b, gl(a, b, 0), 0);
}

PwSeries PwSeries::fn(const PiecewiseFn& f, int trunc, int floor) {
    PwSeries s(trunc, floor);
    if (!f.is_zero() && trunc >= 0) s.c_[0] = f;
    return s;
}

PiecewiseFn PwSeries::coeff(int order) const {
    auto it = c_.find(order);
    if (it == c_.end()) return PiecewiseFn::zero();
    return it->second;
}

void PwSeries::set_coeff(int order, const PiecewiseFn& f) {
    if (order < -floor_) throw FloorExceeded(order, floor_);
    if (f.is_zero() || order > trunc_)
        c_.erase(order);
    else
        c_[order] = f;
}

void PwSeries::prune() {
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->second.is_zero() || it->first > trunc_)
            it = c_.erase(it);
        else
            ++it;
    }
    if (!c_.empty() && c_.begin()->first < -floor_) throw FloorExceeded(c_.begin()->first, floor_);
}

PwSeries PwSeries::operator-() const {
    PwSeries r = *this;
    for (auto& [n, f] : r.c_) f = -f;
    return r;
}

PwSeries PwSeries::operator+(const PwSeries& o) const {
    PwSeries r(std::min(trunc_, o.trunc_), std::max(floor_, o.floor_));
    r.c_ = c_;
    for (auto& [n, f] : o.c_) {
        auto it = r.c_.find(n);
        if (it == r.c_.end())
            r.c_[n] = f;
        else
            it->second = it->second + f;
    }
    r.prune();
    return r;
}

PwSeries PwSeries::operator-(const PwSeries& o) const { return *this + (-o); }

PwSeries PwSeries::operator*(const PwSeries& o) const {
    PwSeries r(std::min(trunc_, o.trunc_), std::max(floor_, o.floor_));
    for (auto& [n, f] : c_)
        for (auto& [m, g] : o.c_) {
            int k = n + m;
            if (k > r.trunc_) continue;
            if (k < -r.floor_) throw FloorExceeded(k, r.floor_);
            PiecewiseFn prod = f * g;
            auto it = r.c_.find(k);
            if (it == r.c_.end())
                r.c_[k] = prod;
            else
                it->second = it->second + prod;
        }
    r.prune();
    return r;
}

PwSeries PwSeries::scaled(const Rat& q) const {
    PwSeries r(trunc_, floor_);
    if (q == 0) return r;
    for (auto& [n, f] : c_) r.c_[n] = f.scaled(q);
    return r;
}

PwSeries PwSeries::shifted(int by) const {
    PwSeries r(trunc_, floor_);
    for (auto& [n, f] : c_) {
        int k = n + by;
        if (k > trunc_) continue;
        if (k < -floor_) throw FloorExceeded(k, floor_);
        r.c_[k] = f;
    }
    return r;
}

PwSeries PwSeries::derivative() const {
    PwSeries r(trunc_, floor_);
    for (auto& [n, f] : c_) {
        auto d = f.derivative();
        if (!d.is_zero()) r.c_[n] = d;
    }
    return r;
}

PwSeries PwSeries::translated(const Rat& s) const {
    PwSeries r(trunc_, floor_);
    for (auto& [n, f] : c_) r.c_[n] = f.translated(s);
    r.prune();
    return r;
}

FormalLaurent PwSeries::integral(const Ctx& ctx) const {
    FormalLaurent out(ctx.backend, trunc_, floor_);
    for (auto& [n, f] : c_) {
        PwIntegral I = f.integral();
        Scalar s = I.exact ? ctx.rational(I.exact_value)
                           : (ctx.backend == Backend::numeric
                                  ? Scalar::numeric(I.value)
                                  : throw Error("exact integral unavailable for root pieces"));
        if (!s.is_zero()) out.set_coeff(n, s);
    }
    return out;
}

std::string PwSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [n, f] : c_) {
        if (!first) os << " + ";
        os << "h^" << n << "*{" << f.str() << "}";
        first = false;
    }
    return first ? "0" : os.str();
}

} // namespace nct
