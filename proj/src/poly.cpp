#include "nctorus/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace nct {

Rat rat_from_string(const std::string& s) {
    std::string t = s;
    // strip whitespace
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' '; }), t.end());
    if (t.empty()) throw Error("empty numeric literal");
    bool neg = false;
    if (t[0] == '+' || t[0] == '-') {
        neg = (t[0] == '-');
        t = t.substr(1);
    }
    // exponent part
    long exp10 = 0;
    auto epos = t.find_first_of("eE");
    if (epos != std::string::npos) {
        exp10 = std::strtol(t.c_str() + epos + 1, nullptr, 10);
        t = t.substr(0, epos);
    }
    Rat r;
    auto slash = t.find('/');
    auto dot = t.find('.');
    if (slash != std::string::npos) {
        mpz_class num(t.substr(0, slash)), den(t.substr(slash + 1));
        if (den == 0) throw Error("zero denominator in literal " + s);
        r = Rat(num) / Rat(den);
    } else if (dot != std::string::npos) {
        std::string digits = t.substr(0, dot) + t.substr(dot + 1);
        if (digits.empty()) throw Error("bad numeric literal " + s);
        long frac = static_cast<long>(t.size() - dot - 1);
        mpz_class num(digits.empty() ? "0" : digits);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac));
        r = Rat(num) / Rat(den);
    } else {
        r = Rat(mpz_class(t));
    }
    while (exp10 > 0) { r *= 10; --exp10; }
    while (exp10 < 0) { r /= 10; ++exp10; }
    r.canonicalize();
    return neg ? Rat(-r) : r;
}

std::string rat_str(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

double rat_to_double(const Rat& q) { return q.get_d(); }

std::string GaussRat::str() const {
    if (im == 0) return rat_str(re);
    if (re == 0) {
        if (im == 1) return "i";
        if (im == -1) return "-i";
        return rat_str(im) + "*i";
    }
    std::string s = rat_str(re);
    if (im > 0)
        s += "+" + (im == 1 ? std::string("i") : rat_str(im) + "*i");
    else
        s += "-" + (im == -1 ? std::string("i") : rat_str(Rat(-im)) + "*i");
    return "(" + s + ")";
}

Poly Poly::constant(const GaussRat& c) {
    Poly p;
    if (!c.is_zero()) p.t[Mono{}] = c;
    return p;
}

Poly Poly::sym(int var, int exp) {
    Poly p;
    Mono m;
    m.e[var] = exp;
    p.t[m] = GaussRat(Rat(1));
    return p;
}

bool Poly::is_constant() const {
    return t.empty() || (t.size() == 1 && t.begin()->first == Mono{});
}

GaussRat Poly::constant_value() const {
    if (t.empty()) return GaussRat();
    return t.begin()->second;
}

Poly Poly::operator-() const {
    Poly r;
    for (auto& [m, c] : t) r.t[m] = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (auto& [m, c] : o.t) {
        auto it = r.t.find(m);
        if (it == r.t.end()) {
            r.t[m] = c;
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) r.t.erase(it);
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (auto& [m1, c1] : t)
        for (auto& [m2, c2] : o.t) {
            Mono m = m1 * m2;
            auto it = r.t.find(m);
            if (it == r.t.end()) {
                GaussRat c = c1 * c2;
                if (!c.is_zero()) r.t[m] = c;
            } else {
                it->second = it->second + c1 * c2;
                if (it->second.is_zero()) r.t.erase(it);
            }
        }
    return r;
}

int Poly::min_exp(int var) const {
    int m = 0;
    bool first = true;
    for (auto& [mo, c] : t) {
        if (first || mo.e[var] < m) m = mo.e[var];
        first = false;
    }
    return m;
}

int Poly::max_exp(int var) const {
    int m = 0;
    bool first = true;
    for (auto& [mo, c] : t) {
        if (first || mo.e[var] > m) m = mo.e[var];
        first = false;
    }
    return m;
}

Poly Poly::shifted(int var, int by) const {
    Poly r;
    for (auto& [m, c] : t) {
        Mono n = m;
        n.e[var] += by;
        r.t[n] = c;
    }
    return r;
}

Poly Poly::scaled(const GaussRat& c) const {
    Poly r;
    if (c.is_zero()) return r;
    for (auto& [m, k] : t) r.t[m] = k * c;
    return r;
}

std::pair<Mono, GaussRat> Poly::leading() const {
    return *t.rbegin();
}

std::string Poly::str() const {
    if (t.empty()) return "0";
    static const char* names[4] = {"pi", "theta", "u", "v"};
    std::string s;
    bool first = true;
    for (auto& [m, c] : t) {
        std::string vars;
        for (int i = 0; i < 4; ++i) {
            if (m.e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[i];
            if (m.e[i] != 1) vars += "^" + std::to_string(m.e[i]);
        }
        std::string term;
        if (vars.empty())
            term = c.str();
        else if (c.is_one())
            term = vars;
        else if (c == GaussRat(Rat(-1)))
            term = "-" + vars;
        else
            term = c.str() + "*" + vars;
        if (!first) s += " + ";
        s += term;
        first = false;
    }
    return s;
}

namespace {

// -- multivariate gcd helpers (recursive primitive PRS) --

// view p as univariate in `var`: degree -> coefficient poly in the other vars
std::map<int, Poly> coeffs_in(const Poly& p, int var) {
    std::map<int, Poly> out;
    for (auto& [m, c] : p.t) {
        Mono n = m;
        int d = n.e[var];
        n.e[var] = 0;
        out[d].t[n] = c;
    }
    return out;
}

Poly from_coeffs(const std::map<int, Poly>& cs, int var) {
    Poly p;
    for (auto& [d, c] : cs) p = p + c.shifted(var, d);
    return p;
}

int degree_in(const Poly& p, int var) { return p.is_zero() ? -1 : p.max_exp(var); }

bool depends_on(const Poly& p, int var) {
    for (auto& [m, c] : p.t)
        if (m.e[var] != 0) return true;
    return false;
}

Poly gcd_normalize(Poly g) {
    if (g.is_zero()) return g;
    for (int v = 2; v < 4; ++v) {
        int mn = g.min_exp(v);
        if (mn != 0) g = g.shifted(v, -mn);
    }
    GaussRat lead = g.leading().second;
    return g.scaled(GaussRat(Rat(1)) / lead);
}

Poly gcd_rec(Poly a, Poly b, int var);

Poly content_in(const Poly& p, int var) {
    auto cs = coeffs_in(p, var);
    Poly g;
    for (auto& [d, c] : cs) g = gcd_rec(g, c, var + 1);
    return g;
}

// pseudo-remainder of a by b in variable `var`
Poly prem(Poly a, const Poly& b, int var) {
    int db = degree_in(b, var);
    auto bc = coeffs_in(b, var);
    Poly blead = bc.rbegin()->second;
    int da = degree_in(a, var);
    while (!a.is_zero() && (da = degree_in(a, var)) >= db) {
        auto ac = coeffs_in(a, var);
        Poly alead = ac.rbegin()->second;
        // a <- blead*a - alead*x^(da-db)*b
        a = blead * a - (alead * b).shifted(var, da - db);
        if (!a.is_zero() && degree_in(a, var) == da) throw Error("pseudo-division failed to reduce degree");
    }
    return a;
}

Poly gcd_rec(Poly a, Poly b, int var) {
    if (a.is_zero()) return gcd_normalize(b);
    if (b.is_zero()) return gcd_normalize(a);
    // clear Laurent exponents
    for (int v = 2; v < 4; ++v) {
        int mn = a.min_exp(v);
        if (mn < 0) a = a.shifted(v, -mn);
        mn = b.min_exp(v);
        if (mn < 0) b = b.shifted(v, -mn);
    }
    if (var >= 4) return Poly::one(); // field coefficients
    if (!depends_on(a, var) && !depends_on(b, var)) return gcd_rec(a, b, var + 1);
    if (!depends_on(a, var)) return gcd_rec(a, content_in(b, var), var + 1);
    if (!depends_on(b, var)) return gcd_rec(b, content_in(a, var), var + 1);

    Poly ca = content_in(a, var), cb = content_in(b, var);
    Poly cont = gcd_rec(ca, cb, var + 1);
    Poly pa = poly_divexact(a, ca), pb = poly_divexact(b, cb);
    // primitive PRS
    if (degree_in(pa, var) < degree_in(pb, var)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Poly r = prem(pa, pb, var);
        pa = pb;
        if (r.is_zero()) {
            pb = Poly::zero();
        } else {
            Poly cr = content_in(r, var);
            pb = poly_divexact(r, cr);
        }
    }
    return gcd_normalize(cont * pa);
}

} // namespace

Poly poly_divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return a;
    if (b.is_monomial()) {
        auto [bm, bc] = *b.t.begin();
        Poly r;
        for (auto& [m, c] : a.t) {
            Mono n;
            for (int i = 0; i < 4; ++i) {
                n.e[i] = m.e[i] - bm.e[i];
                if (i < 2 && n.e[i] < 0) throw Error("non-exact monomial division");
            }
            r.t[n] = c / bc;
        }
        return r;
    }
    // long division in the highest variable present in b
    int var = 0;
    while (var < 4 && !depends_on(b, var)) ++var;
    if (var == 4) return poly_divexact(a, Poly::constant(b.constant_value()));
    Poly rem = a, quot;
    int db = degree_in(b, var);
    auto bc = coeffs_in(b, var);
    Poly blead = bc.rbegin()->second;
    while (!rem.is_zero() && degree_in(rem, var) >= db) {
        auto rc = coeffs_in(rem, var);
        Poly rlead = rc.rbegin()->second;
        Poly q = poly_divexact(rlead, blead); // recursive (throws on failure)
        int shift = degree_in(rem, var) - db;
        quot = quot + q.shifted(var, shift);
        rem = rem - (q * b).shifted(var, shift);
    }
    if (!rem.is_zero()) throw Error("non-exact polynomial division");
    return quot;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return gcd_normalize(b);
    if (b.is_zero()) return gcd_normalize(a);
    if (a.is_monomial() && b.is_monomial()) {
        Mono g;
        for (int i = 0; i < 2; ++i) g.e[i] = std::min(a.t.begin()->first.e[i], b.t.begin()->first.e[i]);
        Poly r;
        r.t[g] = GaussRat(Rat(1));
        return r;
    }
    if (a.is_monomial() || b.is_monomial()) {
        const Poly& mono = a.is_monomial() ? a : b;
        const Poly& poly = a.is_monomial() ? b : a;
        // gcd(monomial, poly) = monomial gcd with the poly's monomial content
        Mono g = mono.t.begin()->first;
        for (auto& [m, c] : poly.t)
            for (int i = 0; i < 2; ++i) g.e[i] = std::min(g.e[i], m.e[i]);
        for (int i = 0; i < 2; ++i) g.e[i] = std::max(g.e[i], 0);
        g.e[2] = g.e[3] = 0;
        Poly r;
        r.t[g] = GaussRat(Rat(1));
        return r;
    }
    return gcd_rec(a, b, 0);
}

} // namespace nct
