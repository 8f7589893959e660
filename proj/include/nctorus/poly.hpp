#pragma once

#include <array>
#include <map>
#include <string>

#include "nctorus/rational.hpp"

namespace nct {

// Monomial in the commuting symbols pi, theta, u, v.  pi and theta carry
// nonnegative exponents; u and v are Laurent (integer exponents).
struct Mono {
    std::array<int, 4> e{0, 0, 0, 0}; // pi, theta, u, v

    auto operator<=>(const Mono&) const = default;
    Mono operator*(const Mono& o) const {
        Mono r;
        for (int i = 0; i < 4; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
};

// Sparse Laurent polynomial over the Gaussian rationals.
class Poly {
public:
    std::map<Mono, GaussRat> t;

    Poly() = default;
    static Poly zero() { return Poly(); }
    static Poly constant(const GaussRat& c);
    static Poly one() { return constant(GaussRat(Rat(1))); }
    // var: 0 = pi, 1 = theta, 2 = u, 3 = v
    static Poly sym(int var, int exp = 1);

    bool is_zero() const { return t.empty(); }
    bool is_one() const { return t.size() == 1 && t.begin()->first == Mono{} && t.begin()->second.is_one(); }
    bool is_constant() const;
    bool is_monomial() const { return t.size() == 1; }
    GaussRat constant_value() const; // requires is_constant()

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return t == o.t; }

    int min_exp(int var) const;
    int max_exp(int var) const;
    Poly shifted(int var, int by) const;
    Poly scaled(const GaussRat& c) const;

    // Leading term in lex order (last map entry).
    std::pair<Mono, GaussRat> leading() const;

    std::string str() const;
};

// GCD up to units; result normalized with leading coefficient 1 and
// nonnegative u,v exponents with zero minimum.
Poly poly_gcd(const Poly& a, const Poly& b);

// Exact division; throws Error if not divisible.
Poly poly_divexact(const Poly& a, const Poly& b);

} // namespace nct
