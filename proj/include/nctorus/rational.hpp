#pragma once

#include <gmpxx.h>

#include <string>

#include "nctorus/errors.hpp"

namespace nct {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "3", "-7/2", "0.375", "1e-3" style literals into an exact rational.
Rat rat_from_string(const std::string& s);

std::string rat_str(const Rat& q);
double rat_to_double(const Rat& q);

// mpq_class(a, b) does not canonicalize; route every two-argument
// construction through this.
inline Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Gaussian rational a + b*i.
struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(const Rat& r) : re(r), im(0) { re.canonicalize(); }
    GaussRat(const Rat& r, const Rat& i) : re(r), im(i) {
        re.canonicalize();
        im.canonicalize();
    }
    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GaussRat operator-() const { return GaussRat(-re, -im); }
    GaussRat operator+(const GaussRat& o) const { return GaussRat(re + o.re, im + o.im); }
    GaussRat operator-(const GaussRat& o) const { return GaussRat(re - o.re, im - o.im); }
    GaussRat operator*(const GaussRat& o) const {
        return GaussRat(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GaussRat operator/(const GaussRat& o) const {
        Rat n = o.re * o.re + o.im * o.im;
        if (n == 0) throw DivisionByZero();
        return GaussRat((re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n);
    }
    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }

    std::string str() const;
};

} // namespace nct
