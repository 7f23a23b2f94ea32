#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace ramcycle {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string rational_str(const Rational& q);
Rational parse_rational(const std::string& s);

BigInt factorial(int n);
BigInt binomial(int n, int k);
// #ordered assignments of k distinct labels to n interchangeable points: n!/(n-k)!
BigInt falling_factorial(int n, int k);

// Coefficient of a formal sum: an exact rational, or a "nonzero-unknown"
// symbolic marker. Symbolic absorbs addition; multiplying by an exact zero
// yields zero. Vanishing verdicts test `is_zero`, which a symbolic marker
// never satisfies.
struct Coeff {
    Rational value{0};
    bool symbolic = false;

    Coeff() = default;
    Coeff(Rational v) : value(std::move(v)) {}
    Coeff(long v) : value(v) {}

    static Coeff nonzero_unknown() {
        Coeff c;
        c.symbolic = true;
        return c;
    }

    bool is_zero() const { return !symbolic && value == 0; }

    Coeff& operator+=(const Coeff& o) {
        if (symbolic || o.symbolic) {
            symbolic = true;
            value = 0;
        } else {
            value += o.value;
        }
        return *this;
    }
    Coeff operator*(const Coeff& o) const {
        Coeff r;
        if (!symbolic && value == 0) return Coeff{Rational(0)};
        if (!o.symbolic && o.value == 0) return Coeff{Rational(0)};
        if (symbolic || o.symbolic) return nonzero_unknown();
        r.value = value * o.value;
        return r;
    }
    Coeff operator*(const Rational& q) const {
        if (q == 0) return Coeff{Rational(0)};
        if (symbolic) return nonzero_unknown();
        return Coeff{value * q};
    }
    Coeff operator-() const {
        if (symbolic) return nonzero_unknown();
        return Coeff{-value};
    }
    bool operator==(const Coeff& o) const {
        return symbolic == o.symbolic && (symbolic || value == o.value);
    }

    std::string str() const { return symbolic ? "nonzero" : rational_str(value); }
};

}  // namespace ramcycle
