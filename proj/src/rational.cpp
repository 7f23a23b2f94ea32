#include "ramcycle/rational.hpp"

#include "ramcycle/error.hpp"

namespace ramcycle {

std::string rational_str(const Rational& q) {
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& s) {
    check(!s.empty(), ErrorKind::ParseError, "empty rational");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        check(den != 0, ErrorKind::ParseError, "zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const std::exception&) {
        fail(ErrorKind::ParseError, "bad rational '" + s + "'");
    }
}

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

BigInt falling_factorial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) r *= (n - i);
    return r;
}

}  // namespace ramcycle
