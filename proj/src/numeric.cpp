#include "sw/numeric.hpp"

namespace sw {

Int binomial(const Int& n, long k) {
    if (k < 0)
        throw domain_error("binomial: k must be non-negative");
    Int result = 1;
    // Partial products are themselves binomials, so each division is exact.
    for (long i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

Int factorial(long n) {
    if (n < 0)
        throw domain_error("factorial: argument must be non-negative");
    Int result = 1;
    for (long i = 2; i <= n; ++i) result *= i;
    return result;
}

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int g = gcd_int(a, b);
    Int l = (a / g) * b;
    return l < 0 ? -l : l;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw domain_error("parse_rational: zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw parse_error("not a rational number: '" + text + "'");
    }
}

std::string rational_str(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace sw
