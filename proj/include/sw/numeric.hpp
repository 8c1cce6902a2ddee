#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace sw {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an operation is called outside its domain; the message
/// names the violated precondition or identity.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an input document or parameter cannot be parsed.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Exact integer value of a rational known to be integral.
inline Int to_integer(const Rational& q, const char* context) {
    if (!is_integer(q))
        throw domain_error(std::string(context) + ": expected an integer, got " +
                           q.str());
    return numerator(q);
}

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k! for any integer n,
/// k >= 0. Always an exact integer.
Int binomial(const Int& n, long k);

Int factorial(long n);

Int gcd_int(Int a, Int b);
Int lcm_int(const Int& a, const Int& b);

/// Parses "p/q" or "p" into an exact rational.
Rational parse_rational(const std::string& text);

/// Canonical form: decimal integer, or "p/q" reduced with q > 1.
std::string rational_str(const Rational& q);

}  // namespace sw
