#pragma once

// Exact arbitrary-precision integer and rational arithmetic used throughout.
// No floating point appears anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace fano {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// n/d with the sign moved to the numerator. The underlying two-argument
// rational constructor rejects negative denominators outright.
inline Rat make_rat(const Int& n, const Int& d) {
    if (d == 0) throw std::invalid_argument("make_rat: zero denominator");
    return (d < 0) ? Rat(-n, -d) : Rat(n, d);
}

// Non-negative remainder of a mod m (m > 0).
inline Int mod_pos(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

// Extended gcd: returns g = gcd(a, b) and sets x, y with a*x + b*y = g.
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y);

// Inverse of a modulo m (m > 1, gcd(a, m) = 1).
Int mod_inverse(const Int& a, const Int& m);

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

Int factorial(int n);

// Largest integer <= r and smallest integer >= r.
Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);

// "p" for integers, "p/q" otherwise (q > 0, lowest terms). Never a decimal.
std::string rat_str(const Rat& r);

// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);

} // namespace fano
