#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace xiknot {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

inline int sgn(const Int& a) { return a.sign(); }
inline int sgn(const Rat& a) { return a.sign(); }

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

inline std::string to_string(const Int& a) { return a.str(); }

// Canonical text form: integers render bare, proper fractions as "a/b".
inline std::string to_string(const Rat& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

}  // namespace xiknot
