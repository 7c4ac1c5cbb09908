#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace sympow {

// Exact arbitrary-precision fraction, always normalized (lowest terms,
// positive denominator). GMP keeps the canonical form for us.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

// "p/q" for proper fractions, "p" for integers; exact either way.
inline std::string to_string(const Rational& r) { return r.str(); }

} // namespace sympow
