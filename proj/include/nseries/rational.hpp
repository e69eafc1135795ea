#ifndef NSERIES_RATIONAL_HPP
#define NSERIES_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nseries
{

// Exact coefficient field k = Q.
using Rational = mpq_class;

// Parses "p", "-p", "p/q". Throws ParseError on anything else (including q = 0).
Rational parse_rational(std::string_view text);

// Canonical GMP form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational &r);

Rational factorial(unsigned n);

Rational binomial(unsigned n, unsigned k);

// r^e for an arbitrary integer exponent; r must be nonzero when e < 0.
Rational int_pow(const Rational &r, std::int64_t e);

} // namespace nseries

#endif
