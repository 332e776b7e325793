#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace koszulcy {

// Exact rational number. GMP keeps every result of arithmetic in lowest
// terms with a positive denominator.
using Scalar = mpq_class;

// Parses "p", "-p" or "p/q" (optional surrounding whitespace is rejected).
Scalar parse_scalar(std::string_view text);

// p/q in lowest terms.
Scalar ratio(long p, long q);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& value);

// True when numerator and denominator are coprime and the denominator is positive.
bool is_canonical(const Scalar& value);

}  // namespace koszulcy
