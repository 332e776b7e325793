#include "koszulcy/scalar.hpp"

#include "koszulcy/errors.hpp"

#include <cctype>

namespace koszulcy {

namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  if (text.empty()) {
    return false;
  }
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  }
  Scalar value(n, d);
  value.canonicalize();
  return value;
}

Scalar ratio(long p, long q) {
  if (q == 0) {
    throw PreconditionError("zero denominator");
  }
  Scalar value(p, q);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) {
  if (value.get_den() == 1) {
    return value.get_num().get_str();
  }
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_canonical(const Scalar& value) {
  if (value.get_den() <= 0) {
    return false;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return g == 1;
}

}  // namespace koszulcy
