#include "plesken/rational.hpp"

#include "plesken/error.hpp"

#include <cctype>

namespace plesken {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) {
      throw InputError("malformed rational literal '" + text + "'");
    }
    return Rational(mpz_class(text, 10));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw InputError("malformed rational literal '" + text + "'");
  }
  mpz_class d(den, 10);
  if (d == 0) {
    throw InputError("zero denominator in rational literal '" + text + "'");
  }
  Rational q(mpz_class(num, 10), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  return value.get_str();
}

} // namespace plesken
