#include "fod/rational.hpp"

#include <cctype>
#include <string>

#include "fod/error.hpp"

namespace fod {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw ValidationError("malformed rational \"" + std::string(text) + "\"");
  }
  // mpz_class rejects a leading '+'
  auto strip = [](std::string_view s) { return std::string(s[0] == '+' ? s.substr(1) : s); };
  Integer p(strip(num));
  Integer q(strip(den));
  if (q == 0) throw ValidationError("zero denominator in \"" + std::string(text) + "\"");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_zero(const QVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

QVector zero_vector(std::size_t n) { return QVector(n); }

QVector unit_vector(std::size_t n, std::size_t i) {
  QVector v(n);
  v[i] = 1;
  return v;
}

}  // namespace fod
