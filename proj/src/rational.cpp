#include "hyperpoly/rational.hpp"

#include <cctype>
#include <ostream>

namespace hyperpoly {

namespace {

bool valid_integer(const std::string& s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& s) {
  const auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  if (!valid_integer(num, /*allow_sign=*/true)) {
    throw std::invalid_argument("Rational: malformed numerator in '" + s + "'");
  }
  if (num.front() == '+') num.erase(num.begin());  // mpz rejects a leading '+'
  mpq_class v;
  if (slash == std::string::npos) {
    v = mpq_class(num);
  } else {
    const std::string den = s.substr(slash + 1);
    if (!valid_integer(den, /*allow_sign=*/false)) {
      throw std::invalid_argument("Rational: malformed denominator in '" + s + "'");
    }
    mpz_class d(den);
    if (sgn(d) == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    v = mpq_class(mpz_class(num), d);
  }
  v.canonicalize();
  return from_raw(std::move(v));
}

Rational Rational::pow(const Rational& base, int exp) {
  if (exp < 0) return pow(base.inverse(), -exp);
  Rational acc(1);
  Rational b = base;
  int e = exp;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hyperpoly
