#include "hyperpoly/univariate.hpp"

#include <sstream>
#include <stdexcept>

namespace hyperpoly {

const Rational& UnivariatePolynomial::leading() const {
  if (is_zero()) throw std::invalid_argument("leading(): zero polynomial");
  return coeffs_.back();
}

Rational UnivariatePolynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out[k - 1] = Rational(static_cast<long>(k)) * coeffs_[k];
  }
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial UnivariatePolynomial::operator-() const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] = -coeffs_[k];
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  return a + (-b);
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial operator*(const Rational& c, const UnivariatePolynomial& p) {
  std::vector<Rational> out(p.coeffs_.size());
  for (std::size_t k = 0; k < p.coeffs_.size(); ++k) out[k] = c * p.coeffs_[k];
  return UnivariatePolynomial(std::move(out));
}

UnivariateDivMod divmod(const UnivariatePolynomial& num, const UnivariatePolynomial& den) {
  if (den.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
  std::vector<Rational> rem = num.coeffs();
  const int dd = den.degree();
  const Rational lead_inv = den.leading().inverse();
  std::vector<Rational> quot;
  if (num.degree() >= dd) quot.assign(num.degree() - dd + 1, Rational(0));
  for (int k = num.degree(); k >= dd; --k) {
    const Rational c = rem[k] * lead_inv;
    if (c.is_zero()) continue;
    quot[k - dd] = c;
    for (int j = 0; j <= dd; ++j) {
      rem[k - dd + j] -= c * den.coeffs()[j];
    }
  }
  return {UnivariatePolynomial(std::move(quot)), UnivariatePolynomial(std::move(rem))};
}

UnivariatePolynomial UnivariatePolynomial::div_exact(const UnivariatePolynomial& den) const {
  auto [q, r] = divmod(*this, den);
  if (!r.is_zero()) throw std::invalid_argument("div_exact: nonzero remainder");
  return q;
}

UnivariatePolynomial UnivariatePolynomial::primitive_scaled() const {
  if (is_zero()) return {};
  mpz_class den_lcm(1);
  for (const auto& c : coeffs_) {
    mpz_class d = c.raw().get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  mpz_class content(0);
  for (const auto& c : coeffs_) {
    mpz_class scaled_num = c.raw().get_num() * (den_lcm / c.raw().get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled_num.get_mpz_t());
  }
  // content > 0 since the polynomial is nonzero
  const Rational scale = Rational::from_raw(mpq_class(den_lcm, content));
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] = scale * coeffs_[k];
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial UnivariatePolynomial::shift_down(int k) const {
  if (k < 0 || k > static_cast<int>(coeffs_.size())) {
    throw std::invalid_argument("shift_down: bad exponent");
  }
  for (int j = 0; j < k; ++j) {
    if (!coeffs_[j].is_zero()) throw std::invalid_argument("shift_down: low coefficient nonzero");
  }
  return UnivariatePolynomial(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

std::string UnivariatePolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    os << coeffs_[k].str();
    if (k >= 1) os << "*L";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  UnivariatePolynomial x = a.primitive_scaled();
  UnivariatePolynomial y = b.primitive_scaled();
  while (!y.is_zero()) {
    auto [q, r] = divmod(x, y);
    x = std::move(y);
    y = r.primitive_scaled();
  }
  if (x.is_zero()) return x;
  return x.leading().sign() < 0 ? -x : x;
}

}  // namespace hyperpoly
