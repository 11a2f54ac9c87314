#pragma once

#include <initializer_list>
#include <vector>

#include "hyperpoly/rational.hpp"

namespace hyperpoly {

// Univariate polynomial with exact rational coefficients, coeffs()[k] being
// the coefficient of lambda^k. Canonical form stores no leading zeros; the
// zero polynomial is the empty coefficient vector.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }
  UnivariatePolynomial(std::initializer_list<Rational> coeffs)
      : coeffs_(coeffs) {
    trim();
  }
  static UnivariatePolynomial constant(Rational c) {
    return UnivariatePolynomial(std::vector<Rational>{std::move(c)});
  }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  Rational coeff(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : Rational(0);
  }
  const Rational& leading() const;  // throws on the zero polynomial

  Rational eval(const Rational& x) const;
  UnivariatePolynomial derivative() const;

  UnivariatePolynomial operator-() const;
  friend UnivariatePolynomial operator+(const UnivariatePolynomial&, const UnivariatePolynomial&);
  friend UnivariatePolynomial operator-(const UnivariatePolynomial&, const UnivariatePolynomial&);
  friend UnivariatePolynomial operator*(const UnivariatePolynomial&, const UnivariatePolynomial&);
  friend UnivariatePolynomial operator*(const Rational&, const UnivariatePolynomial&);
  bool operator==(const UnivariatePolynomial&) const = default;

  // Division known to be exact; throws std::invalid_argument on a remainder.
  UnivariatePolynomial div_exact(const UnivariatePolynomial& den) const;

  // Positive rational rescaling to coprime integer coefficients. Signs and
  // roots are unchanged; keeps Sturm chain entries small.
  UnivariatePolynomial primitive_scaled() const;

  // Divides by lambda^k; the k low coefficients must be zero.
  UnivariatePolynomial shift_down(int k) const;

  std::string str() const;  // human-readable, for diagnostics

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

// Quotient and remainder of division by a nonzero divisor.
struct UnivariateDivMod {
  UnivariatePolynomial quotient;
  UnivariatePolynomial remainder;
};
UnivariateDivMod divmod(const UnivariatePolynomial& num, const UnivariatePolynomial& den);

// Polynomial gcd, normalized to primitive integer coefficients with positive
// leading coefficient. gcd(0, 0) is 0.
UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

}  // namespace hyperpoly
