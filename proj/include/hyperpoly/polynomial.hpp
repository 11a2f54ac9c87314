#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperpoly/rational.hpp"
#include "hyperpoly/univariate.hpp"

namespace hyperpoly {

// A point of Q^n. Doubles as a direction vector.
struct Point {
  std::vector<Rational> coords;

  Point() = default;
  explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}
  Point(std::initializer_list<Rational> c) : coords(c) {}

  int size() const { return static_cast<int>(coords.size()); }
  const Rational& operator[](int i) const { return coords[i]; }
  Rational& operator[](int i) { return coords[i]; }
  bool operator==(const Point&) const = default;

  static Point zero(int n) { return Point(std::vector<Rational>(n, Rational(0))); }
  static Point ones(int n) { return Point(std::vector<Rational>(n, Rational(1))); }
  static Point unit(int n, int i);
  // Characteristic vector of the subset encoded by mask bits.
  static Point characteristic(int n, unsigned mask);

  Point operator-() const;
  Point scaled(const Rational& c) const;
  std::string str() const;
};

class Polynomial;

// Homogeneous linear form sum_i coeffs[i] * x_i.
struct LinearForm {
  std::vector<Rational> coeffs;

  LinearForm() = default;
  explicit LinearForm(std::vector<Rational> c) : coeffs(std::move(c)) {}
  LinearForm(std::initializer_list<Rational> c) : coeffs(c) {}

  int nvars() const { return static_cast<int>(coeffs.size()); }
  Rational eval(const Point& x) const;
  LinearForm scaled(const Rational& c) const;
  Polynomial to_polynomial() const;
  bool operator==(const LinearForm&) const = default;
};

// Sparse multivariate polynomial over Q with a fixed number of variables.
// Terms map exponent vectors (length nvars, entries >= 0) to nonzero
// coefficients; the map's lexicographic key order is the canonical term
// order used for serialization. The zero polynomial is the empty map.
class Polynomial {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational>;

  explicit Polynomial(int nvars);
  static Polynomial constant(int nvars, Rational c);
  static Polynomial monomial(int nvars, Exponents exps, Rational c);
  static Polynomial variable(int nvars, int i);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  int total_degree() const;  // -1 for zero
  std::optional<int> homogeneous_degree() const;
  Rational coeff(const Exponents& exps) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  bool operator==(const Polynomial&) const = default;

  Rational eval(const Point& x) const;
  Polynomial derivative(int var) const;
  // <grad p, e>: one application of the polar operator.
  Polynomial directional_derivative(const Point& e) const;
  // i-fold directional derivative in direction e; degree drops by i.
  // pre: homogeneous, 0 <= i <= degree.
  Polynomial polar(const Point& e, int i) const;
  // Coefficients of lambda -> p(q + lambda * e).
  UnivariatePolynomial restrict_to_line(const Point& q, const Point& e) const;

  std::string str(const std::vector<std::string>* names = nullptr) const;

 private:
  void add_term(const Exponents& exps, const Rational& c);
  int nvars_;
  TermMap terms_;

  friend Polynomial polynomial_pow(const Polynomial&, int);
};

// k-th elementary symmetric polynomial in n variables: all squarefree
// degree-k monomials with unit coefficients.
Polynomial elementary_symmetric(int n, int k);

// Product of the given linear forms; homogeneous of degree = #forms.
Polynomial product_of_forms(const std::vector<LinearForm>& forms);

Polynomial polynomial_pow(const Polynomial& base, int exp);

}  // namespace hyperpoly
