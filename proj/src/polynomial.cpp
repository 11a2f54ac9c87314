#include "hyperpoly/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

namespace {

void require_same_size(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

int exps_total(const Polynomial::Exponents& e) {
  int t = 0;
  for (int v : e) t += v;
  return t;
}

}  // namespace

Point Point::unit(int n, int i) {
  if (i < 0 || i >= n) throw std::invalid_argument("Point::unit: index out of range");
  Point p = zero(n);
  p[i] = Rational(1);
  return p;
}

Point Point::characteristic(int n, unsigned mask) {
  Point p = zero(n);
  for (int i = 0; i < n; ++i) {
    if (mask >> i & 1u) p[i] = Rational(1);
  }
  return p;
}

Point Point::operator-() const {
  Point p = *this;
  for (auto& c : p.coords) c = -c;
  return p;
}

Point Point::scaled(const Rational& c) const {
  Point p = *this;
  for (auto& v : p.coords) v *= c;
  return p;
}

std::string Point::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < size(); ++i) {
    if (i) os << ",";
    os << coords[i].str();
  }
  os << ")";
  return os.str();
}

Rational LinearForm::eval(const Point& x) const {
  require_same_size(nvars(), x.size(), "LinearForm::eval");
  Rational acc(0);
  for (int i = 0; i < nvars(); ++i) acc += coeffs[i] * x[i];
  return acc;
}

LinearForm LinearForm::scaled(const Rational& c) const {
  LinearForm f = *this;
  for (auto& v : f.coeffs) v *= c;
  return f;
}

Polynomial LinearForm::to_polynomial() const {
  Polynomial p(nvars());
  for (int i = 0; i < nvars(); ++i) {
    if (!coeffs[i].is_zero()) p += coeffs[i] * Polynomial::variable(nvars(), i);
  }
  return p;
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw std::invalid_argument("Polynomial: nvars must be positive");
}

Polynomial Polynomial::constant(int nvars, Rational c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.emplace(Exponents(nvars, 0), std::move(c));
  return p;
}

Polynomial Polynomial::monomial(int nvars, Exponents exps, Rational c) {
  Polynomial p(nvars);
  if (static_cast<int>(exps.size()) != nvars) {
    throw std::invalid_argument("Polynomial::monomial: exponent vector length mismatch");
  }
  for (int e : exps) {
    if (e < 0) throw std::invalid_argument("Polynomial::monomial: negative exponent");
  }
  if (!c.is_zero()) p.terms_.emplace(std::move(exps), std::move(c));
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::invalid_argument("Polynomial::variable: index out of range");
  Exponents e(nvars, 0);
  e[i] = 1;
  return monomial(nvars, std::move(e), Rational(1));
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, exps_total(e));
  return d;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = exps_total(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    if (exps_total(e) != d) return std::nullopt;
  }
  return d;
}

Rational Polynomial::coeff(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& exps, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p(nvars_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_size(nvars_, o.nvars_, "Polynomial add");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_size(nvars_, o.nvars_, "Polynomial sub");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_size(a.nvars_, b.nvars_, "Polynomial mul");
  Polynomial out(a.nvars_);
  Polynomial::Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial out(p.nvars_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : p.terms_) out.terms_.emplace(e, c * v);
  return out;
}

Rational Polynomial::eval(const Point& x) const {
  require_same_size(nvars_, x.size(), "Polynomial::eval");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] != 0) t *= Rational::pow(x[i], e[i]);
    }
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw std::invalid_argument("derivative: index out of range");
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents de = e;
    de[var] -= 1;
    out.add_term(de, Rational(static_cast<long>(e[var])) * c);
  }
  return out;
}

Polynomial Polynomial::directional_derivative(const Point& e) const {
  require_same_size(nvars_, e.size(), "directional_derivative");
  Polynomial out(nvars_);
  for (const auto& [exps, c] : terms_) {
    for (int i = 0; i < nvars_; ++i) {
      if (exps[i] == 0 || e[i].is_zero()) continue;
      Exponents de = exps;
      de[i] -= 1;
      out.add_term(de, Rational(static_cast<long>(exps[i])) * e[i] * c);
    }
  }
  return out;
}

Polynomial Polynomial::polar(const Point& e, int i) const {
  require_same_size(nvars_, e.size(), "polar");
  const auto d = homogeneous_degree();
  if (!d) throw precondition_error("polar: polynomial is not homogeneous");
  if (i < 0 || i > *d) {
    throw precondition_error("polar: order " + std::to_string(i) + " exceeds degree " +
                             std::to_string(*d));
  }
  Polynomial out = *this;
  for (int k = 0; k < i; ++k) out = out.directional_derivative(e);
  return out;
}

UnivariatePolynomial Polynomial::restrict_to_line(const Point& q, const Point& e) const {
  require_same_size(nvars_, q.size(), "restrict_to_line");
  require_same_size(nvars_, e.size(), "restrict_to_line");
  UnivariatePolynomial acc;
  for (const auto& [exps, c] : terms_) {
    UnivariatePolynomial term = UnivariatePolynomial::constant(c);
    for (int i = 0; i < nvars_; ++i) {
      if (exps[i] == 0) continue;
      const UnivariatePolynomial line({q[i], e[i]});
      for (int k = 0; k < exps[i]; ++k) term = term * line;
    }
    acc = acc + term;
  }
  return acc;
}

std::string Polynomial::str(const std::vector<std::string>* names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << "*" << (names ? (*names)[i] : "x" + std::to_string(i + 1));
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

Polynomial elementary_symmetric(int n, int k) {
  if (n < 1) throw std::invalid_argument("elementary_symmetric: n must be positive");
  if (k < 0 || k > n) {
    throw precondition_error("elementary_symmetric: need 0 <= k <= n, got k=" +
                             std::to_string(k) + ", n=" + std::to_string(n));
  }
  Polynomial out(n);
  std::vector<int> pick(k);
  Polynomial::Exponents e(n, 0);
  // enumerate k-subsets of {0..n-1}
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    std::fill(e.begin(), e.end(), 0);
    for (int i : pick) e[i] = 1;
    out += Polynomial::monomial(n, e, Rational(1));
    if (k == 0) break;
    int j = k - 1;
    while (j >= 0 && pick[j] == n - k + j) --j;
    if (j < 0) break;
    ++pick[j];
    for (int t = j + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }
  return out;
}

Polynomial product_of_forms(const std::vector<LinearForm>& forms) {
  if (forms.empty()) throw std::invalid_argument("product_of_forms: empty form list");
  const int n = forms.front().nvars();
  Polynomial out = Polynomial::constant(n, Rational(1));
  for (const auto& f : forms) {
    require_same_size(n, f.nvars(), "product_of_forms");
    out *= f.to_polynomial();
  }
  return out;
}

Polynomial polynomial_pow(const Polynomial& base, int exp) {
  if (exp < 0) throw std::invalid_argument("polynomial_pow: negative exponent");
  Polynomial acc = Polynomial::constant(base.nvars(), Rational(1));
  for (int k = 0; k < exp; ++k) acc *= base;
  return acc;
}

}  // namespace hyperpoly
