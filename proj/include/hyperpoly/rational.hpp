#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace hyperpoly {

// Exact rational scalar, always in lowest terms with positive denominator.
// Thin value wrapper over GMP's mpq_class; canonical form is enforced on
// every construction path, so equality is plain value equality.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                 // NOLINT: implicit by design
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  // Accepts "num" or "num/den" with optional leading sign on num and a
  // positive integer den. Rejects everything else, including "1/0".
  static Rational parse(const std::string& s);

  const mpq_class& raw() const { return v_; }
  static Rational from_raw(mpq_class v) {
    Rational r;
    r.v_ = std::move(v);
    r.v_.canonicalize();
    return r;
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  // Canonical string: "n" when the denominator is 1, else "n/d".
  std::string str() const { return v_.get_str(); }
  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }
  double to_double() const { return v_.get_d(); }

  Rational operator-() const { return from_raw(-v_); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational inverse() const {
    if (is_zero()) throw std::invalid_argument("Rational: division by zero");
    return from_raw(1 / v_);
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  static Rational pow(const Rational& base, int exp);

 private:
  mpq_class v_;
};

}  // namespace hyperpoly
