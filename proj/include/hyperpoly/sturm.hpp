#pragma once

#include <vector>

#include "hyperpoly/rational.hpp"
#include "hyperpoly/univariate.hpp"

namespace hyperpoly {

// Interval endpoint for root counting: -inf, a finite rational, or +inf.
struct Bound {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  Rational value;

  static Bound neg_inf() { return {Kind::NegInf, Rational(0)}; }
  static Bound pos_inf() { return {Kind::PosInf, Rational(0)}; }
  static Bound at(Rational v) { return {Kind::Finite, std::move(v)}; }
};

// Canonical Sturm chain of u: (u, u', -rem(...), ...), each element rescaled
// to primitive integer coefficients by a positive rational, which leaves all
// sign patterns intact. Degrees strictly decrease and the last element is
// nonzero.
struct SturmChain {
  std::vector<UnivariatePolynomial> seq;

  static SturmChain build(const UnivariatePolynomial& u);  // pre: u nonzero

  // Sign variations using right-limit signs at finite points (the first
  // nonvanishing derivative decides, an exact surrogate for t + epsilon).
  // With this convention V(a) - V(b) counts distinct roots in the
  // half-open interval (a, b], endpoints allowed to be roots.
  int variations_at(const Bound& t) const;
};

// Number of distinct real roots of u in (a, b]. pre: u nonzero, a < b.
int sturm_count(const UnivariatePolynomial& u, const Bound& a, const Bound& b);

// True iff every complex root of u is real (counting multiplicity),
// certified on the squarefree part. pre: u nonzero.
bool is_real_rooted(const UnivariatePolynomial& u);

// Order of vanishing at the origin: smallest k with a nonzero coefficient.
// pre: u nonzero.
int mult_at_zero(const UnivariatePolynomial& u);

// True iff every real root of u is >= 0. pre: u nonzero and real-rooted;
// a non-real-rooted input raises precondition_error rather than answering.
bool all_roots_nonneg(const UnivariatePolynomial& u);

// u divided by gcd(u, u'): same roots, all simple.
UnivariatePolynomial squarefree_part(const UnivariatePolynomial& u);

}  // namespace hyperpoly
