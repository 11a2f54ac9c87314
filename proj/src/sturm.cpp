#include "hyperpoly/sturm.hpp"

#include <stdexcept>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

namespace {

// Sign of p just right of t: the first nonvanishing derivative decides.
// Exact stand-in for evaluating at t + epsilon.
int sign_at_right(const UnivariatePolynomial& p, const Rational& t) {
  UnivariatePolynomial q = p;
  while (!q.is_zero()) {
    const int s = q.eval(t).sign();
    if (s != 0) return s;
    q = q.derivative();
  }
  return 0;
}

int sign_at(const UnivariatePolynomial& p, const Bound& t) {
  if (p.is_zero()) return 0;
  switch (t.kind) {
    case Bound::Kind::Finite:
      return sign_at_right(p, t.value);
    case Bound::Kind::PosInf:
      return p.leading().sign();
    case Bound::Kind::NegInf:
      return p.degree() % 2 == 0 ? p.leading().sign() : -p.leading().sign();
  }
  return 0;
}

bool bound_less(const Bound& a, const Bound& b) {
  if (a.kind == Bound::Kind::NegInf) return b.kind != Bound::Kind::NegInf;
  if (a.kind == Bound::Kind::PosInf) return false;
  if (b.kind == Bound::Kind::PosInf) return true;
  if (b.kind == Bound::Kind::NegInf) return false;
  return a.value < b.value;
}

}  // namespace

SturmChain SturmChain::build(const UnivariatePolynomial& u) {
  if (u.is_zero()) throw precondition_error("sturm: zero polynomial");
  SturmChain chain;
  chain.seq.push_back(u.primitive_scaled());
  UnivariatePolynomial d = u.derivative();
  if (d.is_zero()) return chain;
  chain.seq.push_back(d.primitive_scaled());
  while (true) {
    const auto& a = chain.seq[chain.seq.size() - 2];
    const auto& b = chain.seq[chain.seq.size() - 1];
    auto rem = divmod(a, b).remainder;
    if (rem.is_zero()) break;
    chain.seq.push_back((-rem).primitive_scaled());
  }
  return chain;
}

int SturmChain::variations_at(const Bound& t) const {
  int variations = 0;
  int prev = 0;
  for (const auto& p : seq) {
    const int s = sign_at(p, t);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

int sturm_count(const UnivariatePolynomial& u, const Bound& a, const Bound& b) {
  if (u.is_zero()) throw precondition_error("sturm_count: zero polynomial");
  if (!bound_less(a, b)) throw precondition_error("sturm_count: empty interval (a >= b)");
  const SturmChain chain = SturmChain::build(u);
  return chain.variations_at(a) - chain.variations_at(b);
}

UnivariatePolynomial squarefree_part(const UnivariatePolynomial& u) {
  if (u.is_zero()) throw precondition_error("squarefree_part: zero polynomial");
  if (u.degree() == 0) return u;
  const UnivariatePolynomial g = gcd(u, u.derivative());
  return u.div_exact(g);
}

bool is_real_rooted(const UnivariatePolynomial& u) {
  if (u.is_zero()) throw precondition_error("is_real_rooted: zero polynomial");
  if (u.degree() == 0) return true;
  const UnivariatePolynomial s = squarefree_part(u);
  return sturm_count(s, Bound::neg_inf(), Bound::pos_inf()) == s.degree();
}

int mult_at_zero(const UnivariatePolynomial& u) {
  if (u.is_zero()) throw precondition_error("mult_at_zero: zero polynomial");
  int k = 0;
  while (u.coeff(k).is_zero()) ++k;
  return k;
}

bool all_roots_nonneg(const UnivariatePolynomial& u) {
  if (u.is_zero()) throw precondition_error("all_roots_nonneg: zero polynomial");
  if (!is_real_rooted(u)) {
    throw precondition_error("all_roots_nonneg: polynomial is not real-rooted");
  }
  // Strip the root at 0 exactly, then ask for no roots in (-inf, 0]. The
  // stripped polynomial is nonzero at 0, so the closed upper endpoint is
  // equivalent to the open interval (-inf, 0).
  const UnivariatePolynomial v = u.shift_down(mult_at_zero(u));
  if (v.degree() == 0) return true;
  return sturm_count(v, Bound::neg_inf(), Bound::at(Rational(0))) == 0;
}

}  // namespace hyperpoly
