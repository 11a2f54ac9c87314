#pragma once

#include <cstdint>
#include <optional>

#include "hyperpoly/polynomial.hpp"
#include "hyperpoly/sturm.hpp"

namespace hyperpoly {

// A homogeneous polynomial together with a direction at which it is positive.
// Construction checks homogeneity and p(e) > 0; it does NOT prove
// hyperbolicity (see check_hyperbolic), so membership queries diagnose a
// bad context via not_hyperbolic_error when a restriction fails to be
// real-rooted.
class HyperbolicContext {
 public:
  HyperbolicContext(Polynomial p, Point e);

  const Polynomial& p() const { return p_; }
  const Point& e() const { return e_; }
  int degree() const { return degree_; }

 private:
  Polynomial p_;
  Point e_;
  int degree_;
};

struct HyperbolicityVerdict {
  bool hyperbolic;               // evidence when true, proof of failure when false
  int samples;                   // number of restrictions certified real-rooted
  std::optional<Point> witness;  // first sampled q with a non-real-rooted restriction
  int witness_index = -1;        // sample index of the witness, -1 if none
  std::uint64_t seed;
};

// Samples `samples` points q with coordinates on the rational grid
// {k/64 : -64 <= k <= 64}, drawn from a seeded deterministic generator, and
// certifies each restriction lambda -> p(q + lambda e) real-rooted via Sturm
// sequences. A negative verdict is exact; a positive verdict is sampling
// evidence only. jobs > 1 splits the certification work across threads
// without changing the result (smallest failing index wins).
HyperbolicityVerdict check_hyperbolic(const Polynomial& p, const Point& e, int samples,
                                      std::uint64_t seed, int jobs = 1);

// lambda -> p(x - lambda e); its roots are the hyperbolic eigenvalues of x.
UnivariatePolynomial eigenvalue_poly(const HyperbolicContext& ctx, const Point& x);

enum class ConeMode { Closed, Open };

// Membership of x in the hyperbolicity cone: all hyperbolic eigenvalues
// >= 0 (Closed) or > 0 (Open). Raises not_hyperbolic_error if the
// restriction at x is not real-rooted.
bool in_cone(const HyperbolicContext& ctx, const Point& x, ConeMode mode = ConeMode::Closed);

// Membership of x in the closed hyperbolicity cone of the i-th polar of p.
// pre: 0 <= i < degree; i = 0 is closed in_cone.
bool in_derivative_cone(const HyperbolicContext& ctx, const Point& x, int i);

}  // namespace hyperpoly
