#include "hyperpoly/hyperbolicity.hpp"

#include <atomic>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

HyperbolicContext::HyperbolicContext(Polynomial p, Point e) : p_(std::move(p)), e_(std::move(e)) {
  if (p_.nvars() != e_.size()) {
    throw std::invalid_argument("HyperbolicContext: direction length mismatch");
  }
  const auto d = p_.homogeneous_degree();
  if (!d) throw precondition_error("HyperbolicContext: polynomial is not homogeneous");
  degree_ = *d;
  if (p_.eval(e_).sign() <= 0) {
    throw precondition_error("HyperbolicContext: p(e) must be positive");
  }
}

namespace {

// Deterministic sample points, coordinates k/64 with k uniform in [-64, 64].
// mt19937_64 output is pinned by the standard, so the stream is identical
// across platforms for a fixed seed.
std::vector<Point> grid_samples(int nvars, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  pts.reserve(count);
  for (int s = 0; s < count; ++s) {
    Point q = Point::zero(nvars);
    for (int i = 0; i < nvars; ++i) {
      const long k = static_cast<long>(rng() % 129u) - 64;
      q[i] = Rational(k, 64);
    }
    pts.push_back(std::move(q));
  }
  return pts;
}

}  // namespace

HyperbolicityVerdict check_hyperbolic(const Polynomial& p, const Point& e, int samples,
                                      std::uint64_t seed, int jobs) {
  if (samples < 1) throw std::invalid_argument("check_hyperbolic: samples must be positive");
  HyperbolicContext ctx(p, e);  // validates homogeneity and p(e) > 0
  const std::vector<Point> pts = grid_samples(p.nvars(), samples, seed);

  std::atomic<int> first_fail{samples};
  const int workers = std::max(1, jobs);
  auto scan = [&](int begin, int step) {
    for (int s = begin; s < samples; s += step) {
      if (s > first_fail.load(std::memory_order_relaxed)) continue;
      const auto u = p.restrict_to_line(pts[s], e);
      if (!is_real_rooted(u)) {
        int cur = first_fail.load(std::memory_order_relaxed);
        while (s < cur && !first_fail.compare_exchange_weak(cur, s)) {
        }
      }
    }
  };
  if (workers == 1) {
    scan(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w, workers);
    for (auto& t : pool) t.join();
  }

  const int fail = first_fail.load();
  if (fail < samples) {
    return {false, fail, pts[fail], fail, seed};
  }
  return {true, samples, std::nullopt, -1, seed};
}

UnivariatePolynomial eigenvalue_poly(const HyperbolicContext& ctx, const Point& x) {
  if (x.size() != ctx.p().nvars()) {
    throw std::invalid_argument("eigenvalue_poly: point length mismatch");
  }
  return ctx.p().restrict_to_line(x, -ctx.e());
}

bool in_cone(const HyperbolicContext& ctx, const Point& x, ConeMode mode) {
  const UnivariatePolynomial u = eigenvalue_poly(ctx, x);
  // deg u = deg p always: the leading coefficient is (-1)^d p(e) != 0.
  if (!is_real_rooted(u)) {
    throw not_hyperbolic_error(
        "in_cone: restriction at " + x.str() +
        " is not real-rooted; the context is not a hyperbolic pair");
  }
  if (mode == ConeMode::Open && mult_at_zero(u) != 0) return false;
  return all_roots_nonneg(u);
}

bool in_derivative_cone(const HyperbolicContext& ctx, const Point& x, int i) {
  if (i < 0 || i >= ctx.degree()) {
    throw precondition_error("in_derivative_cone: need 0 <= i < degree, got i=" +
                             std::to_string(i) + ", degree=" + std::to_string(ctx.degree()));
  }
  if (i == 0) return in_cone(ctx, x, ConeMode::Closed);
  HyperbolicContext derived(ctx.p().polar(ctx.e(), i), ctx.e());
  return in_cone(derived, x, ConeMode::Closed);
}

}  // namespace hyperpoly
