#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperpoly/hyperbolicity.hpp"
#include "hyperpoly/pencil.hpp"

namespace hyperpoly {

// Set function rk : 2^[n] -> Z>=0 as a dense table indexed by subset
// bitmask (bit i = element i+1 of the ground set).
struct RankFunction {
  int n = 0;
  std::vector<int> ranks;  // length 2^n, bitmask order

  RankFunction() = default;
  RankFunction(int n_, std::vector<int> ranks_);

  int rank(std::uint32_t mask) const { return ranks[mask]; }
  std::uint32_t full_mask() const { return (std::uint32_t(1) << n) - 1; }
  bool operator==(const RankFunction&) const = default;
};

struct UniformSpec {
  int k = 0;
  int n = 0;
};

struct GurvitsOptions {
  // Orthant containment is certified on basis vectors (sufficient by
  // convexity); set check_all_subsets to also certify every characteristic
  // vector directly.
  bool check_all_subsets = false;
  int max_ground = 16;
};

// Gurvits' set function rk(I) = d - mult_0(p(chi_I + lambda e)).
// pre: the nonnegative orthant is contained in the closed cone of ctx,
// verified on the standard basis vectors; a violation names the vector.
RankFunction gurvits_rank(const HyperbolicContext& ctx, const GurvitsOptions& opts = {});

struct PolymatroidReport {
  bool polymatroid = false;
  bool matroid = false;
  // First pair (I, J) in bitmask order violating nonnegativity,
  // monotonicity, or submodularity; absent when polymatroid holds.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> violation;
};

// Exhaustive check of 0 <= rk(I) <= rk(I u J) and
// rk(I u J) <= rk(I) + rk(J) - rk(I n J) over all subset pairs; the
// matroid flag additionally requires rk(I) <= |I|.
PolymatroidReport is_polymatroid(const RankFunction& rk);

// rk(I) == min(k, |I|) for every I.
bool equals_uniform(const RankFunction& rk, const UniformSpec& spec);

// Every maximal (k x k) minor of L lies in {+1, -1}.
bool is_unimodular_realization(const RealizationMatrix& L, const UniformSpec& spec);

struct UnimodularSearchResult {
  std::optional<RealizationMatrix> witness;
  std::uint64_t searched = 0;  // candidates enumerated; 0 for closed forms
};

// Searches for a unimodular realization of U_{k,n}. The cases
// k in {0, 1, n-1, n} are answered in closed form; otherwise candidates
// (Id | L') with L' a k x (n-k) sign matrix are enumerated exhaustively
// (the 1 x 1 minors of L' are maximal minors of (Id | L'), which pins the
// entries to +-1) and accepted iff every square minor of L' of every size
// is +-1. The first accepted candidate in enumeration order is returned.
// pre: k(n-k) <= max_bits.
UnimodularSearchResult search_unimodular(const UniformSpec& spec, int max_bits = 20,
                                         int jobs = 1);

}  // namespace hyperpoly
