#include "hyperpoly/matroid.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

RankFunction::RankFunction(int n_, std::vector<int> ranks_) : n(n_), ranks(std::move(ranks_)) {
  if (n < 0 || n > 30) throw std::invalid_argument("RankFunction: bad ground-set size");
  if (ranks.size() != (std::size_t(1) << n)) {
    throw std::invalid_argument("RankFunction: table must have exactly 2^n entries");
  }
}

RankFunction gurvits_rank(const HyperbolicContext& ctx, const GurvitsOptions& opts) {
  const int n = ctx.p().nvars();
  if (n > opts.max_ground) {
    throw precondition_error("gurvits_rank: ground set " + std::to_string(n) +
                             " exceeds the configured limit " + std::to_string(opts.max_ground));
  }
  for (int i = 0; i < n; ++i) {
    if (!in_cone(ctx, Point::unit(n, i), ConeMode::Closed)) {
      throw precondition_error("gurvits_rank: orthant not contained in the cone "
                               "(basis vector " + std::to_string(i + 1) + " is outside)");
    }
  }
  const int d = ctx.degree();
  const std::uint32_t total = std::uint32_t(1) << n;
  std::vector<int> ranks(total, 0);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    const Point chi = Point::characteristic(n, mask);
    if (opts.check_all_subsets && !in_cone(ctx, chi, ConeMode::Closed)) {
      throw precondition_error("gurvits_rank: orthant not contained in the cone "
                               "(characteristic vector of mask " + std::to_string(mask) +
                               " is outside)");
    }
    const UnivariatePolynomial u = ctx.p().restrict_to_line(chi, ctx.e());
    ranks[mask] = d - mult_at_zero(u);
  }
  return RankFunction(n, std::move(ranks));
}

PolymatroidReport is_polymatroid(const RankFunction& rk) {
  PolymatroidReport report;
  const std::uint32_t total = std::uint32_t(1) << rk.n;
  for (std::uint32_t i = 0; i < total; ++i) {
    for (std::uint32_t j = 0; j < total; ++j) {
      const int ri = rk.ranks[i];
      const int rj = rk.ranks[j];
      const int runion = rk.ranks[i | j];
      const int rinter = rk.ranks[i & j];
      if (ri < 0 || ri > runion || runion > ri + rj - rinter) {
        report.violation = {i, j};
        return report;
      }
    }
  }
  report.polymatroid = true;
  report.matroid = true;
  for (std::uint32_t i = 0; i < total; ++i) {
    if (rk.ranks[i] > std::popcount(i)) {
      report.matroid = false;
      break;
    }
  }
  return report;
}

bool equals_uniform(const RankFunction& rk, const UniformSpec& spec) {
  if (rk.n != spec.n) {
    throw std::invalid_argument("equals_uniform: ground-set size mismatch");
  }
  const std::uint32_t total = std::uint32_t(1) << rk.n;
  for (std::uint32_t i = 0; i < total; ++i) {
    if (rk.ranks[i] != std::min(spec.k, std::popcount(i))) return false;
  }
  return true;
}

bool is_unimodular_realization(const RealizationMatrix& L, const UniformSpec& spec) {
  if (L.rows() != spec.k || L.cols() != spec.n) {
    throw std::invalid_argument("is_unimodular_realization: shape mismatch with U_{k,n}");
  }
  const int k = spec.k;
  const int n = spec.n;
  if (k == 0) return true;  // the empty minor is 1
  if (k > n) return false;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    const Rational d = L.column_minor(pick);
    if (!(d == Rational(1) || d == Rational(-1))) return false;
    int j = k - 1;
    while (j >= 0 && pick[j] == n - k + j) --j;
    if (j < 0) break;
    ++pick[j];
    for (int t = j + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }
  return true;
}

namespace {

RealizationMatrix ones_row(int n) {
  return RealizationMatrix(1, n, std::vector<Rational>(n, Rational(1)));
}

RealizationMatrix identity_matrix(int n) {
  std::vector<Rational> e(static_cast<std::size_t>(n) * n, Rational(0));
  for (int i = 0; i < n; ++i) e[i * n + i] = Rational(1);
  return RealizationMatrix(n, n, std::move(e));
}

// (Id | -1): the standard unimodular realization of U_{n-1, n}.
RealizationMatrix corank_one_realization(int n) {
  const int k = n - 1;
  std::vector<Rational> e(static_cast<std::size_t>(k) * n, Rational(0));
  for (int i = 0; i < k; ++i) {
    e[i * n + i] = Rational(1);
    e[i * n + (n - 1)] = Rational(-1);
  }
  return RealizationMatrix(k, n, std::move(e));
}

// Sign matrix candidate c: entry at row-major position t is +1 when bit t
// of c is clear, -1 when set.
int sign_entry(std::uint64_t candidate, int pos) {
  return (candidate >> pos & 1u) ? -1 : 1;
}

// All square minors of every size of the k x m sign matrix must be +-1.
// Minors are integers; sizes here never exceed min(k, m) <= 4 for the
// default search budget, so a plain Laplace expansion is fine.
long minor_det(const std::vector<int>& m_entries, int mcols, const std::vector<int>& rows,
               const std::vector<int>& cols) {
  const int s = static_cast<int>(rows.size());
  if (s == 1) return m_entries[rows[0] * mcols + cols[0]];
  long acc = 0;
  std::vector<int> subrows(rows.begin() + 1, rows.end());
  std::vector<int> subcols;
  subcols.reserve(s - 1);
  for (int j = 0; j < s; ++j) {
    subcols.clear();
    for (int t = 0; t < s; ++t) {
      if (t != j) subcols.push_back(cols[t]);
    }
    const long cofactor = minor_det(m_entries, mcols, subrows, subcols);
    const long e = m_entries[rows[0] * mcols + cols[j]];
    acc += (j % 2 == 0 ? 1 : -1) * e * cofactor;
  }
  return acc;
}

bool all_minors_unimodular(const std::vector<int>& entries, int k, int m) {
  // size-1 minors are the entries themselves, +-1 by construction
  std::vector<int> rows, cols;
  for (int s = 2; s <= std::min(k, m); ++s) {
    rows.assign(s, 0);
    for (int i = 0; i < s; ++i) rows[i] = i;
    while (true) {
      cols.assign(s, 0);
      for (int i = 0; i < s; ++i) cols[i] = i;
      while (true) {
        const long d = minor_det(entries, m, rows, cols);
        if (d != 1 && d != -1) return false;
        int j = s - 1;
        while (j >= 0 && cols[j] == m - s + j) --j;
        if (j < 0) break;
        ++cols[j];
        for (int t = j + 1; t < s; ++t) cols[t] = cols[t - 1] + 1;
      }
      int j = s - 1;
      while (j >= 0 && rows[j] == k - s + j) --j;
      if (j < 0) break;
      ++rows[j];
      for (int t = j + 1; t < s; ++t) rows[t] = rows[t - 1] + 1;
    }
  }
  return true;
}

RealizationMatrix assemble_id_block(int k, int n, std::uint64_t candidate) {
  const int m = n - k;
  std::vector<Rational> e(static_cast<std::size_t>(k) * n, Rational(0));
  for (int i = 0; i < k; ++i) {
    e[i * n + i] = Rational(1);
    for (int j = 0; j < m; ++j) {
      e[i * n + k + j] = Rational(sign_entry(candidate, i * m + j));
    }
  }
  return RealizationMatrix(k, n, std::move(e));
}

}  // namespace

UnimodularSearchResult search_unimodular(const UniformSpec& spec, int max_bits, int jobs) {
  const int k = spec.k;
  const int n = spec.n;
  if (k < 0 || n < 0 || k > n) {
    throw std::invalid_argument("search_unimodular: need 0 <= k <= n");
  }
  if (k == 0) return {RealizationMatrix(0, n, {}), 0};
  if (k == 1) return {ones_row(n), 0};
  if (k == n) return {identity_matrix(n), 0};
  if (k == n - 1) return {corank_one_realization(n), 0};

  const int bits = k * (n - k);
  if (bits > max_bits) {
    throw precondition_error("search_unimodular: 2^" + std::to_string(bits) +
                             " candidates exceed the configured limit 2^" +
                             std::to_string(max_bits));
  }
  const std::uint64_t total = std::uint64_t(1) << bits;
  const int m = n - k;
  const int workers = std::max(1, jobs);

  std::atomic<std::uint64_t> first_hit{total};
  auto scan = [&](int begin, int step) {
    std::vector<int> entries(static_cast<std::size_t>(k) * m);
    for (std::uint64_t c = begin; c < total; c += static_cast<std::uint64_t>(step)) {
      if (c > first_hit.load(std::memory_order_relaxed)) continue;
      for (int t = 0; t < k * m; ++t) entries[t] = sign_entry(c, t);
      if (all_minors_unimodular(entries, k, m)) {
        std::uint64_t cur = first_hit.load(std::memory_order_relaxed);
        while (c < cur && !first_hit.compare_exchange_weak(cur, c)) {
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

  const std::uint64_t hit = first_hit.load();
  if (hit < total) return {assemble_id_block(k, n, hit), total};
  return {std::nullopt, total};
}

}  // namespace hyperpoly
