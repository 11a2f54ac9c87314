#include "hyperpoly/pencil.hpp"

#include <bit>
#include <optional>
#include <stdexcept>

#include "hyperpoly/errors.hpp"
#include "hyperpoly/sturm.hpp"

namespace hyperpoly {

SymmetricMatrix::SymmetricMatrix(int size) : size_(size) {
  if (size < 0) throw std::invalid_argument("SymmetricMatrix: negative size");
  entries_.assign(static_cast<std::size_t>(size) * size, Rational(0));
}

SymmetricMatrix::SymmetricMatrix(int size, std::vector<Rational> row_major) : size_(size) {
  if (size < 0) throw std::invalid_argument("SymmetricMatrix: negative size");
  if (row_major.size() != static_cast<std::size_t>(size) * size) {
    throw std::invalid_argument("SymmetricMatrix: expected " + std::to_string(size * size) +
                                " entries, got " + std::to_string(row_major.size()));
  }
  entries_ = std::move(row_major);
  for (int i = 0; i < size_; ++i) {
    for (int j = i + 1; j < size_; ++j) {
      if (at(i, j) != at(j, i)) {
        throw std::invalid_argument("SymmetricMatrix: entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") != entry (" + std::to_string(j) +
                                    "," + std::to_string(i) + ")");
      }
    }
  }
}

void SymmetricMatrix::set(int i, int j, const Rational& v) {
  entries_[i * size_ + j] = v;
  entries_[j * size_ + i] = v;
}

SymmetricPencil::SymmetricPencil(int nvars, int size) : nvars_(nvars), size_(size) {
  if (nvars < 1) throw std::invalid_argument("SymmetricPencil: nvars must be positive");
  if (size < 0) throw std::invalid_argument("SymmetricPencil: negative size");
  mats_.assign(nvars, SymmetricMatrix(size));
}

SymmetricPencil::SymmetricPencil(int nvars, std::vector<SymmetricMatrix> mats)
    : nvars_(nvars), mats_(std::move(mats)) {
  if (nvars < 1) throw std::invalid_argument("SymmetricPencil: nvars must be positive");
  if (mats_.size() != static_cast<std::size_t>(nvars)) {
    throw std::invalid_argument("SymmetricPencil: matrix count must equal nvars");
  }
  size_ = mats_.empty() ? 0 : mats_.front().size();
  for (const auto& m : mats_) {
    if (m.size() != size_) throw std::invalid_argument("SymmetricPencil: inconsistent sizes");
  }
}

Polynomial SymmetricPencil::entry(int i, int j) const {
  Polynomial p(nvars_);
  for (int k = 0; k < nvars_; ++k) {
    const Rational& c = mats_[k].at(i, j);
    if (!c.is_zero()) p += c * Polynomial::variable(nvars_, k);
  }
  return p;
}

SymmetricMatrix pencil_eval(const SymmetricPencil& pencil, const Point& x) {
  if (x.size() != pencil.nvars()) {
    throw std::invalid_argument("pencil_eval: point length mismatch");
  }
  SymmetricMatrix out(pencil.size());
  for (int i = 0; i < pencil.size(); ++i) {
    for (int j = i; j < pencil.size(); ++j) {
      Rational acc(0);
      for (int k = 0; k < pencil.nvars(); ++k) {
        acc += x[k] * pencil.mat(k).at(i, j);
      }
      out.set(i, j, acc);
    }
  }
  return out;
}

namespace {

// det of the matrix whose (i, j) entry is entry(i, j), expanding rows over
// column subsets with memoization; 2^m subproblems in an arbitrary
// commutative ring.
template <class Ring, class EntryFn>
Ring subset_determinant(int m, const EntryFn& entry, Ring zero, Ring one) {
  if (m == 0) return one;
  std::vector<std::optional<Ring>> memo(std::size_t(1) << m);
  memo[0] = std::move(one);
  auto solve = [&](auto&& self, unsigned mask) -> const Ring& {
    auto& slot = memo[mask];
    if (slot) return *slot;
    const int row = std::popcount(mask) - 1;
    Ring acc = zero;
    int pos = 0;
    for (int j = 0; j < m; ++j) {
      if (!(mask >> j & 1u)) continue;
      const Ring& sub = self(self, mask & ~(1u << j));
      Ring term = entry(row, j) * sub;
      if ((row + pos) % 2 == 0) {
        acc = acc + term;
      } else {
        acc = acc - term;
      }
      ++pos;
    }
    slot = std::move(acc);
    return *slot;
  };
  return solve(solve, (1u << m) - 1u);
}

}  // namespace

Polynomial pencil_det(const SymmetricPencil& pencil, int max_size) {
  const int m = pencil.size();
  if (m > max_size) {
    throw precondition_error("pencil_det: size " + std::to_string(m) +
                             " exceeds the configured cap " + std::to_string(max_size));
  }
  std::vector<Polynomial> entries;
  entries.reserve(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) entries.push_back(pencil.entry(i, j));
  }
  auto entry = [&](int i, int j) -> const Polynomial& { return entries[i * m + j]; };
  return subset_determinant<Polynomial>(m, entry, Polynomial(pencil.nvars()),
                                        Polynomial::constant(pencil.nvars(), Rational(1)));
}

UnivariatePolynomial char_poly(const SymmetricMatrix& m) {
  const int n = m.size();
  auto entry = [&](int i, int j) {
    if (i == j) return UnivariatePolynomial({-m.at(i, j), Rational(1)});
    return UnivariatePolynomial::constant(-m.at(i, j));
  };
  return subset_determinant<UnivariatePolynomial>(n, entry, UnivariatePolynomial(),
                                                  UnivariatePolynomial::constant(Rational(1)));
}

bool is_psd(const SymmetricMatrix& m) {
  if (m.size() == 0) return true;
  return all_roots_nonneg(char_poly(m));
}

bool is_pd(const SymmetricMatrix& m) {
  if (m.size() == 0) return true;
  const UnivariatePolynomial cp = char_poly(m);
  return mult_at_zero(cp) == 0 && all_roots_nonneg(cp);
}

SymmetricPencil block_diag(const SymmetricPencil& a, const SymmetricPencil& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("block_diag: nvars mismatch");
  const int m = a.size() + b.size();
  SymmetricPencil out(a.nvars(), m);
  for (int k = 0; k < a.nvars(); ++k) {
    for (int i = 0; i < a.size(); ++i) {
      for (int j = i; j < a.size(); ++j) out.mat(k).set(i, j, a.mat(k).at(i, j));
    }
    for (int i = 0; i < b.size(); ++i) {
      for (int j = i; j < b.size(); ++j) {
        out.mat(k).set(a.size() + i, a.size() + j, b.mat(k).at(i, j));
      }
    }
  }
  return out;
}

std::vector<LinearForm> normalize_forms(const std::vector<LinearForm>& forms, const Point& e) {
  if (forms.empty()) throw std::invalid_argument("normalize_forms: empty form list");
  std::vector<LinearForm> out;
  out.reserve(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const Rational v = forms[i].eval(e);
    if (v.sign() <= 0) {
      throw precondition_error("form " + std::to_string(i + 1) +
                               " is not positive at the direction (value " + v.str() +
                               "); e must lie in the interior");
    }
    out.push_back(forms[i].scaled(v.inverse()));
  }
  return out;
}

SymmetricPencil renegar_pencil(const std::vector<LinearForm>& forms, const Point& e) {
  const std::vector<LinearForm> nf = normalize_forms(forms, e);
  const int n = nf.front().nvars();
  const int d = static_cast<int>(nf.size());
  SymmetricPencil out(n, d - 1);
  const LinearForm& last = nf.back();
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < d - 1; ++i) {
      for (int j = i; j < d - 1; ++j) {
        Rational v = last.coeffs[k];
        if (i == j) v += nf[i].coeffs[k];
        out.mat(k).set(i, j, v);
      }
    }
  }
  return out;
}

Theorem1Report verify_theorem1(const std::vector<LinearForm>& forms, const Point& e) {
  const std::vector<LinearForm> nf = normalize_forms(forms, e);
  const Polynomial det = pencil_det(renegar_pencil(forms, e),
                                    std::max(12, static_cast<int>(forms.size())));
  const Polynomial pol = product_of_forms(nf).polar(e, 1);
  return {det == pol, det, pol};
}

RealizationMatrix::RealizationMatrix(int rows, int cols, std::vector<Rational> row_major)
    : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("RealizationMatrix: negative shape");
  if (row_major.size() != static_cast<std::size_t>(rows) * cols) {
    throw std::invalid_argument("RealizationMatrix: expected " + std::to_string(rows * cols) +
                                " entries, got " + std::to_string(row_major.size()));
  }
  entries_ = std::move(row_major);
}

Rational RealizationMatrix::column_minor(const std::vector<int>& columns) const {
  if (static_cast<int>(columns.size()) != rows_) {
    throw std::invalid_argument("column_minor: need exactly rows() columns");
  }
  // Fraction-free enough at these sizes: plain Gaussian elimination over Q.
  const int k = rows_;
  std::vector<Rational> a(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) a[i * k + j] = at(i, columns[j]);
  }
  Rational det(1);
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    for (int r = col; r < k; ++r) {
      if (!a[r * k + col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      for (int j = 0; j < k; ++j) std::swap(a[pivot * k + j], a[col * k + j]);
      det = -det;
    }
    const Rational p = a[col * k + col];
    det *= p;
    const Rational inv = p.inverse();
    for (int r = col + 1; r < k; ++r) {
      const Rational f = a[r * k + col] * inv;
      if (f.is_zero()) continue;
      for (int j = col; j < k; ++j) a[r * k + j] -= f * a[col * k + j];
    }
  }
  return det;
}

RealizationPencil realization_pencil(const RealizationMatrix& L) {
  const int k = L.rows();
  const int n = L.cols();
  if (k < 1) throw precondition_error("realization_pencil: k must be at least 1");
  if (n < 1) throw std::invalid_argument("realization_pencil: no columns");
  SymmetricPencil pencil(n, k);
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < k; ++i) {
      for (int j = i; j < k; ++j) {
        pencil.mat(c).set(i, j, L.at(i, c) * L.at(j, c));
      }
    }
  }
  Polynomial bases(n);
  if (k <= n) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      const Rational d = L.column_minor(pick);
      if (!d.is_zero()) {
        Polynomial::Exponents e(n, 0);
        for (int c : pick) e[c] = 1;
        bases += Polynomial::monomial(n, e, d * d);
      }
      int j = k - 1;
      while (j >= 0 && pick[j] == n - k + j) --j;
      if (j < 0) break;
      ++pick[j];
      for (int t = j + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  return {std::move(pencil), std::move(bases)};
}

SymmetricPencil e2_arrowhead(int n, bool literal_paper_matrix) {
  if (n < 2) throw precondition_error("e2_arrowhead: n must be at least 2");
  const int m = literal_paper_matrix ? n : n + 1;
  const int arrow = m - 1;  // number of arrow entries x_1..x_arrow
  SymmetricPencil out(n, m);
  for (int k = 0; k < n; ++k) {
    // E_1 on the whole diagonal
    for (int i = 0; i < m; ++i) out.mat(k).set(i, i, Rational(1));
    // arrow column/row: entry (0, i) = x_i
    if (k < arrow) out.mat(k).set(0, k + 1, Rational(1));
  }
  // the (0,0) diagonal already holds E_1 from the loop above
  return out;
}

}  // namespace hyperpoly
