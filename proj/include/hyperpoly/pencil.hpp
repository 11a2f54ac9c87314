#pragma once

#include <vector>

#include "hyperpoly/polynomial.hpp"
#include "hyperpoly/univariate.hpp"

namespace hyperpoly {

// Dense symmetric matrix over Q.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int size);
  // Row-major entries; throws if the data is not symmetric.
  SymmetricMatrix(int size, std::vector<Rational> row_major);

  int size() const { return size_; }
  const Rational& at(int i, int j) const { return entries_[i * size_ + j]; }
  void set(int i, int j, const Rational& v);  // mirrors into (j, i)
  const std::vector<Rational>& row_major() const { return entries_; }
  bool operator==(const SymmetricMatrix&) const = default;

 private:
  int size_;
  std::vector<Rational> entries_;
};

// Tuple (A_1, ..., A_n) of symmetric m x m matrices defining the linear
// matrix map A(x) = sum_i x_i A_i.
class SymmetricPencil {
 public:
  SymmetricPencil(int nvars, int size);
  SymmetricPencil(int nvars, std::vector<SymmetricMatrix> mats);

  int nvars() const { return nvars_; }
  int size() const { return size_; }
  const SymmetricMatrix& mat(int i) const { return mats_[i]; }
  SymmetricMatrix& mat(int i) { return mats_[i]; }
  // Entry (i, j) as the linear polynomial sum_k mats[k](i,j) x_k.
  Polynomial entry(int i, int j) const;
  bool operator==(const SymmetricPencil&) const = default;

 private:
  int nvars_;
  int size_;
  std::vector<SymmetricMatrix> mats_;
};

// Exact A(x) at a point.
SymmetricMatrix pencil_eval(const SymmetricPencil& pencil, const Point& x);

// Exact symbolic determinant of A(x) as a polynomial, via cofactor expansion
// memoized over column subsets (2^m subproblems). The empty pencil has
// determinant 1. Sizes above max_size are refused.
Polynomial pencil_det(const SymmetricPencil& pencil, int max_size = 12);

// Characteristic polynomial det(lambda I - M), exact.
UnivariatePolynomial char_poly(const SymmetricMatrix& m);

// Exact positive semidefiniteness through root signs of the characteristic
// polynomial (symmetric matrices are real-rooted).
bool is_psd(const SymmetricMatrix& m);
// Strict variant: positive definite.
bool is_pd(const SymmetricMatrix& m);

// Direct sum of two pencils over the same variables.
SymmetricPencil block_diag(const SymmetricPencil& a, const SymmetricPencil& b);

// Forms rescaled so that each takes value 1 at e. Throws precondition_error
// when some form is nonpositive at e (e not interior).
std::vector<LinearForm> normalize_forms(const std::vector<LinearForm>& forms, const Point& e);

// The (d-1) x (d-1) pencil M(x) with M_ii = l_i(x) + l_d(x) and
// M_ij = l_d(x) off the diagonal, built from the forms normalized at e.
// Its determinant equals the first polar of l_1 ... l_d. The last form
// plays the distinguished role; any choice gives the same cone. d = 1
// yields the empty pencil.
SymmetricPencil renegar_pencil(const std::vector<LinearForm>& forms, const Point& e);

struct Theorem1Report {
  bool equal;
  Polynomial determinant;  // det of the renegar pencil
  Polynomial polar;        // first polar of the normalized product
};

// Checks det(renegar_pencil(forms, e)) == polar(product of normalized
// forms, e, 1) as exact polynomials.
Theorem1Report verify_theorem1(const std::vector<LinearForm>& forms, const Point& e);

// General k x n rational matrix; columns are the vectors of a (candidate)
// realization.
class RealizationMatrix {
 public:
  RealizationMatrix(int rows, int cols, std::vector<Rational> row_major);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& at(int i, int j) const { return entries_[i * cols_ + j]; }
  const std::vector<Rational>& row_major() const { return entries_; }
  bool operator==(const RealizationMatrix&) const = default;

  // Determinant of the square submatrix using all rows and the given
  // columns (must be rows() many, strictly increasing).
  Rational column_minor(const std::vector<int>& columns) const;

 private:
  int rows_;
  int cols_;
  std::vector<Rational> entries_;
};

struct RealizationPencil {
  SymmetricPencil pencil;  // A_i = (column i)(column i)^T, size k
  Polynomial bases;        // sum over |I| = k of det(L_I)^2 x^I
};

// The Cauchy-Binet pair for L: pencil of rank-one matrices and the
// multiaffine basis-generating polynomial. Contract:
// pencil_det(pencil) == bases. pre: k >= 1; k > n gives bases = 0.
RealizationPencil realization_pencil(const RealizationMatrix& L);

// Arrowhead pencil certifying a determinantal representation for E_2:
// size n+1, arrow entries x_1..x_n, determinant exactly 2 E_1^{n-1} E_2.
// With literal_paper_matrix the size-n variant (arrow x_1..x_{n-1}) is
// built instead; its determinant exceeds 2 E_1^{n-2} E_2 by
// E_1^{n-2} x_n^2. pre: n >= 2.
SymmetricPencil e2_arrowhead(int n, bool literal_paper_matrix = false);

}  // namespace hyperpoly
