#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyperpoly/errors.hpp"
#include "hyperpoly/hyperbolicity.hpp"
#include "hyperpoly/pencil.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace hyperpoly;

namespace {

SymmetricPencil diagonal_pencil(int n) {
  SymmetricPencil p(n, n);
  for (int i = 0; i < n; ++i) p.mat(i).set(i, i, Rational(1));
  return p;
}

Polynomial laplace_pencil_det(const SymmetricPencil& pencil) {
  std::vector<std::vector<Polynomial>> m(pencil.size(),
                                         std::vector<Polynomial>(pencil.size(), Polynomial(pencil.nvars())));
  for (int i = 0; i < pencil.size(); ++i) {
    for (int j = 0; j < pencil.size(); ++j) m[i][j] = pencil.entry(i, j);
  }
  return oracle::laplace_det(m, Polynomial(pencil.nvars()));
}

std::vector<LinearForm> random_positive_forms(std::mt19937_64& rng, int n, int d,
                                              const Point& e) {
  std::vector<LinearForm> forms;
  while (static_cast<int>(forms.size()) < d) {
    std::vector<Rational> c(n);
    for (int i = 0; i < n; ++i) c[i] = oracle::rand_rational(rng, -4, 4, 2);
    LinearForm f(std::move(c));
    const Rational v = f.eval(e);
    if (v.is_zero()) continue;
    if (v.sign() < 0) f = f.scaled(Rational(-1));
    forms.push_back(std::move(f));
  }
  return forms;
}

RealizationMatrix random_realization(std::mt19937_64& rng, int k, int n) {
  std::vector<Rational> entries(static_cast<std::size_t>(k) * n);
  for (auto& v : entries) v = Rational(oracle::rand_int(rng, -3, 3));
  return RealizationMatrix(k, n, std::move(entries));
}

}  // namespace

TEST_CASE("pencil_eval") {
  SUBCASE("diagonal pencil") {
    const auto m = pencil_eval(diagonal_pencil(3),
                               Point({Rational(1), Rational(2), Rational(3)}));
    CHECK(m.at(0, 0) == Rational(1));
    CHECK(m.at(1, 1) == Rational(2));
    CHECK(m.at(2, 2) == Rational(3));
    CHECK(m.at(0, 1) == Rational(0));
  }
  SUBCASE("halfcube matrix at the direction") {
    const auto pencil =
        renegar_pencil(fixtures::halfcube_table_forms(), fixtures::halfcube_direction());
    const auto m = pencil_eval(pencil, fixtures::halfcube_direction());
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) CHECK(m.at(i, j) == (i == j ? Rational(2) : Rational(1)));
    }
  }
  SUBCASE("zero point gives the zero matrix") {
    const auto m = pencil_eval(diagonal_pencil(4), Point::zero(4));
    for (const auto& v : m.row_major()) CHECK(v.is_zero());
  }
  SUBCASE("length mismatch") {
    CHECK_THROWS_AS(pencil_eval(diagonal_pencil(3), Point::zero(2)), std::invalid_argument);
  }
}

TEST_CASE("pencil_det") {
  SUBCASE("diagonal pencil gives E_n") {
    CHECK(pencil_det(diagonal_pencil(4)) == elementary_symmetric(4, 4));
  }
  SUBCASE("scalar pencil") {
    SymmetricPencil p(1, 2);
    p.mat(0).set(0, 0, Rational(1));
    p.mat(0).set(1, 1, Rational(1));
    const auto x1 = Polynomial::variable(1, 0);
    CHECK(pencil_det(p) == x1 * x1);
  }
  SUBCASE("empty pencil has determinant 1") {
    CHECK(pencil_det(SymmetricPencil(3, 0)) == Polynomial::constant(3, Rational(1)));
  }
  SUBCASE("agrees with the Laplace oracle on random pencils") {
    std::mt19937_64 rng(101);
    for (int iter = 0; iter < 12; ++iter) {
      const int n = static_cast<int>(oracle::rand_int(rng, 1, 3));
      const int m = static_cast<int>(oracle::rand_int(rng, 1, 4));
      SymmetricPencil p(n, m);
      for (int k = 0; k < n; ++k) {
        for (int i = 0; i < m; ++i) {
          for (int j = i; j < m; ++j) p.mat(k).set(i, j, oracle::rand_rational(rng, -3, 3, 1));
        }
      }
      CHECK(pencil_det(p) == laplace_pencil_det(p));
    }
  }
  SUBCASE("block diagonal multiplies") {
    std::mt19937_64 rng(103);
    SymmetricPencil a(2, 2), b(2, 3);
    for (int k = 0; k < 2; ++k) {
      for (int i = 0; i < 2; ++i)
        for (int j = i; j < 2; ++j) a.mat(k).set(i, j, oracle::rand_rational(rng, -3, 3, 1));
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) b.mat(k).set(i, j, oracle::rand_rational(rng, -3, 3, 1));
    }
    CHECK(pencil_det(block_diag(a, b)) == pencil_det(a) * pencil_det(b));
  }
  SUBCASE("size cap") {
    CHECK_THROWS_AS(pencil_det(SymmetricPencil(2, 13)), precondition_error);
    CHECK_NOTHROW(pencil_det(SymmetricPencil(2, 13), 13));
  }
}

TEST_CASE("is_psd and is_pd") {
  SymmetricMatrix eye(3);
  for (int i = 0; i < 3; ++i) eye.set(i, i, Rational(1));
  CHECK(is_psd(eye));
  CHECK(is_pd(eye));

  const SymmetricMatrix off(2, {Rational(0), Rational(-2), Rational(-2), Rational(0)});
  CHECK_FALSE(is_psd(off));

  const SymmetricMatrix rank1(2, {Rational(1), Rational(1), Rational(1), Rational(1)});
  CHECK(is_psd(rank1));
  CHECK_FALSE(is_pd(rank1));

  CHECK(is_psd(SymmetricMatrix(0)));
  CHECK(is_pd(SymmetricMatrix(0)));

  SUBCASE("symmetry is validated") {
    CHECK_THROWS_AS(SymmetricMatrix(2, {Rational(0), Rational(1), Rational(2), Rational(0)}),
                    std::invalid_argument);
  }
  SUBCASE("char_poly sign convention vs line restriction") {
    // pencil with A(e) = Id at e = ones: restriction p(q + lambda e) equals
    // (-1)^d char_poly(A(q)) at -lambda
    std::mt19937_64 rng(107);
    SymmetricPencil p(2, 3);
    for (int i = 0; i < 3; ++i) p.mat(0).set(i, i, Rational(1));
    SymmetricMatrix s(3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) s.set(i, j, oracle::rand_rational(rng, -3, 3, 2));
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) p.mat(1).set(i, j, s.at(i, j));
    const Point e({Rational(1), Rational(0)});
    const auto det = pencil_det(p);
    const Point q({Rational(1, 2), Rational(1)});
    const auto u = det.restrict_to_line(q, e);
    const auto cp = char_poly(pencil_eval(p, q));
    REQUIRE(u.degree() == 3);
    REQUIRE(cp.degree() == 3);
    for (int k = 0; k <= 3; ++k) {
      const int flip = (3 - k) % 2 == 0 ? 1 : -1;  // u(L) = (-1)^d cp(-L)
      CHECK(u.coeff(k) == Rational(flip) * cp.coeff(k));
    }
  }
}

TEST_CASE("renegar_pencil") {
  SUBCASE("halfcube gives the reference 3x3 matrix") {
    const auto pencil =
        renegar_pencil(fixtures::halfcube_table_forms(), fixtures::halfcube_direction());
    REQUIRE(pencil.size() == 3);
    const auto expected = fixtures::halfcube_reference_matrix_coeffs();
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 4; ++k) {
          CHECK(pencil.mat(k).at(i, j) == Rational(expected[i][j][k]));
        }
      }
    }
  }
  SUBCASE("coordinate forms in three variables") {
    std::vector<LinearForm> coords;
    for (int i = 0; i < 3; ++i) {
      std::vector<Rational> c(3, Rational(0));
      c[i] = Rational(1);
      coords.push_back(LinearForm(std::move(c)));
    }
    const auto pencil = renegar_pencil(coords, Point::ones(3));
    REQUIRE(pencil.size() == 2);
    const auto x1 = Polynomial::variable(3, 0);
    const auto x2 = Polynomial::variable(3, 1);
    const auto x3 = Polynomial::variable(3, 2);
    CHECK(pencil.entry(0, 0) == x1 + x3);
    CHECK(pencil.entry(0, 1) == x3);
    CHECK(pencil.entry(1, 1) == x2 + x3);
    CHECK(pencil_det(pencil) == elementary_symmetric(3, 2));
  }
  SUBCASE("single form gives the empty pencil") {
    const auto pencil = renegar_pencil({LinearForm({Rational(2), Rational(0)})},
                                       Point({Rational(1), Rational(0)}));
    CHECK(pencil.size() == 0);
    CHECK(pencil_det(pencil) == Polynomial::constant(2, Rational(1)));
  }
  SUBCASE("non-interior direction") {
    CHECK_THROWS_AS(
        renegar_pencil(fixtures::halfcube_table_forms(),
                       Point({Rational(1), Rational(1), Rational(1), Rational(1)})),
        precondition_error);
    CHECK_THROWS_AS(renegar_pencil({}, Point::ones(2)), std::invalid_argument);
  }
}

TEST_CASE("verify_theorem1") {
  SUBCASE("halfcube, both orientations") {
    const auto a = verify_theorem1(fixtures::halfcube_table_forms(),
                                   fixtures::halfcube_direction());
    CHECK(a.equal);
    const auto b = verify_theorem1(fixtures::halfcube_even_forms(),
                                   fixtures::halfcube_direction());
    CHECK(b.equal);
  }
  SUBCASE("single form") {
    const auto r = verify_theorem1({LinearForm({Rational(3), Rational(1)})},
                                   Point({Rational(1), Rational(0)}));
    CHECK(r.equal);
    CHECK(r.determinant == Polynomial::constant(2, Rational(1)));
  }
  SUBCASE("random systems up to degree 8") {
    std::mt19937_64 rng(211);
    for (int iter = 0; iter < 8; ++iter) {
      const int n = static_cast<int>(oracle::rand_int(rng, 2, 5));
      const int d = static_cast<int>(oracle::rand_int(rng, 1, 8));
      const Point e = oracle::rand_point(rng, n, -8, 8, 8);
      std::vector<LinearForm> forms;
      try {
        forms = random_positive_forms(rng, n, d, e);
      } catch (...) {
        continue;
      }
      const auto r = verify_theorem1(forms, e);
      CHECK(r.equal);
      CHECK(*r.determinant.homogeneous_degree() == d - 1);
    }
  }
}

TEST_CASE("realization_pencil and Cauchy-Binet") {
  SUBCASE("standard corank-one realization") {
    // (Id | -1) for n = 3
    const RealizationMatrix L(2, 3,
                              {Rational(1), Rational(0), Rational(-1),
                               Rational(0), Rational(1), Rational(-1)});
    const auto rp = realization_pencil(L);
    CHECK(rp.bases == elementary_symmetric(3, 2));
    CHECK(pencil_det(rp.pencil) == rp.bases);
  }
  SUBCASE("single row") {
    const RealizationMatrix L(1, 2, {Rational(1), Rational(1)});
    const auto rp = realization_pencil(L);
    CHECK(rp.bases == Polynomial::variable(2, 0) + Polynomial::variable(2, 1));
  }
  SUBCASE("minors 1, 1, -1") {
    const RealizationMatrix L(2, 3,
                              {Rational(1), Rational(0), Rational(1),
                               Rational(0), Rational(1), Rational(1)});
    CHECK(L.column_minor({0, 1}) == Rational(1));
    CHECK(L.column_minor({0, 2}) == Rational(1));
    CHECK(L.column_minor({1, 2}) == Rational(-1));
    const auto rp = realization_pencil(L);
    CHECK(rp.bases == elementary_symmetric(3, 2));
  }
  SUBCASE("wide-but-short edge cases") {
    const RealizationMatrix tall(3, 2,
                                 {Rational(1), Rational(0), Rational(0), Rational(1),
                                  Rational(1), Rational(1)});
    const auto rp = realization_pencil(tall);  // k > n: bases = 0, det = 0
    CHECK(rp.bases.is_zero());
    CHECK(pencil_det(rp.pencil).is_zero());
    CHECK_THROWS_AS(realization_pencil(RealizationMatrix(0, 2, {})), precondition_error);
  }
  SUBCASE("identity on random integer matrices") {
    std::mt19937_64 rng(307);
    for (int iter = 0; iter < 25; ++iter) {
      const int k = static_cast<int>(oracle::rand_int(rng, 1, 4));
      const int n = static_cast<int>(oracle::rand_int(rng, k, 7));
      const auto L = random_realization(rng, k, n);
      const auto rp = realization_pencil(L);
      CHECK(pencil_det(rp.pencil) == rp.bases);
      // cross-check the bases polynomial against a direct minor enumeration
      // using the test-side Laplace determinant
      Polynomial expected(n);
      std::vector<int> pick(k);
      for (int i = 0; i < k; ++i) pick[i] = i;
      while (true) {
        std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub[i][j] = L.at(i, pick[j]);
        const Rational d = oracle::laplace_det(sub, Rational(0));
        if (!d.is_zero()) {
          Polynomial::Exponents e(n, 0);
          for (int c : pick) e[c] = 1;
          expected += Polynomial::monomial(n, e, d * d);
        }
        int j = k - 1;
        while (j >= 0 && pick[j] == n - k + j) --j;
        if (j < 0) break;
        ++pick[j];
        for (int t = j + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
      }
      CHECK(rp.bases == expected);
    }
  }
}

TEST_CASE("e2_arrowhead") {
  SUBCASE("n = 2 determinant by direct expansion") {
    const auto pencil = e2_arrowhead(2);
    REQUIRE(pencil.size() == 3);
    const auto det = pencil_det(pencil);
    CHECK(det == laplace_pencil_det(pencil));
    const auto e1 = elementary_symmetric(2, 1);
    const auto e2 = elementary_symmetric(2, 2);
    CHECK(det == Rational(2) * e1 * e2);
  }
  SUBCASE("corrected determinant identity up to n = 6") {
    for (int n = 2; n <= 6; ++n) {
      const auto det = pencil_det(e2_arrowhead(n));
      const auto e1 = elementary_symmetric(n, 1);
      // closed-form arrowhead determinant: E1^{n-1} (E1^2 - sum x_i^2)
      Polynomial sum_sq(n);
      for (int i = 0; i < n; ++i) {
        const auto xi = Polynomial::variable(n, i);
        sum_sq += xi * xi;
      }
      CHECK(det == polynomial_pow(e1, n - 1) * (e1 * e1 - sum_sq));
      CHECK(det == Rational(2) * polynomial_pow(e1, n - 1) * elementary_symmetric(n, 2));
    }
  }
  SUBCASE("positive definite at ones") {
    for (int n = 2; n <= 6; ++n) {
      CHECK(is_pd(pencil_eval(e2_arrowhead(n), Point::ones(n))));
    }
  }
  SUBCASE("size-n variant misses the factorization by E1^{n-2} x_n^2") {
    for (int n = 2; n <= 5; ++n) {
      const auto det = pencil_det(e2_arrowhead(n, /*literal_paper_matrix=*/true));
      const auto e1 = elementary_symmetric(n, 1);
      const auto target = Rational(2) * polynomial_pow(e1, n - 2) * elementary_symmetric(n, 2);
      const auto xn = Polynomial::variable(n, n - 1);
      CHECK(det - target == polynomial_pow(e1, n - 2) * xn * xn);
      CHECK(det != target);
    }
  }
  SUBCASE("membership relaxation for the E2 cone") {
    std::mt19937_64 rng(401);
    for (int n = 2; n <= 5; ++n) {
      const HyperbolicContext ctx(elementary_symmetric(n, 2), Point::ones(n));
      const auto pencil = e2_arrowhead(n);
      int hits = 0;
      while (hits < 25) {
        const Point x = oracle::rand_point(rng, n);
        Rational e1_val(0);
        for (int i = 0; i < n; ++i) e1_val += x[i];
        if (e1_val.sign() < 0) continue;
        if (!in_cone(ctx, x, ConeMode::Closed)) continue;
        ++hits;
        CHECK(is_psd(pencil_eval(pencil, x)));
      }
    }
    // a point outside the E2 cone fails the matrix inequality
    const Point outside({Rational(2), Rational(-1), Rational(0)});
    CHECK_FALSE(is_psd(pencil_eval(e2_arrowhead(3), outside)));
  }
  SUBCASE("n below 2") {
    CHECK_THROWS_AS(e2_arrowhead(1), precondition_error);
  }
}

TEST_CASE("halfcube pencil agrees with the first derivative cone") {
  const auto forms = fixtures::halfcube_table_forms();
  const auto e = fixtures::halfcube_direction();
  const HyperbolicContext ctx(product_of_forms(forms), e);
  const auto pencil = renegar_pencil(forms, e);
  std::mt19937_64 rng(509);
  int agree_true = 0;
  for (int iter = 0; iter < 120; ++iter) {
    Point x = oracle::rand_point(rng, 4);
    if (iter % 3 == 0) {
      // project onto a facet hyperplane: one eigenvalue becomes zero
      const int f = static_cast<int>(oracle::rand_int(rng, 0, 3));
      const Rational v = forms[f].eval(x);
      for (int i = 0; i < 4; ++i) x[i] -= v * e[i];
    }
    const bool via_pencil = is_psd(pencil_eval(pencil, x));
    const bool via_cone = in_derivative_cone(ctx, x, 1);
    CHECK(via_pencil == via_cone);
    if (via_pencil) ++agree_true;
  }
  CHECK(agree_true > 0);
}
