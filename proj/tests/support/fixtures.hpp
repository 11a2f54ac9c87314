#pragma once

#include <vector>

#include "hyperpoly/polynomial.hpp"

namespace fixtures {

using hyperpoly::LinearForm;
using hyperpoly::Point;
using hyperpoly::Polynomial;
using hyperpoly::Rational;

// Variables are (t, x, y, z) at indices 0..3.

// Facet forms of the halfcube-cone variant whose slice {t = 1} is the
// convex hull of the cube vertices with an odd number of -1 coordinates.
// This is the orientation that generates the reference 3x3 matrix below.
inline std::vector<LinearForm> halfcube_table_forms() {
  return {
      LinearForm({Rational(1), Rational(-1), Rational(1), Rational(1)}),
      LinearForm({Rational(1), Rational(1), Rational(-1), Rational(1)}),
      LinearForm({Rational(1), Rational(1), Rational(1), Rational(-1)}),
      LinearForm({Rational(1), Rational(-1), Rational(-1), Rational(-1)}),
  };
}

// Facet forms of the halfcube with even-parity vertices (the mirror image
// z -> -z of the variant above); its first polar is the classical Cayley
// cubic with the +2xyz sign.
inline std::vector<LinearForm> halfcube_even_forms() {
  return {
      LinearForm({Rational(1), Rational(1), Rational(1), Rational(1)}),
      LinearForm({Rational(1), Rational(1), Rational(-1), Rational(-1)}),
      LinearForm({Rational(1), Rational(-1), Rational(1), Rational(-1)}),
      LinearForm({Rational(1), Rational(-1), Rational(-1), Rational(1)}),
  };
}

inline Point halfcube_direction() {
  return Point({Rational(1), Rational(0), Rational(0), Rational(0)});
}

// t^3 - t x^2 - t y^2 - t z^2 + sign * 2 x y z
inline Polynomial cayley_cubic(int sign) {
  Polynomial p(4);
  p += Polynomial::monomial(4, {3, 0, 0, 0}, Rational(1));
  p += Polynomial::monomial(4, {1, 2, 0, 0}, Rational(-1));
  p += Polynomial::monomial(4, {1, 0, 2, 0}, Rational(-1));
  p += Polynomial::monomial(4, {1, 0, 0, 2}, Rational(-1));
  p += Polynomial::monomial(4, {0, 1, 1, 1}, Rational(2 * sign));
  return p;
}

// Reference 3x3 matrix of the table-forms halfcube: diagonal
// (2t-2x, 2t-2y, 2t-2z), off-diagonal t-x-y-z, as a pencil over (t,x,y,z).
inline std::vector<std::vector<std::vector<long>>> halfcube_reference_matrix_coeffs() {
  // entry (i,j) -> coefficients of (t, x, y, z)
  const std::vector<long> diag_t_x = {2, -2, 0, 0};
  const std::vector<long> diag_t_y = {2, 0, -2, 0};
  const std::vector<long> diag_t_z = {2, 0, 0, -2};
  const std::vector<long> off = {1, -1, -1, -1};
  return {
      {diag_t_x, off, off},
      {off, diag_t_y, off},
      {off, off, diag_t_z},
  };
}

}  // namespace fixtures
