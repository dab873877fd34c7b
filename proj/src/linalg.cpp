#include "qfrob/linalg.hpp"

namespace qfrob {

Matrix<RationalFunction> invert_matrix(const Matrix<RationalFunction>& m) {
  RationalFunction det = determinant(m);
  if (det.is_zero()) throw DegenerateMetric("matrix is degenerate: determinant vanishes identically");
  Matrix<RationalFunction> inv = adjugate(m);
  RationalFunction inv_det = RationalFunction(1) / det;
  for (auto& e : inv.data()) e *= inv_det;
  return inv;
}

Matrix<Rational> invert_matrix(const Matrix<Rational>& m) {
  Rational det = determinant(m);
  if (sgn(det) == 0) throw DegenerateMetric("constant matrix is singular");
  Matrix<Rational> inv = adjugate(m);
  for (auto& e : inv.data()) e /= det;
  return inv;
}

Matrix<RationalFunction> to_rational_functions(const Matrix<Polynomial>& m) {
  return m.map([](const Polynomial& p) { return RationalFunction(p); });
}

Matrix<RationalFunction> to_rational_functions(const Matrix<Rational>& m) {
  return m.map([](const Rational& c) { return RationalFunction(c); });
}

}  // namespace qfrob
