#include "qtoledo/toledo.hpp"

namespace qtoledo {

TangentVec ball_tangent(const Vec &a) { return TangentVec(Mat::column(a)); }

std::array<Vec, 4> standard_quadruple(std::size_t n) {
  if (n < 2) throw DimensionError("the standard quadruple needs n >= 2");
  const FieldElem i = FieldElem::i();
  return {unit_vector(n, 0), i * unit_vector(n, 0), unit_vector(n, 1), i * unit_vector(n, 1)};
}

FieldElem omega_b_squared_on_basis(std::size_t n) {
  const auto q = standard_quadruple(n);
  return kahler_square(ball_tangent(q[0]), ball_tangent(q[1]), ball_tangent(q[2]), ball_tangent(q[3]));
}

PullbackReport pullback_constant(const EmbeddingDiff &e) {
  const auto q = standard_quadruple(e.n());
  const TangentVec x = e(q[0]);
  const TangentVec y = e(q[1]);
  const TangentVec z = e(q[2]);
  const TangentVec w = e(q[3]);

  PullbackReport r;
  r.embedding = e.name();
  r.n = e.n();
  r.omega_value = omega4(x, y, z, w);
  r.omega0sq_value = kahler_square(x, y, z, w);
  r.ratio = r.omega_value / omega_b_squared_on_basis(e.n());
  return r;
}

CompositionInvariant composition_invariant(long degree, const Rational &vol_y, const std::optional<Rational> &vol_x) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  if (sgn(vol_y) <= 0) throw std::invalid_argument("vol(Y) must be positive");
  if (vol_x && sgn(*vol_x) <= 0) throw std::invalid_argument("vol(X) must be positive");
  CompositionInvariant out;
  out.value = Rational(degree) * vol_y / 16;
  if (vol_x) out.below_bound = out.value < *vol_x / 16;
  return out;
}

} // namespace qtoledo
