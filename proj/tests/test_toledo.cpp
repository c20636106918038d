#include "support.hpp"

#include "qtoledo/toledo.hpp"

#include <doctest.h>

using namespace qtoledo;
using namespace qtoledo::testing;

TEST_SUITE("toledo") {

TEST_CASE("pullback constants") {
  const auto r = [](EmbeddingKind k, std::size_t n) { return pullback_constant(make_embedding(k, n)); };
  CHECK(r(EmbeddingKind::rho, 2).ratio == q(1, 4));
  CHECK(r(EmbeddingKind::sym_square, 2).ratio == q(11, 64));
  CHECK(r(EmbeddingKind::sym_square, 2).omega_value == q(11, 4));
  CHECK(r(EmbeddingKind::totally_real, 2).ratio.is_zero());
  CHECK(r(EmbeddingKind::phi, 2).ratio == q(1, 16));
  CHECK(r(EmbeddingKind::phi, 2).omega_value == FieldElem(1));
  for (std::size_t n : {3, 4, 5}) {
    CHECK(r(EmbeddingKind::rho, n).ratio == q(1, 4));
    CHECK(r(EmbeddingKind::phi, n).ratio == q(1, 16));
    CHECK(r(EmbeddingKind::totally_real, n).ratio.is_zero());
  }
  CHECK(omega_b_squared_on_basis(3) == FieldElem(16));
  CHECK_THROWS_AS(standard_quadruple(1), DimensionError);
}

TEST_CASE("omega pulled back through rho is Omega0^2 / 16") {
  Sampler gen(501);
  for (std::size_t n : {2, 3, 4}) {
    for (int t = 0; t < 20; ++t) {
      const Vec a = gen.field_vec(n), b = gen.field_vec(n), c = gen.field_vec(n), d = gen.field_vec(n);
      const TangentVec x = rho_diff(a), y = rho_diff(b), z = rho_diff(c), w = rho_diff(d);
      CHECK(FieldElem(16) * omega4(x, y, z, w) == kahler_square(x, y, z, w));
    }
  }
}

TEST_CASE("pullbacks scale by the determinant of a basis change") {
  Sampler gen(502);
  const auto basis = standard_quadruple(2);
  for (int t = 0; t < 20; ++t) {
    std::array<std::array<Rational, 4>, 4> m;
    for (auto &row : m)
      for (auto &e : row) e = gen.rational();
    std::array<Vec, 4> mixed;
    for (int r = 0; r < 4; ++r) {
      Vec v(2);
      for (int k = 0; k < 4; ++k) v = v + FieldElem(m[r][k]) * basis[k];
      mixed[r] = v;
    }
    const auto img = [&](int r) { return sym_square_tangent(mixed[r]); };
    CHECK(omega4(img(0), img(1), img(2), img(3)) == FieldElem(det4(m)) * q(11, 4));
    const auto ball = [&](int r) { return ball_tangent(mixed[r]); };
    CHECK(kahler_square(ball(0), ball(1), ball(2), ball(3)) == FieldElem(det4(m)) * FieldElem(16));
  }
}

TEST_CASE("composition invariant") {
  CHECK(composition_invariant(1, 16).value == 1);
  CHECK(composition_invariant(3, 8).value == make_rational(3, 2));
  CHECK(composition_invariant(2, 3, Rational(10)).below_bound == true);
  CHECK(composition_invariant(4, 3, Rational(10)).below_bound == false);
  CHECK_FALSE(composition_invariant(1, 1).below_bound.has_value());
  CHECK_THROWS(composition_invariant(0, 1));
  CHECK_THROWS(composition_invariant(1, -1));
}

}
