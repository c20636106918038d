#include "support.hpp"

#include "qtoledo/toledo.hpp"

#include <doctest.h>

using namespace qtoledo;
using namespace qtoledo::testing;

TEST_SUITE("linalg") {

TEST_CASE("small matrix facts") {
  CHECK(Mat::identity(3).trace() == FieldElem(3));
  CHECK(Mat::column({I, R2}).adjoint() == Mat{{-I, R2}});
  // X, Y of the ball basis as su(2,1) matrices
  const Mat x = ball_tangent({1, 0}).full_matrix();
  const Mat y = ball_tangent({I, 0}).full_matrix();
  const Mat xy = x * y;
  CHECK(xy == Mat::diagonal({-I, 0, I}));
  CHECK(bracket(x, y) == Mat::diagonal({-2 * I, 0, 2 * I}));
  CHECK_THROWS_AS(Mat(2, 3) * Mat(2, 3), DimensionError);
}

TEST_CASE("hermitian forms and signatures") {
  CHECK(herm_form(unit_vector(3, 2), unit_vector(3, 2), kSigV) == FieldElem(-1));
  CHECK(herm_form(unit_vector(3, 0), unit_vector(3, 2), kSigV).is_zero());
  CHECK(herm_form(unit_vector(6, 4), unit_vector(6, 4), kSigW) == FieldElem(-1));
  Sampler gen(201);
  for (int t = 0; t < 200; ++t) {
    const Vec u = gen.field_vec(6), v = gen.field_vec(6);
    const FieldElem s = gen.field();
    CHECK(herm_form(u, v, kSigW) == herm_form(v, u, kSigW).conj());
    CHECK(herm_form(s * u, v, kSigW) == s * herm_form(u, v, kSigW));
    CHECK(herm_form(u, s * v, kSigW) == s.conj() * herm_form(u, v, kSigW));
    CHECK(herm_form(u, u, kSigW).is_real());
  }
}

TEST_CASE("definiteness of the named subspaces") {
  CHECK(Subspace(3, {unit_vector(3, 2)}).perp(kSigV) == Subspace(3, {unit_vector(3, 0), unit_vector(3, 1)}));
  CHECK(Subspace(6, {unit_vector(6, 4), unit_vector(6, 5)}).definiteness(kSigW) == Definiteness::negative);
  CHECK(Subspace(6, {unit_vector(6, 0), unit_vector(6, 1), unit_vector(6, 3)}).definiteness(kSigW) ==
        Definiteness::positive);
  CHECK(Subspace(6, {unit_vector(6, 0) + unit_vector(6, 4)}).definiteness(kSigW) == Definiteness::degenerate);
  CHECK(Subspace(6, {unit_vector(6, 0), unit_vector(6, 4)}).definiteness(kSigW) == Definiteness::indefinite);
  // (e1 + e5, e1 - e5) has zero diagonal Gram entries but is indefinite
  CHECK(Subspace(6, {unit_vector(6, 0) + unit_vector(6, 4), unit_vector(6, 0) - unit_vector(6, 4)})
            .definiteness(kSigW) == Definiteness::indefinite);
}

TEST_CASE("rank and null space") {
  Sampler gen(202);
  for (int t = 0; t < 100; ++t) {
    const Mat m = gen.field_mat(3, 5);
    const auto ns = null_space(m);
    CHECK(rank(m) + ns.size() == 5);
    for (const auto &v : ns) CHECK(is_zero(m * v));
  }
}

TEST_CASE("perp is an involution and dimensions add up") {
  Sampler gen(203);
  for (int t = 0; t < 50; ++t) {
    const std::size_t k = static_cast<std::size_t>(gen.integer(0, 4));
    std::vector<Vec> span;
    for (std::size_t r = 0; r < k; ++r) span.push_back(gen.field_vec(6));
    const Subspace s(6, span);
    const Subspace p = s.perp(kSigW);
    CHECK(s.dim() + p.dim() == 6);
    CHECK(p.perp(kSigW) == s);
    for (const auto &u : s.basis())
      for (const auto &v : p.basis()) CHECK(herm_form(u, v, kSigW).is_zero());
  }
}

TEST_CASE("subspaces are basis independent") {
  Sampler gen(204);
  for (int t = 0; t < 50; ++t) {
    const Vec u = gen.field_vec(6), v = gen.field_vec(6), w = gen.field_vec(6);
    const FieldElem a = gen.field(), b = gen.field();
    const Subspace s(6, {u, v});
    const Subspace s2(6, {u + a * v, v, b * u});
    CHECK(s == s2);
    CHECK(s.contains(a * u + b * v));
    CHECK(s.residue(w) == s.residue(w + a * u - b * v));
    CHECK(s.definiteness(kSigW) == s2.definiteness(kSigW));
    CHECK(s.sum(Subspace(6, {w})).contains(w));
  }
}

TEST_CASE("definiteness matches the sign of 2x2 principal minors") {
  Sampler gen(205);
  for (int t = 0; t < 50; ++t) {
    const Vec u = gen.field_vec(6), v = gen.field_vec(6);
    const Mat g = gram_matrix({u, v}, kSigW);
    const FieldElem det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
    const int d = real_sign(det), a = real_sign(g(0, 0));
    if (rank(Mat::from_columns({u, v}, 6)) < 2) continue;
    Definiteness expect = Definiteness::indefinite;
    if (d == 0)
      expect = Definiteness::degenerate;
    else if (d > 0)
      expect = a > 0 ? Definiteness::positive : Definiteness::negative;
    CHECK(Subspace(6, {u, v}).definiteness(kSigW) == expect);
  }
}

}
