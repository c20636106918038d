#include "support.hpp"

#include <doctest.h>

using namespace qtoledo;
using namespace qtoledo::testing;

namespace {

Mat unit_matrix(std::size_t n, std::size_t r, std::size_t c) {
  Mat m(n, n);
  m(r, c) = 1;
  return m;
}

} // namespace

TEST_SUITE("lifting") {

TEST_CASE("grading masks are the positive ad(H)-eigenspaces") {
  for (const auto &h : {twistor_grading(), u3u1u2_grading()}) {
    const GradedMask mask = grading_mask(h);
    Vec d;
    for (const auto &x : h) d.emplace_back(x);
    const Mat hm = Mat::diagonal(d);
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t c = 0; c < 6; ++c) {
        const Mat e = unit_matrix(6, r, c);
        const FieldElem eig = FieldElem(h[r] - h[c]);
        REQUIRE(bracket(hm, e) == eig * e);
        CHECK(mask.allowed(r, c) == (real_sign(eig) > 0));
      }
  }
  const GradedMask none = grading_mask(std::vector<Rational>(6, Rational(0)));
  for (const auto &row : none.allow)
    for (bool b : row) CHECK_FALSE(b);
  // twistor: rows E1..E4 x column E6, row E5 x columns E1..E4 and E6
  const GradedMask tw = grading_mask(twistor_grading());
  std::size_t count = 0;
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) count += tw.allowed(r, c) ? 1 : 0;
  CHECK(count == 9);
  CHECK(tw.allowed(4, 5));
  CHECK(tw.allowed(0, 5));
  CHECK(tw.allowed(4, 0));
  CHECK_FALSE(tw.allowed(0, 4));
}

TEST_CASE("b+ vectors") {
  Sampler gen(601);
  for (int t = 0; t < 50; ++t) {
    const Vec a = gen.gaussian_vec(2);
    CHECK(bplus_from_p(a) == bplus_vector(a));
    CHECK(sym_square_bplus_image(a) == sym_square_leibniz(bplus_vector(a)));
  }
}

TEST_CASE("twistor obstruction") {
  const auto v10 = twistor_nonlift_check({1, 0});
  CHECK_FALSE(v10.member);
  CHECK(positions(v10) == predicted_twistor_positions({1, 0}));
  const auto v01 = twistor_nonlift_check({0, 1});
  CHECK_FALSE(v01.member);
  CHECK(positions(v01) == predicted_twistor_positions({0, 1}));
  CHECK(twistor_nonlift_check({0, 0}).member);
  CHECK(position_name(0, 4) == "(E1,E5)");

  Sampler gen(602);
  for (int t = 0; t < 100; ++t) {
    const Vec a = gen.nonzero_gaussian_vec(2);
    const auto v = twistor_nonlift_check(a);
    CHECK_FALSE(v.member);
    CHECK(positions(v) == predicted_twistor_positions(a));
    // the entries are the displayed ones, all scaled by sqrt2
    for (const auto &x : v.violations) {
      if (x.row == 0) CHECK(x.value == R2 * a[0]);
      if (x.row == 3) CHECK(x.value == a[1]);
      if (x.row == 5) CHECK(x.value == R2 * a[1]);
    }
  }
}

TEST_CASE("holomorphy for diag(1,1,-3,1,0,0)") {
  CHECK(holomorphy_check_u3u1u2({1, 0}).member);
  CHECK(holomorphy_check_u3u1u2({0, 1}).member);
  CHECK(holomorphy_check_u3u1u2({0, 0}).member);
  Sampler gen(603);
  for (int t = 0; t < 100; ++t) {
    const Vec a = gen.gaussian_vec(2);
    const Mat s = sym_square_bplus_image(a);
    const auto mask = grading_mask(u3u1u2_grading());
    bool inside = true;
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t c = 0; c < 6; ++c)
        if (!mask.allowed(r, c) && !s(r, c).is_zero()) inside = false;
    CHECK(inside);
    CHECK(holomorphy_check_u3u1u2(a).member);
    // the conjugate direction is never holomorphic
    if (!is_zero(a)) CHECK_FALSE(mask_violations(s.adjoint(), mask.allow).empty());
  }
}

TEST_CASE("period triple") {
  const auto e3 = period_triple({0, 0, 1});
  CHECK(e3.sym_perp == Subspace(6, {unit_vector(6, 0), unit_vector(6, 1), unit_vector(6, 3)}));
  CHECK(e3.line_sq == Subspace(6, {unit_vector(6, 2)}));
  CHECK(e3.mixed == Subspace(6, {unit_vector(6, 4), unit_vector(6, 5)}));

  // v = e3 + e1/2: L^perp = <(2,0,1), (0,1,0)>
  const auto t = period_triple({q(1, 2), 0, 1});
  const auto v = [](Rational a, Rational b, Rational c, Rational d, Rational e5, Rational f6) {
    return Vec{FieldElem(a), FieldElem(b), FieldElem(c), R2 * FieldElem(d), R2 * FieldElem(e5), R2 * FieldElem(f6)};
  };
  CHECK(t.sym_perp == Subspace(6, {v(4, 0, 1, 0, 2, 0), v(0, 1, 0, 0, 0, 0), v(0, 0, 0, 1, 0, make_rational(1, 2))}));
  CHECK(t.line_sq == Subspace(6, {v(make_rational(1, 4), 0, 1, 0, make_rational(1, 2), 0)}));
  CHECK(t.mixed == Subspace(6, {v(1, 0, 1, 0, make_rational(5, 4), 0), v(0, 0, 0, make_rational(1, 4), 0,
                                                                            make_rational(1, 2))}));
  CHECK(t.sym_perp.definiteness(kSigW) == Definiteness::positive);
  CHECK(t.line_sq.definiteness(kSigW) == Definiteness::positive);
  CHECK(t.mixed.definiteness(kSigW) == Definiteness::negative);

  CHECK_THROWS_AS(period_triple({1, 0, 0}), PreconditionError);
  CHECK_THROWS_AS(period_triple({1, 0, 1}), PreconditionError);

  Sampler gen(604);
  for (int k = 0; k < 30; ++k) {
    const Vec l = gen.negative_line();
    const auto p = period_triple(l);
    CHECK(p.sym_perp.dim() == 3);
    CHECK(p.line_sq.dim() == 1);
    CHECK(p.mixed.dim() == 2);
    CHECK(p.sym_perp.sum(p.line_sq).sum(p.mixed).dim() == 6);
    CHECK(p.sym_perp.definiteness(kSigW) == Definiteness::positive);
    CHECK(p.line_sq.definiteness(kSigW) == Definiteness::positive);
    CHECK(p.mixed.definiteness(kSigW) == Definiteness::negative);
    CHECK(p.mixed.perp(kSigW) == p.sym_perp.sum(p.line_sq));
    // the triple depends only on the line
    CHECK(period_triple(FieldElem(gen.nonzero_rational()) * I * l).mixed == p.mixed);
  }
}

TEST_CASE("horizontality of the lifted curves") {
  const auto r1 = horizontality_check({0, 0, 1}, {1, 0, 0});
  CHECK(r1.horizontal);
  CHECK(Subspace(6, {unit_vector(6, 4)}).contains(r1.line_sq_residues.at(0)));
  CHECK_FALSE(is_zero(r1.line_sq_residues.at(0)));
  const auto r2 = horizontality_check({0, 0, 1}, {0, 1, 0});
  CHECK(r2.horizontal);
  CHECK(Subspace(6, {unit_vector(6, 5)}).contains(r2.line_sq_residues.at(0)));
  CHECK_FALSE(is_zero(r2.line_sq_residues.at(0)));
  const auto r0 = horizontality_check({0, 0, 1}, {0, 0, 0});
  CHECK(r0.horizontal);
  for (const auto &v : r0.line_sq_residues) CHECK(is_zero(v));
  for (const auto &v : r0.sym_perp_residues) CHECK(is_zero(v));
  CHECK_THROWS_AS(horizontality_check({0, 0, 1}, {0, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(horizontality_check({1, 0, 0}, {0, 1, 0}), PreconditionError);

  Sampler gen(605);
  for (int t = 0; t < 30; ++t) {
    const Vec v0 = gen.negative_line();
    const Vec w = gen.orthogonal_to(v0);
    REQUIRE(herm_form(v0, w, kSigV).is_zero());
    const auto r = horizontality_check(v0, w);
    CHECK(r.horizontal);
    // the condition is not vacuous: S^2 L^perp is not in the L^2 target
    const auto p = period_triple(v0);
    const Subspace line_target = p.mixed.sum(p.line_sq);
    for (const auto &b : p.sym_perp.basis()) CHECK_FALSE(line_target.contains(b));
    // the L^2 residue is 2 v0.w modulo L^2
    CHECK(r.line_sq_residues.at(0) == p.line_sq.residue(FieldElem(2) * sym_product(v0, w)));
  }
}

TEST_CASE("curve residues depend only on the class of the derivative") {
  Sampler gen(606);
  for (int t = 0; t < 30; ++t) {
    const Vec u = gen.field_vec(6), v = gen.field_vec(6), du = gen.field_vec(6), dv = gen.field_vec(6);
    const FieldElem a = gen.field(), b = gen.field();
    const auto base = curve_residues({make_jet_vec(u, du), make_jet_vec(v, dv)});
    const auto moved = curve_residues({make_jet_vec(u, du + a * u + b * v), make_jet_vec(v, dv - b * u)});
    CHECK(base == moved);
  }
}

TEST_CASE("first-order perpendicular family") {
  Sampler gen(607);
  for (int t = 0; t < 30; ++t) {
    const Vec v0 = gen.negative_line();
    const Vec w = gen.orthogonal_to(v0);
    const auto perp = Subspace(3, {v0}).perp(kSigV).basis();
    const auto fam = first_order_perp_family(v0, w, perp);
    const JetVec line = make_jet_vec(v0, w);
    for (const auto &u : fam) {
      // h(u(t), v0 + t w) = 0 to first order
      Jet h;
      for (std::size_t k = 0; k < 3; ++k)
        h = h + Jet(kSigV.sign_at(k)) * u[k] * line[k].conj();
      CHECK(h.val.is_zero());
      CHECK(h.deriv.is_zero());
    }
  }
}

TEST_CASE("linearity classification") {
  const auto kinds = {EmbeddingKind::rho, EmbeddingKind::totally_real, EmbeddingKind::phi, EmbeddingKind::sym_square};
  for (auto kind : kinds) {
    const auto e = make_embedding(kind, 2);
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t r = 0; r < 4; ++r) CHECK(classify_component(e, c, r) == classify_component_jacobian(e, c, r));
  }
  const auto rho = classify_linearity(make_embedding(EmbeddingKind::rho, 2));
  CHECK(rho.columns == std::vector<Linearity>{Linearity::linear, Linearity::linear});
  CHECK_FALSE(rho.twistor_condition);
  const auto tr = classify_linearity(make_embedding(EmbeddingKind::totally_real, 2));
  CHECK(tr.columns == std::vector<Linearity>{Linearity::linear, Linearity::conjugate_linear});
  CHECK_FALSE(tr.twistor_condition);
  const auto sq = make_embedding(EmbeddingKind::sym_square, 2);
  CHECK(classify_component(sq, 0, 0) == Linearity::linear);
  CHECK(classify_component(sq, 0, 2) == Linearity::conjugate_linear);
  CHECK(classify_column(sq, 0) == Linearity::neither);
  CHECK_FALSE(classify_linearity(sq).twistor_condition);

  // a map with U1 conjugate-linear and U2 linear meets the condition
  const auto synthetic = EmbeddingDiff::sample("synthetic", 2, [](const Vec &x) {
    return TangentVec(Mat{{x[0].conj(), x[0]}, {x[1].conj(), x[1]}, {0, 0}, {0, 0}});
  });
  const auto st = classify_linearity(synthetic);
  CHECK(st.columns == std::vector<Linearity>{Linearity::conjugate_linear, Linearity::linear});
  CHECK(st.twistor_condition);
  CHECK(combine({Linearity::zero, Linearity::linear}) == Linearity::linear);
  CHECK(combine({Linearity::linear, Linearity::conjugate_linear}) == Linearity::neither);
  CHECK(combine({Linearity::zero}) == Linearity::zero);
}

}
