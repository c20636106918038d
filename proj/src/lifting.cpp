#include "qtoledo/lifting.hpp"

#include <algorithm>

namespace qtoledo {

BoolGrid GradedMask::restricted_to_p(std::size_t split) const {
  BoolGrid out = allow;
  for (std::size_t p = 0; p < size(); ++p)
    for (std::size_t q = 0; q < size(); ++q)
      if ((p < split) == (q < split)) out[p][q] = false;
  return out;
}

GradedMask grading_mask(const std::vector<Rational> &h) {
  GradedMask m{h, BoolGrid(h.size(), std::vector<bool>(h.size(), false))};
  for (std::size_t p = 0; p < h.size(); ++p)
    for (std::size_t q = 0; q < h.size(); ++q) m.allow[p][q] = h[p] > h[q];
  return m;
}

std::vector<Rational> twistor_grading() { return {0, 0, 0, 0, 1, -1}; }
std::vector<Rational> u3u1u2_grading() { return {1, 1, -3, 1, 0, 0}; }

Mat bplus_vector(const Vec &a) {
  if (a.size() != 2) throw DimensionError("b^+ vector needs a in C^2");
  return Mat{{0, 0, a[0]}, {0, 0, a[1]}, {0, 0, 0}};
}

Mat bplus_from_p(const Vec &a) {
  const FieldElem i = FieldElem::i();
  return FieldElem(make_rational(1, 2)) * (su21_p(a) - i * su21_p(i * a));
}

Mat sym_square_bplus_image(const Vec &a) {
  const FieldElem i = FieldElem::i();
  return FieldElem(make_rational(1, 2)) * (sym_square_lie(su21_p(a)) - i * sym_square_lie(su21_p(i * a)));
}

std::string position_name(std::size_t row, std::size_t col) {
  return "(E" + std::to_string(row + 1) + ",E" + std::to_string(col + 1) + ")";
}

std::vector<Violation> mask_violations(const Mat &m, const BoolGrid &allowed) {
  std::vector<Violation> out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero() && !allowed[r][c]) out.push_back({r, c, m(r, c)});
  return out;
}

MaskVerdict twistor_nonlift_check(const Vec &a) {
  Mat img = sym_square_bplus_image(a);
  // Only the p-part (off-diagonal 4|2 blocks) is compared with pi_*(n).
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c)
      if ((r < 4) == (c < 4)) img(r, c) = 0;
  BoolGrid allowed = grading_mask(twistor_grading()).restricted_to_p(4);
  MaskVerdict v{a, false, mask_violations(img, allowed)};
  v.member = v.violations.empty();
  return v;
}

MaskVerdict holomorphy_check_u3u1u2(const Vec &a) {
  const Mat img = sym_square_bplus_image(a);
  MaskVerdict v{a, false, mask_violations(img, grading_mask(u3u1u2_grading()).allow)};
  v.member = v.violations.empty();
  return v;
}

// ---------------------------------------------------------------------------

std::string to_string(Linearity l) {
  switch (l) {
  case Linearity::linear: return "linear";
  case Linearity::conjugate_linear: return "conjugate_linear";
  case Linearity::zero: return "zero";
  case Linearity::neither: return "neither";
  }
  return "?";
}

namespace {

void check_component(const EmbeddingDiff &e, std::size_t column, std::size_t row) {
  const TangentVec &t = e.images().front();
  if (column >= t.q() || row >= t.p()) throw DimensionError("component index out of range");
}

Linearity from_flags(bool lin, bool conj) {
  if (lin && conj) return Linearity::zero;
  if (lin) return Linearity::linear;
  if (conj) return Linearity::conjugate_linear;
  return Linearity::neither;
}

} // namespace

Linearity classify_component(const EmbeddingDiff &e, std::size_t column, std::size_t row) {
  check_component(e, column, row);
  const FieldElem i = FieldElem::i();
  bool lin = true;
  bool conj = true;
  for (std::size_t k = 0; k < e.n(); ++k) {
    const FieldElem &re = e.image_of_real(k).block()(row, column);
    const FieldElem &im = e.image_of_imag(k).block()(row, column);
    lin = lin && (im - i * re).is_zero();
    conj = conj && (im + i * re).is_zero();
  }
  return from_flags(lin, conj);
}

Linearity classify_component_jacobian(const EmbeddingDiff &e, std::size_t column, std::size_t row) {
  check_component(e, column, row);
  bool lin = true;
  bool conj = true;
  for (std::size_t k = 0; k < e.n(); ++k) {
    const FieldElem &fx = e.image_of_real(k).block()(row, column);
    const FieldElem &fy = e.image_of_imag(k).block()(row, column);
    const FieldElem a = fx.re(), c = fx.im(); // d Re f / dx, d Im f / dx
    const FieldElem b = fy.re(), d = fy.im(); // d Re f / dy, d Im f / dy
    lin = lin && a == d && b == -c;
    conj = conj && a == -d && b == c;
  }
  return from_flags(lin, conj);
}

Linearity combine(const std::vector<Linearity> &parts) {
  bool lin = true;
  bool conj = true;
  for (Linearity l : parts) {
    lin = lin && (l == Linearity::linear || l == Linearity::zero);
    conj = conj && (l == Linearity::conjugate_linear || l == Linearity::zero);
  }
  return from_flags(lin, conj);
}

Linearity classify_column(const EmbeddingDiff &e, std::size_t column) {
  std::vector<Linearity> parts;
  for (std::size_t r = 0; r < e.images().front().p(); ++r) parts.push_back(classify_component(e, column, r));
  return combine(parts);
}

LinearityTable classify_linearity(const EmbeddingDiff &e) {
  LinearityTable t;
  t.embedding = e.name();
  const TangentVec &shape = e.images().front();
  for (std::size_t c = 0; c < shape.q(); ++c) {
    std::vector<Linearity> col;
    for (std::size_t r = 0; r < shape.p(); ++r) col.push_back(classify_component(e, c, r));
    t.columns.push_back(combine(col));
    t.components.push_back(std::move(col));
  }
  if (shape.q() == 2) {
    const auto ok = [](Linearity l, Linearity want) { return l == want || l == Linearity::zero; };
    t.twistor_condition = ok(t.columns[0], Linearity::conjugate_linear) && ok(t.columns[1], Linearity::linear);
  }
  return t;
}

// ---------------------------------------------------------------------------

namespace {

void require_negative(const Vec &v) {
  if (v.size() != 3) throw DimensionError("expected a vector in C^{2,1}");
  if (real_sign(herm_form(v, v, kSigV)) >= 0) throw PreconditionError("vector " + to_string(v) + " is not negative");
}

} // namespace

PeriodTriple period_triple(const Vec &v) {
  require_negative(v);
  const auto perp = Subspace(3, {v}).perp(kSigV).basis();
  std::vector<Vec> sym, mixed;
  for (std::size_t a = 0; a < perp.size(); ++a) {
    for (std::size_t b = a; b < perp.size(); ++b) sym.push_back(sym_product(perp[a], perp[b]));
    mixed.push_back(sym_product(v, perp[a]));
  }
  return {Subspace(6, sym), Subspace(6, {sym_product(v, v)}), Subspace(6, mixed)};
}

JetVec make_jet_vec(const Vec &val, const Vec &deriv) {
  if (val.size() != deriv.size()) throw DimensionError("jet vector parts differ in length");
  JetVec out;
  for (std::size_t k = 0; k < val.size(); ++k) out.emplace_back(val[k], deriv[k]);
  return out;
}

Vec jet_values(const JetVec &v) {
  Vec out;
  for (const auto &x : v) out.push_back(x.val);
  return out;
}

Vec jet_derivs(const JetVec &v) {
  Vec out;
  for (const auto &x : v) out.push_back(x.deriv);
  return out;
}

JetVec jet_sym_product(const JetVec &u, const JetVec &v) {
  if (u.size() != 3 || v.size() != 3) throw DimensionError("symmetric product needs vectors in C^3");
  const Jet half{make_rational(1, 2)};
  const Jet root2{FieldElem::sqrt2()};
  const auto entry = [&](std::size_t a, std::size_t b) { return half * (u[a] * v[b] + u[b] * v[a]); };
  // Same E-coordinates as sym_coords: diagonal entries, then sqrt2 times the off-diagonal ones.
  return {entry(0, 0), entry(1, 1), entry(2, 2), root2 * entry(0, 1), root2 * entry(2, 0), root2 * entry(2, 1)};
}

std::vector<JetVec> first_order_perp_family(const Vec &v0, const Vec &w, const std::vector<Vec> &perp_basis) {
  const FieldElem nv = herm_form(v0, v0, kSigV);
  std::vector<JetVec> out;
  for (const Vec &u : perp_basis) {
    const FieldElem c = -(herm_form(u, w, kSigV) / nv);
    out.push_back(make_jet_vec(u, c * v0));
  }
  return out;
}

std::vector<Vec> curve_residues(const std::vector<JetVec> &spanning) {
  std::vector<Vec> at_zero;
  for (const auto &s : spanning) at_zero.push_back(jet_values(s));
  const Subspace base(at_zero.front().size(), at_zero);
  std::vector<Vec> out;
  for (const auto &s : spanning) out.push_back(base.residue(jet_derivs(s)));
  return out;
}

HorizontalityReport horizontality_check(const Vec &v0, const Vec &w) {
  require_negative(v0);
  if (w.size() != 3) throw DimensionError("expected a vector in C^{2,1}");
  if (!herm_form(v0, w, kSigV).is_zero()) throw PreconditionError("w is not orthogonal to v0");

  const JetVec line = make_jet_vec(v0, w);
  const auto perp = first_order_perp_family(v0, w, Subspace(3, {v0}).perp(kSigV).basis());

  std::vector<JetVec> sym;
  for (std::size_t a = 0; a < perp.size(); ++a)
    for (std::size_t b = a; b < perp.size(); ++b) sym.push_back(jet_sym_product(perp[a], perp[b]));

  const PeriodTriple at_zero = period_triple(v0);
  HorizontalityReport r;
  r.line_sq_residues = curve_residues({jet_sym_product(line, line)});
  r.sym_perp_residues = curve_residues(sym);

  const Subspace line_target = at_zero.mixed.sum(at_zero.line_sq);
  const Subspace sym_target = at_zero.mixed.sum(at_zero.sym_perp);
  const auto inside = [](const Subspace &s, const std::vector<Vec> &vs) {
    return std::all_of(vs.begin(), vs.end(), [&](const Vec &v) { return s.contains(v); });
  };
  r.horizontal = inside(line_target, r.line_sq_residues) && inside(sym_target, r.sym_perp_residues);
  return r;
}

} // namespace qtoledo
