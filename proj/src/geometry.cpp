#include "qtoledo/geometry.hpp"

namespace qtoledo {

namespace {

void require_same_shape(const TangentVec &x, const TangentVec &y) {
  if (x.p() != y.p() || x.q() != y.q()) throw DimensionError("tangent vectors have different shapes");
}

void require_quaternionic(const TangentVec &x) {
  if (x.q() != 2) throw DimensionError("quaternionic coordinates need a 2-column block");
}

} // namespace

Mat TangentVec::full_matrix() const {
  Mat m(p() + q(), p() + q());
  m.set_block(0, p(), a_);
  m.set_block(p(), 0, a_.adjoint());
  return m;
}

bool is_form_skew(const Mat &m, const HermSig &sig) {
  if (m.rows() != sig.dim() || m.cols() != sig.dim()) throw DimensionError("matrix does not match signature");
  const Mat f = sig.matrix();
  return (m.adjoint() * f + f * m).is_zero();
}

TangentVec complex_structure(const TangentVec &x) { return FieldElem::i() * x; }

FieldElem metric(const TangentVec &x, const TangentVec &y) {
  require_same_shape(x, y);
  return FieldElem(4) * (y.block().adjoint() * x.block()).trace().re();
}

FieldElem kahler_form(const TangentVec &x, const TangentVec &y) { return metric(complex_structure(x), y); }

FieldElem wedge_square(const TwoForm &alpha, const TangentVec &x, const TangentVec &y, const TangentVec &z,
                       const TangentVec &w) {
  return alpha(x, y) * alpha(z, w) - alpha(x, z) * alpha(y, w) + alpha(x, w) * alpha(y, z);
}

QuatCoords to_quat(const TangentVec &x) {
  require_quaternionic(x);
  QuatCoords q(x.p());
  for (std::size_t m = 0; m < x.p(); ++m) q[m] = {x.block()(m, 0), x.block()(m, 1)};
  return q;
}

TangentVec from_quat(const QuatCoords &q) {
  Mat a(q.size(), 2);
  for (std::size_t m = 0; m < q.size(); ++m) {
    a(m, 0) = q[m].z;
    a(m, 1) = q[m].w;
  }
  return TangentVec(std::move(a));
}

std::string to_string(const QuatCoords &q) {
  std::string out = "(";
  for (std::size_t m = 0; m < q.size(); ++m) {
    if (m) out += ", ";
    out += to_string(q[m]);
  }
  return out + ")";
}

Quat quat_hermitian(const QuatCoords &p, const QuatCoords &q) {
  if (p.size() != q.size()) throw DimensionError("quaternion vectors differ in length");
  Quat acc;
  for (std::size_t m = 0; m < p.size(); ++m) acc = acc + p[m] * q[m].conj();
  return acc;
}

Quat unit_quat(QuatUnit u) {
  switch (u) {
  case QuatUnit::i: return Quat::unit_i();
  case QuatUnit::j: return Quat::unit_j();
  case QuatUnit::k: return Quat::unit_k();
  }
  return Quat::one();
}

FieldElem omega_unit(const TangentVec &x, const TangentVec &y, QuatUnit u) {
  require_same_shape(x, y);
  return (quat_hermitian(to_quat(x), to_quat(y)) * unit_quat(u)).re();
}

FieldElem omega4(const TangentVec &x, const TangentVec &y, const TangentVec &z, const TangentVec &w) {
  FieldElem total;
  for (QuatUnit u : {QuatUnit::i, QuatUnit::j, QuatUnit::k}) {
    total += wedge_square([u](const TangentVec &a, const TangentVec &b) { return omega_unit(a, b, u); }, x, y, z, w);
  }
  return total;
}

FieldElem kahler_square(const TangentVec &x, const TangentVec &y, const TangentVec &z, const TangentVec &w) {
  return wedge_square(kahler_form, x, y, z, w);
}

Mat su2_matrix(Su2Generator g) {
  const FieldElem i = FieldElem::i();
  switch (g) {
  case Su2Generator::diag_i: return Mat{{i, 0}, {0, -i}};
  case Su2Generator::offdiag_real: return Mat{{0, 1}, {-1, 0}};
  case Su2Generator::offdiag_imag: return Mat{{0, i}, {i, 0}};
  }
  return Mat::identity(2);
}

QuatUnit su2_unit(Su2Generator g) {
  switch (g) {
  case Su2Generator::diag_i: return QuatUnit::i;
  case Su2Generator::offdiag_real: return QuatUnit::j;
  case Su2Generator::offdiag_imag: return QuatUnit::k;
  }
  return QuatUnit::i;
}

TangentVec su2_adjoint(Su2Generator g, const TangentVec &x) {
  require_quaternionic(x);
  // Conjugating [[0, A], [0, 0]] by diag(I, g) leaves A g in the upper-right block.
  return TangentVec(x.block() * su2_matrix(g));
}

QuatCoords right_multiply(const QuatCoords &q, const Quat &u) {
  QuatCoords out(q);
  for (auto &e : out) e = e * u;
  return out;
}

bool su2_action_check(Su2Generator g, const TangentVec &x) {
  return to_quat(su2_adjoint(g, x)) == right_multiply(to_quat(x), unit_quat(su2_unit(g)));
}

} // namespace qtoledo
