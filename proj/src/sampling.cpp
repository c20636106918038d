#include "qtoledo/sampling.hpp"

#include "qtoledo/embeddings.hpp"

namespace qtoledo {

long Sampler::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng_() % span);
}

Rational Sampler::rational() {
  const long num = integer(-9, 9);
  const long den = integer(1, 6);
  return make_rational(num, den);
}

Rational Sampler::nonzero_rational() {
  for (;;) {
    Rational q = rational();
    if (sgn(q) != 0) return q;
  }
}

// Braced initialization keeps the draws in left-to-right order.
FieldElem Sampler::gaussian() {
  const Rational q[2]{rational(), rational()};
  return FieldElem(q[0], q[1], 0, 0);
}

FieldElem Sampler::field() {
  const Rational q[4]{rational(), rational(), rational(), rational()};
  return FieldElem(q[0], q[1], q[2], q[3]);
}

FieldElem Sampler::real() {
  const Rational q[2]{rational(), rational()};
  return FieldElem(q[0], 0, q[1], 0);
}

Vec Sampler::gaussian_vec(std::size_t n) {
  Vec v(n);
  for (auto &x : v) x = gaussian();
  return v;
}

Vec Sampler::nonzero_gaussian_vec(std::size_t n) {
  for (;;) {
    Vec v = gaussian_vec(n);
    if (!is_zero(v)) return v;
  }
}

Vec Sampler::field_vec(std::size_t n) {
  Vec v(n);
  for (auto &x : v) x = field();
  return v;
}

Mat Sampler::field_mat(std::size_t r, std::size_t c) {
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = field();
  return m;
}

TangentVec Sampler::tangent(std::size_t p, std::size_t q) { return TangentVec(field_mat(p, q)); }

Mat Sampler::su21() {
  const FieldElem i = FieldElem::i();
  Mat x(3, 3);
  // Skew-Hermitian upper 2 x 2 block, imaginary corner fixing the trace.
  const FieldElem d0 = i * real();
  const FieldElem d1 = i * real();
  const FieldElem off = field();
  x(0, 0) = d0;
  x(1, 1) = d1;
  x(0, 1) = off;
  x(1, 0) = -off.conj();
  x(2, 2) = -(d0 + d1);
  const Vec b = field_vec(2);
  x(0, 2) = b[0];
  x(1, 2) = b[1];
  x(2, 0) = b[0].conj();
  x(2, 1) = b[1].conj();
  return x;
}

Vec Sampler::negative_line() {
  for (;;) {
    Vec v{gaussian(), gaussian(), 1};
    if (real_sign(herm_form(v, v, kSigV)) < 0) return v;
  }
}

Vec Sampler::orthogonal_to(const Vec &v0) {
  const Vec u = field_vec(3);
  return u - (herm_form(u, v0, kSigV) / herm_form(v0, v0, kSigV)) * v0;
}

} // namespace qtoledo
