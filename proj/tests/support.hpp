#pragma once
// Shared oracles for the unit and acceptance tests. They recompute the same
// quantities by a different route than the library.

#include "qtoledo/embeddings.hpp"
#include "qtoledo/geometry.hpp"
#include "qtoledo/lifting.hpp"
#include "qtoledo/sampling.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace qtoledo::testing {

inline FieldElem q(long num, long den = 1) { return FieldElem(make_rational(num, den)); }
inline const FieldElem I = FieldElem::i();
inline const FieldElem R2 = FieldElem::sqrt2();

inline int permutation_sign(const std::array<int, 4> &p) {
  int inversions = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) inversions += p[a] > p[b] ? 1 : 0;
  return inversions % 2 == 0 ? 1 : -1;
}

// (alpha ^ alpha) as (1/8) sum over S_4 of sgn(s) alpha(x_s1, x_s2) alpha(x_s3, x_s4).
inline FieldElem wedge_square_by_permutations(const TwoForm &alpha, const std::array<TangentVec, 4> &x) {
  std::array<int, 4> p{0, 1, 2, 3};
  FieldElem total;
  do {
    total += FieldElem(permutation_sign(p)) * alpha(x[p[0]], x[p[1]]) * alpha(x[p[2]], x[p[3]]);
  } while (std::next_permutation(p.begin(), p.end()));
  return total * q(1, 8);
}

// Leibniz expansion of a 4 x 4 determinant.
inline Rational det4(const std::array<std::array<Rational, 4>, 4> &m) {
  std::array<int, 4> p{0, 1, 2, 3};
  Rational total = 0;
  do {
    Rational term = permutation_sign(p);
    for (int r = 0; r < 4; ++r) term *= m[r][p[r]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Quaternion product written out on the four real coordinates of x + y j,
// x = x0 + x1 i, y = y0 + y1 i (coordinates in Q(sqrt2)).
inline Quat hamilton_product(const Quat &p, const Quat &r) {
  const FieldElem a0 = p.z.re(), a1 = p.z.im(), a2 = p.w.re(), a3 = p.w.im();
  const FieldElem b0 = r.z.re(), b1 = r.z.im(), b2 = r.w.re(), b3 = r.w.im();
  // basis 1, i, j, k with k = i j; here x + y j has k-coordinate Im(y)
  const FieldElem c0 = a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3;
  const FieldElem c1 = a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2;
  const FieldElem c2 = a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1;
  const FieldElem c3 = a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0;
  return {c0 + I * c1, c2 + I * c3};
}

// d/dt of (I + tX) S (I + tX)^T at t = 0 in E-coordinates, using jets.
inline Vec leibniz_by_jets(const Mat &x, std::size_t j) {
  const Mat s = sym_basis_tensor(j);
  std::array<std::array<Jet, 3>, 3> g{}, t{};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) g[r][c] = Jet(r == c ? 1 : 0, x(r, c));
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      Jet sum;
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) sum = sum + g[r][a] * Jet(s(a, b)) * g[c][b];
      t[r][c] = sum;
    }
  Mat d(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) d(r, c) = t[r][c].deriv;
  // E-coordinates: squares read off the diagonal, mixed terms carry sqrt2
  return {d(0, 0), d(1, 1), d(2, 2), R2 * d(0, 1), R2 * d(2, 0), R2 * d(2, 1)};
}

// M^* F + F M for F = diag(I_p, -I_q), written out entrywise.
inline bool skew_for_signature(const Mat &m, std::size_t p) {
  const std::size_t n = m.rows();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const FieldElem fr = r < p ? 1 : -1, fc = c < p ? 1 : -1;
      if (!(m(c, r).conj() * fc + fr * m(r, c)).is_zero()) return false;
    }
  return true;
}

// Violation positions read off the displayed U, V blocks of the twistor
// obstruction: U (rows E1..E4, column E5) holds a1 at E1 and a2/sqrt2 at E4,
// V (row E6, columns E1..E4) holds a2 at E3.
inline std::vector<std::pair<std::size_t, std::size_t>> predicted_twistor_positions(const Vec &a) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (!a[0].is_zero()) out.emplace_back(0, 4);
  if (!a[1].is_zero()) {
    out.emplace_back(3, 4);
    out.emplace_back(5, 2);
  }
  return out;
}

inline std::vector<std::pair<std::size_t, std::size_t>> positions(const MaskVerdict &v) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto &x : v.violations) out.emplace_back(x.row, x.col);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::array<TangentVec, 4> random_quadruple(Sampler &gen, std::size_t p, std::size_t qq) {
  return {gen.tangent(p, qq), gen.tangent(p, qq), gen.tangent(p, qq), gen.tangent(p, qq)};
}

} // namespace qtoledo::testing
