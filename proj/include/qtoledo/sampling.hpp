#pragma once

// Seeded generators of exact random inputs. Output depends only on the seed.

#include "qtoledo/geometry.hpp"

#include <cstdint>
#include <random>

namespace qtoledo {

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi], without std distributions so streams are portable.
  long integer(long lo, long hi);
  /// n/d with |n| <= 9, 1 <= d <= 6.
  Rational rational();
  Rational nonzero_rational();
  /// Element of Q(i).
  FieldElem gaussian();
  /// Element of Q(i, sqrt2) with all four coordinates random.
  FieldElem field();
  /// Real element a + c sqrt2.
  FieldElem real();
  Vec gaussian_vec(std::size_t n);
  Vec nonzero_gaussian_vec(std::size_t n);
  Vec field_vec(std::size_t n);
  Mat field_mat(std::size_t r, std::size_t c);
  TangentVec tangent(std::size_t p, std::size_t q);
  /// Random su(2,1) element [[K, b], [b^*, k]] with K + K^* = 0 and trace zero.
  Mat su21();
  /// Negative vector (z1, z2, 1) of C^{2,1} with |z|^2 < 1.
  Vec negative_line();
  /// Random vector orthogonal to v0 for the (2,1) form.
  Vec orthogonal_to(const Vec &v0);

private:
  std::mt19937_64 rng_;
};

} // namespace qtoledo
