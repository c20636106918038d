#pragma once

// Pullbacks of omega and Omega0^2 through embedding differentials, and the
// resulting constants c with f^* omega = c Omega_B^2.

#include "qtoledo/embeddings.hpp"

#include <array>
#include <optional>
#include <string>

namespace qtoledo {

inline constexpr const char *kConventionNote =
    "wedge: (a^a)(X,Y,Z,W)=a(X,Y)a(Z,W)-a(X,Z)a(Y,W)+a(X,W)a(Y,Z); "
    "quaternions: q=x+y*j; metric: g0=4ReTr(B*A)";

/// Tangent vector of B at the origin for a in C^n: the block [[a], ...] of size n x 1.
TangentVec ball_tangent(const Vec &a);

/// (e_1, i e_1, e_2, i e_2) in C^n, n >= 2.
std::array<Vec, 4> standard_quadruple(std::size_t n);

/// Omega_B^2 on the standard quadruple (16 for every n >= 2).
FieldElem omega_b_squared_on_basis(std::size_t n);

struct PullbackReport {
  std::string embedding;
  std::size_t n = 2;
  FieldElem omega_value;    ///< omega on the images of the standard quadruple
  FieldElem omega0sq_value; ///< Omega0^2 on the same images
  FieldElem ratio;          ///< omega_value / 16, the constant c
  std::string convention = kConventionNote;
};

PullbackReport pullback_constant(const EmbeddingDiff &e);

struct CompositionInvariant {
  Rational value;                  ///< deg(f) vol(Y) / 16
  std::optional<bool> below_bound; ///< value < vol(X) / 16, when vol(X) is given
};

/// Toledo invariant of Gamma -> Gamma' -> SU(4,2) through phi, as a multiple of vol.
CompositionInvariant composition_invariant(long degree, const Rational &vol_y,
                                           const std::optional<Rational> &vol_x = std::nullopt);

} // namespace qtoledo
