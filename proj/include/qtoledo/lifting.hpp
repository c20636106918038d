#pragma once

// Holomorphic and horizontal lifts of the symmetric-square map to the period
// domains SU(4,2)/S(U(4) x U(1) x U(1)) (twistor space) and
// SU(4,2)/S(U(3) x U(1) x U(2)).
//
// All 6 x 6 matrices are written in the E-basis E1..E6 of W = Sym^2(C^{2,1}),
// with the (4|2) block split E1..E4 | E5, E6.

#include "qtoledo/embeddings.hpp"

#include <string>
#include <vector>

namespace qtoledo {

using BoolGrid = std::vector<std::vector<bool>>;

/// Positive ad(H)-eigenspace pattern for H = diag(h): allow[p][q] iff h_p > h_q.
struct GradedMask {
  std::vector<Rational> h;
  BoolGrid allow;

  std::size_t size() const { return h.size(); }
  bool allowed(std::size_t p, std::size_t q) const { return allow[p][q]; }
  /// Keeps only the off-diagonal (split | rest) positions, i.e. the image in p.
  BoolGrid restricted_to_p(std::size_t split) const;
};

GradedMask grading_mask(const std::vector<Rational> &h);

/// H = diag(0,0,0,0,1,-1) for the twistor space.
std::vector<Rational> twistor_grading();
/// diag(1,1,-3,1,0,0) for SU(4,2)/S(U(3) x U(1) x U(2)).
std::vector<Rational> u3u1u2_grading();

/// The b^+ vector S with top-right column (a1, a2) and zeros elsewhere.
Mat bplus_vector(const Vec &a);
/// (1/2)(X_a - sqrt(-1) X_{ia}) built from the p-parametrization.
Mat bplus_from_p(const Vec &a);

/// iota_*(S) via the complex-linear extension (1/2)(d iota(X_a) - sqrt(-1) d iota(X_{ia})).
Mat sym_square_bplus_image(const Vec &a);

struct Violation {
  std::size_t row = 0; ///< 0-based E-index
  std::size_t col = 0;
  FieldElem value;
};

std::string position_name(std::size_t row, std::size_t col);

struct MaskVerdict {
  Vec input;
  bool member = false;
  std::vector<Violation> violations;
};

/// Nonzero entries of m at positions where allowed is false.
std::vector<Violation> mask_violations(const Mat &m, const BoolGrid &allowed);

/// Is the p-part of iota_*(S) inside pi_*(n) for the twistor grading? Expected false for a != 0.
MaskVerdict twistor_nonlift_check(const Vec &a);

/// Does iota_*(S) lie in the positive eigenspace of ad(diag(1,1,-3,1,0,0))? Expected true.
MaskVerdict holomorphy_check_u3u1u2(const Vec &a);

// ---------------------------------------------------------------------------
// (Conjugate-)linearity of an R-linear differential

enum class Linearity { linear, conjugate_linear, zero, neither };
std::string to_string(Linearity l);

/// Via L(i e_k) = +-i L(e_k) for each k, on the scalar component A(row, column).
Linearity classify_component(const EmbeddingDiff &e, std::size_t column, std::size_t row);
/// Via the real Jacobian blocks [[A, B], [C, D]]: A = D, B = -C (linear); A = -D, B = C (conjugate).
Linearity classify_component_jacobian(const EmbeddingDiff &e, std::size_t column, std::size_t row);
/// Combines components; identically zero ones are compatible with both kinds.
Linearity combine(const std::vector<Linearity> &parts);
Linearity classify_column(const EmbeddingDiff &e, std::size_t column);

struct LinearityTable {
  std::string embedding;
  std::vector<std::vector<Linearity>> components; ///< components[column][row]
  std::vector<Linearity> columns;
  /// U_1 conjugate-linear and U_2 linear: the necessary condition for a twistor lift.
  bool twistor_condition = false;
};

LinearityTable classify_linearity(const EmbeddingDiff &e);

// ---------------------------------------------------------------------------
// The lift L -> (S^2 L^perp, L^2, L.L^perp)

class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct PeriodTriple {
  Subspace sym_perp;  ///< S^2 L^perp
  Subspace line_sq;   ///< L^2
  Subspace mixed;     ///< L . L^perp
};

/// Requires h(v, v) < 0 in C^{2,1}.
PeriodTriple period_triple(const Vec &v);

using JetVec = std::vector<Jet>;

JetVec make_jet_vec(const Vec &val, const Vec &deriv);
Vec jet_values(const JetVec &v);
Vec jet_derivs(const JetVec &v);
/// Jet E-coordinates of u(t).v(t).
JetVec jet_sym_product(const JetVec &u, const JetVec &v);

/// u_k(t) = u_k - t h(u_k, w) / h(v0, v0) v0, orthogonal to v0 + t w to first order.
std::vector<JetVec> first_order_perp_family(const Vec &v0, const Vec &w, const std::vector<Vec> &perp_basis);

/// Derivatives of the spanning curves reduced modulo the subspace they span at t = 0.
std::vector<Vec> curve_residues(const std::vector<JetVec> &spanning);

struct HorizontalityReport {
  bool horizontal = false;
  std::vector<Vec> line_sq_residues; ///< from L(t)^2
  std::vector<Vec> sym_perp_residues; ///< from S^2(L(t)^perp)
};

/// Requires h(v0, v0) < 0 and h(v0, w) = 0.
HorizontalityReport horizontality_check(const Vec &v0, const Vec &w);

} // namespace qtoledo
