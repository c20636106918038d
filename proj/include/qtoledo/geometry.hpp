#pragma once

// Base-point geometry of SU(p,q)/S(U(p) x U(q)) in the Harish-Chandra picture.
//
// Conventions, fixed globally:
//  * a tangent vector is the block A of [[0, A], [A^*, 0]] in p;
//  * g0(X, Y) = 4 Re Tr(B^* A), Omega0(X, Y) = g0(JX, Y) with J A = iA;
//  * for q = 2 the row (x_m, y_m) of A is the quaternion x_m + y_m j;
//  * (alpha ^ alpha)(X,Y,Z,W) = a(X,Y)a(Z,W) - a(X,Z)a(Y,W) + a(X,W)a(Y,Z),
//    the three-term expansion with no combinatorial factor.

#include "qtoledo/linalg.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qtoledo {

/// Tangent vector at the base point, i.e. the p x q block A.
class TangentVec {
public:
  TangentVec() = default;
  explicit TangentVec(Mat block) : a_(std::move(block)) {}
  static TangentVec zero(std::size_t p, std::size_t q) { return TangentVec(Mat(p, q)); }

  std::size_t p() const { return a_.rows(); }
  std::size_t q() const { return a_.cols(); }
  const Mat &block() const { return a_; }

  /// The (p+q) x (p+q) matrix [[0, A], [A^*, 0]] in su(p,q).
  Mat full_matrix() const;

  friend TangentVec operator+(const TangentVec &x, const TangentVec &y) { return TangentVec(x.a_ + y.a_); }
  friend TangentVec operator-(const TangentVec &x, const TangentVec &y) { return TangentVec(x.a_ - y.a_); }
  friend TangentVec operator*(const FieldElem &s, const TangentVec &x) { return TangentVec(s * x.a_); }
  friend bool operator==(const TangentVec &, const TangentVec &) = default;

private:
  Mat a_;
};

/// True iff M^* F + F M = 0 for F = diag(I_p, -I_q).
bool is_form_skew(const Mat &m, const HermSig &sig);

TangentVec complex_structure(const TangentVec &x);

FieldElem metric(const TangentVec &x, const TangentVec &y);
FieldElem kahler_form(const TangentVec &x, const TangentVec &y);

using TwoForm = std::function<FieldElem(const TangentVec &, const TangentVec &)>;

/// (alpha ^ alpha)(x, y, z, w) in the three-term convention above.
FieldElem wedge_square(const TwoForm &alpha, const TangentVec &x, const TangentVec &y, const TangentVec &z,
                       const TangentVec &w);

using QuatCoords = std::vector<Quat>;

/// q_m = A(m,0) + A(m,1) j. Requires q = 2.
QuatCoords to_quat(const TangentVec &x);
TangentVec from_quat(const QuatCoords &q);
std::string to_string(const QuatCoords &q);

/// Sum_m p_m conj(q_m).
Quat quat_hermitian(const QuatCoords &p, const QuatCoords &q);

enum class QuatUnit { i, j, k };
Quat unit_quat(QuatUnit u);

/// omega_u(X, Y) = Re((q_X . conj(q_Y)) u).
FieldElem omega_unit(const TangentVec &x, const TangentVec &y, QuatUnit u);

/// The quaternionic 4-form omega_i^2 + omega_j^2 + omega_k^2.
FieldElem omega4(const TangentVec &x, const TangentVec &y, const TangentVec &z, const TangentVec &w);

/// Omega0 ^ Omega0 on four tangent vectors.
FieldElem kahler_square(const TangentVec &x, const TangentVec &y, const TangentVec &z, const TangentVec &w);

enum class Su2Generator { diag_i, offdiag_real, offdiag_imag };

/// The 2 x 2 su(2) element: diag(i,-i), [[0,1],[-1,0]] or [[0,i],[i,0]].
Mat su2_matrix(Su2Generator g);
QuatUnit su2_unit(Su2Generator g);

/// Adjoint action of diag(I_2n, g) on the holomorphic block: A -> A g.
TangentVec su2_adjoint(Su2Generator g, const TangentVec &x);

/// Right multiplication of every quaternion coordinate by u.
QuatCoords right_multiply(const QuatCoords &q, const Quat &u);

/// True iff the adjoint action of g equals right multiplication of q_X by i, j or k.
bool su2_action_check(Su2Generator g, const TangentVec &x);

} // namespace qtoledo
