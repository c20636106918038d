#pragma once

// Differentials at the base point of the embeddings of the complex ball
// B = SU(n,1)/S(U(n) x U(1)) into SU(2n,2)/S(U(2n) x U(2)).

#include "qtoledo/geometry.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qtoledo {

class NotInAlgebra : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class EmbeddingKind { rho, totally_real, phi, sym_square };

std::string to_string(EmbeddingKind k);
/// Accepts "rho", "totally-real", "phi", "sym-square" (underscores also accepted).
std::optional<EmbeddingKind> parse_embedding(std::string_view name);

/// R-linear map T_0 B = C^n -> T_0 X, stored by its values on the real basis
/// e_1, i e_1, e_2, i e_2, ..., e_n, i e_n (in that order).
class EmbeddingDiff {
public:
  using Fn = std::function<TangentVec(const Vec &)>;

  EmbeddingDiff(std::string name, std::size_t n, std::vector<TangentVec> images);
  static EmbeddingDiff sample(std::string name, std::size_t n, const Fn &fn);

  const std::string &name() const { return name_; }
  std::size_t n() const { return n_; }
  const std::vector<TangentVec> &images() const { return images_; }
  const TangentVec &image_of_real(std::size_t k) const { return images_.at(2 * k); }
  const TangentVec &image_of_imag(std::size_t k) const { return images_.at(2 * k + 1); }

  /// sum_k Re(x_k) L(e_k) + Im(x_k) L(i e_k).
  TangentVec operator()(const Vec &x) const;

private:
  std::string name_;
  std::size_t n_;
  std::vector<TangentVec> images_;
};

/// Rows 2k, 2k+1 of A are (x_k, 0), (0, x_k).
TangentVec rho_diff(const Vec &x);
/// Rows (x_k, 0), (0, conj(x_k)).
TangentVec totally_real_diff(const Vec &x);
/// Rows (x_k, 0), (0, 0).
TangentVec phi_diff(const Vec &x);
/// T_a: rows (a1, 0), (0, a2), (conj a1, conj a2), (a2/sqrt2, a1/sqrt2). Requires n = 2.
TangentVec sym_square_tangent(const Vec &a);

EmbeddingDiff make_embedding(EmbeddingKind kind, std::size_t n);

// ---------------------------------------------------------------------------
// Symmetric square W = Sym^2(C^{2,1})
//
// Tensors are 3 x 3 symmetric coefficient matrices S with S = sum S_ab e_a (x) e_b.
// The basis is E1 = e1^2, E2 = e2^2, E3 = e3^2, E4 = sqrt2 e1.e2,
// E5 = sqrt2 e3.e1, E6 = sqrt2 e3.e2, where u.v = (u (x) v + v (x) u)/2.
// W carries the form making this basis orthonormal with signs (+,+,+,+,-,-).

inline const HermSig kSigV{2, 1};
inline const HermSig kSigW{4, 2};

/// Coefficient matrix of E_j (0-based j).
Mat sym_basis_tensor(std::size_t j);
/// E-coordinates of a symmetric tensor.
Vec sym_coords(const Mat &tensor);
Mat sym_tensor(const Vec &coords);
/// E-coordinates of u.v for u, v in C^3.
Vec sym_product(const Vec &u, const Vec &v);

/// The p-part of su(2,1) parametrized by a: [[0,0,a1],[0,0,a2],[conj a1, conj a2, 0]].
Mat su21_p(const Vec &a);
bool in_su21(const Mat &x);

/// Leibniz rule X(u.v) = Xu.v + u.Xv written in the E-basis, for any 3 x 3 complex X.
Mat sym_square_leibniz(const Mat &x);
/// As sym_square_leibniz, restricted to su(2,1). Throws NotInAlgebra otherwise.
Mat sym_square_lie(const Mat &x);

/// Upper-right 4 x 2 block (rows E1..E4, columns E5, E6) of a 6 x 6 matrix.
Mat p_block_42(const Mat &m);

/// The p-block of sym_square_lie(su21_p(a)).
TangentVec sym_square_leibniz_tangent(const Vec &a);

} // namespace qtoledo
