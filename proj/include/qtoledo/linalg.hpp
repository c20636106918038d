#pragma once

// Exact dense matrices over Q(i, sqrt2), indefinite Hermitian forms and subspaces.

#include "qtoledo/scalars.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtoledo {

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

using Vec = std::vector<FieldElem>;

Vec operator+(const Vec &u, const Vec &v);
Vec operator-(const Vec &u, const Vec &v);
Vec operator*(const FieldElem &s, const Vec &v);
bool is_zero(const Vec &v);
std::string to_string(const Vec &v);

/// Unit vector e_k (0-based) of length n.
Vec unit_vector(std::size_t n, std::size_t k);

/// Row-major dense matrix.
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::initializer_list<std::initializer_list<FieldElem>> rows);

  static Mat identity(std::size_t n);
  static Mat diagonal(const Vec &d);
  static Mat column(const Vec &v);
  static Mat from_columns(const std::vector<Vec> &cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElem &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElem &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec col(std::size_t c) const;
  Vec row(std::size_t r) const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat &m);

  Mat adjoint() const;   ///< conjugate transpose
  Mat transpose() const;
  Mat conj() const;
  FieldElem trace() const;
  bool is_zero() const;

  Mat &operator+=(const Mat &o);
  Mat &operator-=(const Mat &o);

  friend Mat operator+(Mat a, const Mat &b) { return a += b; }
  friend Mat operator-(Mat a, const Mat &b) { return a -= b; }
  friend Mat operator-(const Mat &a);
  friend Mat operator*(const Mat &a, const Mat &b);
  friend Mat operator*(const FieldElem &s, Mat a);
  friend Vec operator*(const Mat &a, const Vec &v);
  friend bool operator==(const Mat &, const Mat &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElem> data_;
};

std::ostream &operator<<(std::ostream &os, const Mat &m);

/// Commutator a b - b a.
Mat bracket(const Mat &a, const Mat &b);

/// Reduced row echelon form; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref_in_place(Mat &m);
std::size_t rank(Mat m);
/// Basis of {x : m x = 0}.
std::vector<Vec> null_space(const Mat &m);

/// Hermitian form diag(I_p, -I_q) on C^{p+q}.
struct HermSig {
  std::size_t p = 0;
  std::size_t q = 0;

  std::size_t dim() const { return p + q; }
  int sign_at(std::size_t k) const { return k < p ? 1 : -1; }
  Mat matrix() const;
};

/// h(u, v) = v^* diag(I_p, -I_q) u, linear in u and conjugate-linear in v.
FieldElem herm_form(const Vec &u, const Vec &v, const HermSig &sig);

enum class Definiteness { positive, negative, indefinite, degenerate };
std::string to_string(Definiteness d);

/// Gram matrix G(a, b) = h(b_b, b_a) of a family of vectors.
Mat gram_matrix(const std::vector<Vec> &vectors, const HermSig &sig);
/// Definiteness of a Hermitian matrix by exact symmetric elimination.
Definiteness classify_hermitian(Mat gram);

/// Linear subspace of an ambient coordinate space, stored canonically as a
/// reduced row echelon basis (one basis vector per row).
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
  Subspace(std::size_t ambient, const std::vector<Vec> &spanning);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  std::vector<Vec> basis() const;

  bool contains(const Vec &v) const;
  /// v reduced modulo the subspace; zero iff v lies in it. Depends only on the class of v.
  Vec residue(const Vec &v) const;
  Subspace sum(const Subspace &o) const;
  Subspace perp(const HermSig &sig) const;
  Definiteness definiteness(const HermSig &sig) const;

  friend bool operator==(const Subspace &, const Subspace &) = default;

private:
  void check_ambient(std::size_t n) const;

  std::size_t ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

std::string to_string(const Subspace &s);

} // namespace qtoledo
