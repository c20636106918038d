#include "qtoledo/embeddings.hpp"

namespace qtoledo {

std::string to_string(EmbeddingKind k) {
  switch (k) {
  case EmbeddingKind::rho: return "rho";
  case EmbeddingKind::totally_real: return "totally-real";
  case EmbeddingKind::phi: return "phi";
  case EmbeddingKind::sym_square: return "sym-square";
  }
  return "?";
}

std::optional<EmbeddingKind> parse_embedding(std::string_view name) {
  std::string s(name);
  for (auto &ch : s)
    if (ch == '_') ch = '-';
  if (s == "rho") return EmbeddingKind::rho;
  if (s == "totally-real") return EmbeddingKind::totally_real;
  if (s == "phi") return EmbeddingKind::phi;
  if (s == "sym-square") return EmbeddingKind::sym_square;
  return std::nullopt;
}

EmbeddingDiff::EmbeddingDiff(std::string name, std::size_t n, std::vector<TangentVec> images)
    : name_(std::move(name)), n_(n), images_(std::move(images)) {
  if (images_.size() != 2 * n_) throw DimensionError("embedding needs 2n basis images");
}

EmbeddingDiff EmbeddingDiff::sample(std::string name, std::size_t n, const Fn &fn) {
  std::vector<TangentVec> images;
  for (std::size_t k = 0; k < n; ++k) {
    images.push_back(fn(unit_vector(n, k)));
    images.push_back(fn(FieldElem::i() * unit_vector(n, k)));
  }
  return EmbeddingDiff(std::move(name), n, std::move(images));
}

TangentVec EmbeddingDiff::operator()(const Vec &x) const {
  if (x.size() != n_) throw DimensionError("embedding input has wrong length");
  TangentVec out = TangentVec::zero(images_[0].p(), images_[0].q());
  for (std::size_t k = 0; k < n_; ++k) {
    out = out + x[k].re() * image_of_real(k) + x[k].im() * image_of_imag(k);
  }
  return out;
}

namespace {

template <typename RowFn> TangentVec two_rows_per_coordinate(const Vec &x, RowFn fill) {
  Mat a(2 * x.size(), 2);
  for (std::size_t k = 0; k < x.size(); ++k) fill(a, 2 * k, x[k]);
  return TangentVec(std::move(a));
}

} // namespace

TangentVec rho_diff(const Vec &x) {
  return two_rows_per_coordinate(x, [](Mat &a, std::size_t r, const FieldElem &z) {
    a(r, 0) = z;
    a(r + 1, 1) = z;
  });
}

TangentVec totally_real_diff(const Vec &x) {
  return two_rows_per_coordinate(x, [](Mat &a, std::size_t r, const FieldElem &z) {
    a(r, 0) = z;
    a(r + 1, 1) = z.conj();
  });
}

TangentVec phi_diff(const Vec &x) {
  return two_rows_per_coordinate(x, [](Mat &a, std::size_t r, const FieldElem &z) { a(r, 0) = z; });
}

TangentVec sym_square_tangent(const Vec &a) {
  if (a.size() != 2) throw DimensionError("the symmetric square is defined for n = 2");
  const FieldElem half_sqrt2 = FieldElem(0, 0, make_rational(1, 2), 0);
  return TangentVec(Mat{{a[0], 0},
                        {0, a[1]},
                        {a[0].conj(), a[1].conj()},
                        {half_sqrt2 * a[1], half_sqrt2 * a[0]}});
}

EmbeddingDiff make_embedding(EmbeddingKind kind, std::size_t n) {
  switch (kind) {
  case EmbeddingKind::rho: return EmbeddingDiff::sample("rho", n, rho_diff);
  case EmbeddingKind::totally_real: return EmbeddingDiff::sample("totally-real", n, totally_real_diff);
  case EmbeddingKind::phi: return EmbeddingDiff::sample("phi", n, phi_diff);
  case EmbeddingKind::sym_square:
    if (n != 2) throw DimensionError("the symmetric square is defined for n = 2");
    return EmbeddingDiff::sample("sym-square", n, sym_square_tangent);
  }
  throw std::invalid_argument("unknown embedding");
}

// ---------------------------------------------------------------------------
// Symmetric square

namespace {

// (E-index) -> unordered index pair (a, b) of the tensor basis.
constexpr std::size_t kPair[6][2] = {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {2, 0}, {2, 1}};

FieldElem sqrt2() { return FieldElem::sqrt2(); }
FieldElem half_sqrt2() { return FieldElem(0, 0, make_rational(1, 2), 0); }

} // namespace

Mat sym_basis_tensor(std::size_t j) {
  if (j >= 6) throw DimensionError("E-basis index out of range");
  Mat s(3, 3);
  const auto [a, b] = kPair[j];
  if (a == b) {
    s(a, a) = 1;
  } else {
    // sqrt2 e_a.e_b has coefficient sqrt2/2 on e_a (x) e_b and on e_b (x) e_a.
    s(a, b) = half_sqrt2();
    s(b, a) = half_sqrt2();
  }
  return s;
}

Vec sym_coords(const Mat &t) {
  if (t.rows() != 3 || t.cols() != 3) throw DimensionError("symmetric tensor must be 3 x 3");
  if (!(t == t.transpose())) throw std::invalid_argument("tensor is not symmetric");
  Vec c(6);
  for (std::size_t j = 0; j < 6; ++j) {
    const auto [a, b] = kPair[j];
    c[j] = a == b ? t(a, a) : sqrt2() * t(a, b);
  }
  return c;
}

Mat sym_tensor(const Vec &coords) {
  if (coords.size() != 6) throw DimensionError("W-coordinates must have length 6");
  Mat t(3, 3);
  for (std::size_t j = 0; j < 6; ++j) t += coords[j] * sym_basis_tensor(j);
  return t;
}

Vec sym_product(const Vec &u, const Vec &v) {
  if (u.size() != 3 || v.size() != 3) throw DimensionError("symmetric product needs vectors in C^3");
  const Mat uu = Mat::column(u);
  const Mat vv = Mat::column(v);
  const FieldElem half = make_rational(1, 2);
  return sym_coords(half * (uu * vv.transpose() + vv * uu.transpose()));
}

Mat su21_p(const Vec &a) {
  if (a.size() != 2) throw DimensionError("p-part of su(2,1) needs a in C^2");
  return Mat{{0, 0, a[0]}, {0, 0, a[1]}, {a[0].conj(), a[1].conj(), 0}};
}

bool in_su21(const Mat &x) {
  return x.rows() == 3 && x.cols() == 3 && is_form_skew(x, kSigV) && x.trace().is_zero();
}

Mat sym_square_leibniz(const Mat &x) {
  if (x.rows() != 3 || x.cols() != 3) throw DimensionError("Leibniz rule needs a 3 x 3 matrix");
  // (X (x) 1 + 1 (x) X) acts on coefficient matrices as S -> X S + S X^T.
  const Mat xt = x.transpose();
  Mat out(6, 6);
  for (std::size_t j = 0; j < 6; ++j) {
    const Mat s = sym_basis_tensor(j);
    const Vec col = sym_coords(x * s + s * xt);
    for (std::size_t r = 0; r < 6; ++r) out(r, j) = col[r];
  }
  return out;
}

Mat sym_square_lie(const Mat &x) {
  if (!in_su21(x)) throw NotInAlgebra("matrix is not in su(2,1)");
  return sym_square_leibniz(x);
}

Mat p_block_42(const Mat &m) {
  if (m.rows() != 6 || m.cols() != 6) throw DimensionError("expected a 6 x 6 matrix");
  return m.block(0, 4, 4, 2);
}

TangentVec sym_square_leibniz_tangent(const Vec &a) { return TangentVec(p_block_42(sym_square_lie(su21_p(a)))); }

} // namespace qtoledo
