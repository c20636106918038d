#include "qtoledo/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace qtoledo {

namespace {

void require(bool ok, const std::string &what) {
  if (!ok) throw DimensionError(what);
}

} // namespace

Vec operator+(const Vec &u, const Vec &v) {
  require(u.size() == v.size(), "vector length mismatch in +");
  Vec out(u);
  for (std::size_t k = 0; k < u.size(); ++k) out[k] += v[k];
  return out;
}

Vec operator-(const Vec &u, const Vec &v) {
  require(u.size() == v.size(), "vector length mismatch in -");
  Vec out(u);
  for (std::size_t k = 0; k < u.size(); ++k) out[k] -= v[k];
  return out;
}

Vec operator*(const FieldElem &s, const Vec &v) {
  Vec out(v);
  for (auto &x : out) x = s * x;
  return out;
}

bool is_zero(const Vec &v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElem &x) { return x.is_zero(); });
}

std::string to_string(const Vec &v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += v[k].str();
  }
  return out + ")";
}

Vec unit_vector(std::size_t n, std::size_t k) {
  Vec v(n);
  v.at(k) = 1;
  return v;
}

// ---------------------------------------------------------------------------
// Mat

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Mat::Mat(std::initializer_list<std::initializer_list<FieldElem>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    require(r.size() == cols_, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

Mat Mat::diagonal(const Vec &d) {
  Mat m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

Mat Mat::column(const Vec &v) {
  Mat m(v.size(), 1);
  for (std::size_t k = 0; k < v.size(); ++k) m(k, 0) = v[k];
  return m;
}

Mat Mat::from_columns(const std::vector<Vec> &cols, std::size_t rows) {
  Mat m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require(cols[c].size() == rows, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Mat::col(std::size_t c) const {
  require(c < cols_, "column index out of range");
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vec Mat::row(std::size_t r) const {
  require(r < rows_, "row index out of range");
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  Mat m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat &m) {
  require(r0 + m.rows() <= rows_ && c0 + m.cols() <= cols_, "block out of range");
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

Mat Mat::adjoint() const {
  Mat m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c).conj();
  return m;
}

Mat Mat::transpose() const {
  Mat m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

Mat Mat::conj() const {
  Mat m(*this);
  for (auto &x : m.data_) x = x.conj();
  return m;
}

FieldElem Mat::trace() const {
  require(rows_ == cols_, "trace of non-square matrix");
  FieldElem t;
  for (std::size_t k = 0; k < rows_; ++k) t += (*this)(k, k);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const FieldElem &x) { return x.is_zero(); });
}

Mat &Mat::operator+=(const Mat &o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Mat &Mat::operator-=(const Mat &o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Mat operator-(const Mat &a) {
  Mat m(a);
  for (auto &x : m.data_) x = -x;
  return m;
}

Mat operator*(const Mat &a, const Mat &b) {
  require(a.cols_ == b.rows_, "matrix shape mismatch in *");
  Mat m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElem &x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) m(r, c) += x * b(k, c);
    }
  return m;
}

Mat operator*(const FieldElem &s, Mat a) {
  for (auto &x : a.data_) x = s * x;
  return a;
}

Vec operator*(const Mat &a, const Vec &v) {
  require(a.cols_ == v.size(), "matrix-vector shape mismatch");
  Vec out(a.rows_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) out[r] += a(r, c) * v[c];
  return out;
}

std::ostream &operator<<(std::ostream &os, const Mat &m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << m(r, c);
    }
    os << "]\n";
  }
  return os;
}

Mat bracket(const Mat &a, const Mat &b) { return a * b - b * a; }

// ---------------------------------------------------------------------------
// Elimination

std::vector<std::size_t> rref_in_place(Mat &m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != lead)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead, k));
    const FieldElem inv = m(lead, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k) m(lead, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c).is_zero()) continue;
      const FieldElem f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(lead, k);
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

std::size_t rank(Mat m) { return rref_in_place(m).size(); }

std::vector<Vec> null_space(const Mat &m) {
  Mat r = m;
  const auto pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hermitian forms

Mat HermSig::matrix() const {
  Vec d(dim());
  for (std::size_t k = 0; k < dim(); ++k) d[k] = sign_at(k);
  return Mat::diagonal(d);
}

FieldElem herm_form(const Vec &u, const Vec &v, const HermSig &sig) {
  require(u.size() == sig.dim() && v.size() == sig.dim(), "vector length does not match signature");
  FieldElem acc;
  for (std::size_t k = 0; k < u.size(); ++k) {
    const FieldElem t = u[k] * v[k].conj();
    if (sig.sign_at(k) > 0)
      acc += t;
    else
      acc -= t;
  }
  return acc;
}

std::string to_string(Definiteness d) {
  switch (d) {
  case Definiteness::positive: return "positive";
  case Definiteness::negative: return "negative";
  case Definiteness::indefinite: return "indefinite";
  case Definiteness::degenerate: return "degenerate";
  }
  return "?";
}

Mat gram_matrix(const std::vector<Vec> &vectors, const HermSig &sig) {
  const std::size_t k = vectors.size();
  Mat g(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) g(a, b) = herm_form(vectors[b], vectors[a], sig);
  return g;
}

Definiteness classify_hermitian(Mat g) {
  require(g.rows() == g.cols(), "Gram matrix must be square");
  if (rank(g) < g.rows()) return Definiteness::degenerate;

  // Schur-complement elimination on a nonsingular Hermitian matrix; pivots are real.
  std::vector<std::size_t> alive(g.rows());
  std::iota(alive.begin(), alive.end(), 0);
  int pos = 0;
  int neg = 0;
  while (!alive.empty()) {
    auto it = std::find_if(alive.begin(), alive.end(), [&](std::size_t k) { return !g(k, k).is_zero(); });
    if (it == alive.end()) {
      // Zero diagonal on a nonsingular remainder: a hyperbolic pair exists.
      return Definiteness::indefinite;
    }
    const std::size_t p = *it;
    alive.erase(it);
    const int s = real_sign(g(p, p));
    (s > 0 ? pos : neg)++;
    const FieldElem inv = g(p, p).inverse();
    for (std::size_t r : alive) {
      if (g(r, p).is_zero()) continue;
      const FieldElem f = g(r, p) * inv;
      for (std::size_t c : alive) g(r, c) -= f * g(p, c);
    }
  }
  if (neg == 0) return Definiteness::positive;
  if (pos == 0) return Definiteness::negative;
  return Definiteness::indefinite;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient, const std::vector<Vec> &spanning) : ambient_(ambient) {
  Mat m(spanning.size(), ambient);
  for (std::size_t r = 0; r < spanning.size(); ++r) {
    require(spanning[r].size() == ambient, "spanning vector has wrong length");
    for (std::size_t c = 0; c < ambient; ++c) m(r, c) = spanning[r][c];
  }
  pivots_ = rref_in_place(m);
  basis_ = m.block(0, 0, pivots_.size(), ambient);
}

void Subspace::check_ambient(std::size_t n) const {
  require(n == ambient_, "ambient dimension mismatch");
}

std::vector<Vec> Subspace::basis() const {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < basis_.rows(); ++r) out.push_back(basis_.row(r));
  return out;
}

Vec Subspace::residue(const Vec &v) const {
  check_ambient(v.size());
  Vec out(v);
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const FieldElem f = out[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_; ++c) out[c] -= f * basis_(r, c);
  }
  return out;
}

bool Subspace::contains(const Vec &v) const { return is_zero(residue(v)); }

Subspace Subspace::sum(const Subspace &o) const {
  check_ambient(o.ambient_);
  auto vs = basis();
  auto ws = o.basis();
  vs.insert(vs.end(), ws.begin(), ws.end());
  return Subspace(ambient_, vs);
}

Subspace Subspace::perp(const HermSig &sig) const {
  check_ambient(sig.dim());
  // u is orthogonal to s iff sum_k sign_k conj(s_k) u_k = 0.
  Mat eqs(dim(), ambient_);
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < ambient_; ++c) eqs(r, c) = FieldElem(sig.sign_at(c)) * basis_(r, c).conj();
  return Subspace(ambient_, null_space(eqs));
}

Definiteness Subspace::definiteness(const HermSig &sig) const {
  check_ambient(sig.dim());
  return classify_hermitian(gram_matrix(basis(), sig));
}

std::string to_string(const Subspace &s) {
  std::string out = "<";
  const auto b = s.basis();
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (k) out += ", ";
    out += to_string(b[k]);
  }
  return out + ">";
}

} // namespace qtoledo
