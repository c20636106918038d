#include "qtoledo/scalars.hpp"

#include <array>
#include <cctype>
#include <ostream>
#include <sstream>

namespace qtoledo {

Rational make_rational(long num, long den) {
  if (den == 0) {
    throw DivisionByZero("rational with zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

RealSqrt2 operator+(const RealSqrt2 &x, const RealSqrt2 &y) { return {x.r + y.r, x.s + y.s}; }
RealSqrt2 operator-(const RealSqrt2 &x, const RealSqrt2 &y) { return {x.r - y.r, x.s - y.s}; }
RealSqrt2 operator-(const RealSqrt2 &x) { return {-x.r, -x.s}; }
RealSqrt2 operator*(const RealSqrt2 &x, const RealSqrt2 &y) {
  return {x.r * y.r + 2 * x.s * y.s, x.r * y.s + x.s * y.r};
}

int sign(const RealSqrt2 &x) {
  const int sr = sgn(x.r);
  const int ss = sgn(x.s);
  if (ss == 0) return sr;
  if (sr == 0 || sr == ss) return ss;
  // Opposite signs: the term with the larger square wins; r^2 == 2 s^2 is impossible.
  const Rational r2 = x.r * x.r;
  const Rational s2 = 2 * x.s * x.s;
  return r2 > s2 ? sr : ss;
}

namespace {

RealSqrt2 invert_real(const RealSqrt2 &x) {
  // (r + s sqrt2)^-1 = (r - s sqrt2) / (r^2 - 2 s^2)
  const Rational n = x.r * x.r - 2 * x.s * x.s;
  if (sgn(n) == 0) {
    throw DivisionByZero("inverse of zero in Q(i, sqrt2)");
  }
  return {x.r / n, -x.s / n};
}

} // namespace

FieldElem FieldElem::inverse() const {
  // Rationalize the i-part: x^-1 = conj(x) / (re^2 + im^2), then the sqrt2-part.
  const RealSqrt2 n = re_ * re_ + im_ * im_;
  if (n.is_zero()) {
    throw DivisionByZero("inverse of zero in Q(i, sqrt2)");
  }
  const RealSqrt2 ninv = invert_real(n);
  return FieldElem(re_ * ninv, -(im_ * ninv));
}

FieldElem &FieldElem::operator+=(const FieldElem &o) {
  re_ = re_ + o.re_;
  im_ = im_ + o.im_;
  return *this;
}

FieldElem &FieldElem::operator-=(const FieldElem &o) {
  re_ = re_ - o.re_;
  im_ = im_ - o.im_;
  return *this;
}

FieldElem &FieldElem::operator*=(const FieldElem &o) {
  RealSqrt2 re = re_ * o.re_ - im_ * o.im_;
  RealSqrt2 im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string FieldElem::str() const {
  const std::array<const Rational *, 4> coef{&re_.r, &im_.r, &re_.s, &im_.s};
  const std::array<const char *, 4> unit{"", "*i", "*sqrt2", "*i*sqrt2"};
  std::string out;
  for (std::size_t k = 0; k < 4; ++k) {
    const Rational &q = *coef[k];
    if (sgn(q) == 0) continue;
    const bool neg = sgn(q) < 0;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    out += Rational(abs(q)).get_str();
    out += unit[k];
  }
  return out.empty() ? "0" : out;
}

namespace {

class TermParser {
public:
  explicit TermParser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    }
  }

  FieldElem run() {
    if (s_.empty()) fail("empty input");
    FieldElem acc;
    bool first = true;
    while (pos_ < s_.size()) {
      int sgn = 1;
      if (peek() == '+' || peek() == '-') {
        sgn = get() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      acc += term() * FieldElem(sgn);
      first = false;
    }
    return acc;
  }

private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  bool accept(std::string_view word) {
    if (s_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string &why) const {
    throw ParseError("cannot parse field element \"" + s_ + "\": " + why);
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    return d;
  }

  FieldElem unit() {
    if (accept("i*sqrt2") || accept("sqrt2*i")) return FieldElem(0, 0, 0, 1);
    if (accept("sqrt2")) return FieldElem::sqrt2();
    if (accept("i")) return FieldElem::i();
    fail("expected i, sqrt2 or i*sqrt2");
  }

  FieldElem term() {
    const std::string num = digits();
    if (num.empty()) return unit();
    Rational q(num);
    if (peek() == '/') {
      get();
      const std::string den = digits();
      if (den.empty()) fail("missing denominator");
      Rational d(den);
      if (sgn(d) == 0) throw DivisionByZero("zero denominator in \"" + s_ + "\"");
      q /= d;
    }
    q.canonicalize();
    if (peek() == '*') {
      get();
      return FieldElem(q) * unit();
    }
    if (peek() == 'i' || peek() == 's') return FieldElem(q) * unit();
    return FieldElem(q);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

} // namespace

FieldElem FieldElem::parse(std::string_view text) { return TermParser(text).run(); }

std::ostream &operator<<(std::ostream &os, const FieldElem &x) { return os << x.str(); }

int real_sign(const FieldElem &x) {
  if (!x.is_real()) {
    throw NotReal("sign of non-real element " + x.str());
  }
  return sign(x.real_part());
}

FieldElem Quat::norm() const { return (z * z.conj() + w * w.conj()); }

Quat operator+(const Quat &p, const Quat &q) { return {p.z + q.z, p.w + q.w}; }
Quat operator-(const Quat &p, const Quat &q) { return {p.z - q.z, p.w - q.w}; }
Quat operator-(const Quat &p) { return {-p.z, -p.w}; }

Quat operator*(const Quat &p, const Quat &q) {
  // (z1 + w1 j)(z2 + w2 j) = (z1 z2 - w1 conj(w2)) + (z1 w2 + w1 conj(z2)) j
  return {p.z * q.z - p.w * q.w.conj(), p.z * q.w + p.w * q.z.conj()};
}

Quat operator*(const FieldElem &s, const Quat &q) { return {s * q.z, s * q.w}; }

std::string to_string(const Quat &q) {
  if (q.w.is_zero()) return q.z.str();
  std::string out;
  if (!q.z.is_zero()) out = "(" + q.z.str() + ") + ";
  return out + "(" + q.w.str() + ")*j";
}

std::ostream &operator<<(std::ostream &os, const Quat &q) { return os << to_string(q); }

Jet Jet::inverse() const {
  if (val.is_zero()) {
    throw DivisionByZero("jet with zero value is not invertible");
  }
  const FieldElem inv = val.inverse();
  return {inv, -(deriv * inv * inv)};
}

Jet operator+(const Jet &x, const Jet &y) { return {x.val + y.val, x.deriv + y.deriv}; }
Jet operator-(const Jet &x, const Jet &y) { return {x.val - y.val, x.deriv - y.deriv}; }
Jet operator-(const Jet &x) { return {-x.val, -x.deriv}; }
Jet operator*(const Jet &x, const Jet &y) {
  return {x.val * y.val, x.val * y.deriv + x.deriv * y.val};
}

} // namespace qtoledo
