#pragma once

// Exact scalars: Q(i, sqrt2), quaternions z + w j over it, and first-order jets.

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qtoledo {

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Builds num/den in canonical form.
Rational make_rational(long num, long den = 1);

class DivisionByZero : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class NotReal : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// r + s*sqrt2 with r, s rational: the real subfield Q(sqrt2).
struct RealSqrt2 {
  Rational r{0};
  Rational s{0};

  bool is_zero() const { return sgn(r) == 0 && sgn(s) == 0; }
  friend bool operator==(const RealSqrt2 &, const RealSqrt2 &) = default;
};

RealSqrt2 operator+(const RealSqrt2 &x, const RealSqrt2 &y);
RealSqrt2 operator-(const RealSqrt2 &x, const RealSqrt2 &y);
RealSqrt2 operator-(const RealSqrt2 &x);
RealSqrt2 operator*(const RealSqrt2 &x, const RealSqrt2 &y);

/// Exact sign of r + s*sqrt2, with no floating point.
int sign(const RealSqrt2 &x);

/// Element a + b*i + c*sqrt2 + d*i*sqrt2 of Q(i, sqrt2).
///
/// Stored as re + im*i with re = a + c*sqrt2 and im = b + d*sqrt2, so the
/// coordinates in the basis {1, i, sqrt2, i*sqrt2} are unique.
class FieldElem {
public:
  FieldElem() = default;
  FieldElem(long v) : re_{Rational(v), 0} {}
  FieldElem(Rational v) : re_{std::move(v), 0} {}
  FieldElem(Rational a, Rational b, Rational c, Rational d)
      : re_{std::move(a), std::move(c)}, im_{std::move(b), std::move(d)} {}
  FieldElem(RealSqrt2 re, RealSqrt2 im) : re_(std::move(re)), im_(std::move(im)) {}

  static FieldElem i() { return FieldElem(0, 1, 0, 0); }
  static FieldElem sqrt2() { return FieldElem(0, 0, 1, 0); }

  const Rational &a() const { return re_.r; }
  const Rational &b() const { return im_.r; }
  const Rational &c() const { return re_.s; }
  const Rational &d() const { return im_.s; }

  const RealSqrt2 &real_part() const { return re_; }
  const RealSqrt2 &imag_part() const { return im_; }

  /// Real part as a field element (b = d = 0).
  FieldElem re() const { return FieldElem(re_, {}); }
  /// Imaginary part as a real field element.
  FieldElem im() const { return FieldElem(im_, {}); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  FieldElem conj() const { return FieldElem(re_, -im_); }
  FieldElem inverse() const;

  FieldElem &operator+=(const FieldElem &o);
  FieldElem &operator-=(const FieldElem &o);
  FieldElem &operator*=(const FieldElem &o);

  friend FieldElem operator+(FieldElem x, const FieldElem &y) { return x += y; }
  friend FieldElem operator-(FieldElem x, const FieldElem &y) { return x -= y; }
  friend FieldElem operator*(FieldElem x, const FieldElem &y) { return x *= y; }
  friend FieldElem operator/(const FieldElem &x, const FieldElem &y) { return x * y.inverse(); }
  friend FieldElem operator-(const FieldElem &x) { return FieldElem(-x.re_, -x.im_); }

  friend bool operator==(const FieldElem &, const FieldElem &) = default;

  /// Canonical rendering, e.g. "1/2 - 3*i + 1/4*sqrt2 + 1*i*sqrt2", "0" for zero.
  std::string str() const;
  static FieldElem parse(std::string_view text);

private:
  RealSqrt2 re_;
  RealSqrt2 im_;
};

std::ostream &operator<<(std::ostream &os, const FieldElem &x);

/// Sign of a real element. Throws NotReal when b or d is nonzero.
int real_sign(const FieldElem &x);

/// Quaternion z + w j with z, w in Q(i, sqrt2); j z = conj(z) j.
struct Quat {
  FieldElem z;
  FieldElem w;

  static Quat one() { return {1, 0}; }
  static Quat unit_i() { return {FieldElem::i(), 0}; }
  static Quat unit_j() { return {0, 1}; }
  static Quat unit_k() { return {0, FieldElem::i()}; }

  Quat conj() const { return {z.conj(), -w}; }
  /// Real part of the quaternion (the real part of z).
  FieldElem re() const { return z.re(); }
  /// Reduced norm conj(q) q = |z|^2 + |w|^2.
  FieldElem norm() const;
  bool is_zero() const { return z.is_zero() && w.is_zero(); }

  friend bool operator==(const Quat &, const Quat &) = default;
};

Quat operator+(const Quat &p, const Quat &q);
Quat operator-(const Quat &p, const Quat &q);
Quat operator-(const Quat &p);
Quat operator*(const Quat &p, const Quat &q);
/// Left scalar multiplication by an element of Q(i, sqrt2) embedded as z + 0j.
Quat operator*(const FieldElem &s, const Quat &q);

std::string to_string(const Quat &q);
std::ostream &operator<<(std::ostream &os, const Quat &q);

/// First-order jet val + eps*deriv with eps^2 = 0.
struct Jet {
  FieldElem val;
  FieldElem deriv;

  Jet() = default;
  Jet(FieldElem v, FieldElem d = 0) : val(std::move(v)), deriv(std::move(d)) {}

  Jet conj() const { return {val.conj(), deriv.conj()}; }
  Jet inverse() const;

  friend bool operator==(const Jet &, const Jet &) = default;
};

Jet operator+(const Jet &x, const Jet &y);
Jet operator-(const Jet &x, const Jet &y);
Jet operator-(const Jet &x);
Jet operator*(const Jet &x, const Jet &y);

} // namespace qtoledo
