// Exact complex-rational arithmetic. Every quantity in this library is a
// Scalar or is built from Scalars; there is no floating point on any
// decision path.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace opset {

using Rational = mpq_class;

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text (files, flags, numbers).
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// Structurally invalid arguments (dimension mismatch, bad bipartition, ...).
struct DimensionError : Error {
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

/// An operation's stated precondition does not hold for the given input.
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

/// A complex number with exact rational real and imaginary parts.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() : re(0), im(0) {}
  Scalar(long r) : re(r), im(0) {}  // NOLINT: implicit by design
  Scalar(Rational r) : re(std::move(r)), im(0) {}
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Scalar conj() const { return Scalar(re, -im); }

  /// Squared modulus |z|^2, a nonnegative rational.
  Rational norm2() const { return re * re + im * im; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.re + b.re, a.im + b.im);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.re - b.re, a.im - b.im);
  }
  friend Scalar operator-(const Scalar& a) { return Scalar(-a.re, -a.im); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw Error("division by zero Scalar");
    Rational n = b.norm2();
    Scalar p = a * b.conj();
    return Scalar(p.re / n, p.im / n);
  }
  Scalar& operator+=(const Scalar& o) { re += o.re; im += o.im; return *this; }
  Scalar& operator-=(const Scalar& o) { re -= o.re; im -= o.im; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

/// Canonical text form of a rational: "p" when the denominator is 1,
/// otherwise "p/q" with q > 0 and gcd(p, q) = 1.
std::string rational_to_string(const Rational& r);

/// Strict inverse of rational_to_string. Accepts an optional leading '-',
/// then digits, then an optional "/digits" part. Rejects everything else.
Rational parse_rational(const std::string& text);

/// Total order on rationals-as-text for canonical sorting of scalars.
int compare(const Scalar& a, const Scalar& b);

std::string scalar_to_string(const Scalar& s);

}  // namespace opset
