#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace dirac {

/// Arbitrary-precision rational in lowest terms (GMP keeps results canonical).
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error on a zero denominator.
Rational make_rational(long num, long den = 1);

/// Element a + b*sqrt(2) + i*(c + d*sqrt(2)) of the field Q(sqrt 2, i).
///
/// Every constant that shows up in the sl(2) computations (1/sqrt2, i/sqrt2,
/// the rescaling factors of the transitive-triple maps) lives here, so all
/// arithmetic in the library is exact. Zero tests never use a tolerance.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(int v) : a_(v) {}           // NOLINT(google-explicit-constructor)
  ExactScalar(long v) : a_(v) {}          // NOLINT(google-explicit-constructor)
  ExactScalar(const Rational& v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static ExactScalar sqrt2() { return {0, 1, 0, 0}; }
  static ExactScalar i() { return {0, 0, 1, 0}; }
  static ExactScalar rational(long num, long den = 1) { return ExactScalar(make_rational(num, den)); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
  bool is_rational() const { return sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
  bool is_real() const { return sgn(c_) == 0 && sgn(d_) == 0; }

  /// Complex conjugation: i -> -i.
  ExactScalar conj() const { return {a_, b_, -c_, -d_}; }
  /// Galois conjugation sqrt2 -> -sqrt2.
  ExactScalar sqrt2_conj() const { return {a_, -b_, c_, -d_}; }

  /// Multiplicative inverse; throws std::domain_error for zero.
  ExactScalar inverse() const;

  /// Sign of a real element (-1, 0, +1); throws std::domain_error if not real.
  int real_sign() const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o) { return *this *= o.inverse(); }

  friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
  friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y);
  friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }
  ExactScalar operator-() const { return {-a_, -b_, -c_, -d_}; }
  ExactScalar operator+() const { return *this; }

  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

  /// Canonical rendering "a + b*r2 + i*(c + d*r2)"; rationals print as "p" or "p/q".
  std::string to_string() const;

 private:
  Rational a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

/// Parses expressions over integers, '/', 'r2' (sqrt 2), 'i', '+', '-', '*',
/// and parentheses. Accepts the canonical rendering. Throws std::invalid_argument.
ExactScalar parse_scalar(std::string_view text);

/// Exact square root when it exists in the field. Supported for real inputs
/// (negative ones pick up a factor i); returns nullopt otherwise.
std::optional<ExactScalar> exact_sqrt(const ExactScalar& x);

std::string to_string(const Rational& q);

}  // namespace dirac

namespace Eigen {

template <>
struct NumTraits<dirac::ExactScalar> : GenericNumTraits<dirac::ExactScalar> {
  using Real = dirac::ExactScalar;
  using NonInteger = dirac::ExactScalar;
  using Nested = dirac::ExactScalar;
  using Literal = dirac::ExactScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

}  // namespace Eigen
