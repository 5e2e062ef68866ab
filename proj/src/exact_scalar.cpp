#include "dirac/exact_scalar.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace dirac {

namespace {

// Element of Q(sqrt2) as (rational part, sqrt2 part).
struct Real2 {
  Rational p, q;
};

Real2 mul(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return {a * c + 2 * b * d, a * d + b * c};
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

// sqrt of a nonnegative x + y*sqrt2 as a + b*sqrt2 with rational a, b.
std::optional<ExactScalar> sqrt_in_q_sqrt2(const Rational& x, const Rational& y) {
  if (sgn(y) == 0) {
    if (auto r = rational_sqrt(x)) return ExactScalar(*r);
    Rational half = x / 2;
    if (auto r = rational_sqrt(half)) return ExactScalar(0, *r, 0, 0);
    return std::nullopt;
  }
  // a^2 + 2 b^2 = x, 2ab = y  =>  a^2 = (x +- sqrt(x^2 - 2y^2)) / 2
  auto disc = rational_sqrt(x * x - 2 * y * y);
  if (!disc) return std::nullopt;
  for (const Rational& a2 : {Rational((x + *disc) / 2), Rational((x - *disc) / 2)}) {
    if (sgn(a2) <= 0) continue;
    auto a = rational_sqrt(a2);
    if (!a) continue;
    Rational b = y / (2 * *a);
    if (*a * *a + 2 * b * b == x) return ExactScalar(*a, b, 0, 0);
  }
  return std::nullopt;
}

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  ExactScalar parse() {
    ExactScalar v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  ExactScalar expr() {
    ExactScalar v = term();
    for (;;) {
      skip_space();
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  ExactScalar term() {
    ExactScalar v = unary();
    for (;;) {
      skip_space();
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        ExactScalar den = unary();
        if (den.is_zero()) fail("division by zero");
        v /= den;
      } else {
        return v;
      }
    }
  }

  ExactScalar unary() {
    skip_space();
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return primary();
  }

  ExactScalar primary() {
    skip_space();
    if (eat('(')) {
      ExactScalar v = expr();
      skip_space();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ExactScalar(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (text_.substr(pos_, 2) == "r2") {
      pos_ += 2;
      return ExactScalar::sqrt2();
    }
    if (eat('i')) return ExactScalar::i();
    fail("expected a number, 'r2', 'i' or '('");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const char* what) const {
    std::ostringstream os;
    os << "cannot parse scalar '" << text_ << "' at offset " << pos_ << ": " << what;
    throw std::invalid_argument(os.str());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  if (o.is_zero()) return *this;
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  if (o.is_zero()) return *this;
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (x.is_rational() && y.is_rational()) return {x.a_ * y.a_, 0, 0, 0};
  // (X1 + i Y1)(X2 + i Y2) with X, Y in Q(sqrt2)
  Real2 xx = mul(x.a_, x.b_, y.a_, y.b_);
  Real2 yy = mul(x.c_, x.d_, y.c_, y.d_);
  Real2 xy = mul(x.a_, x.b_, y.c_, y.d_);
  Real2 yx = mul(x.c_, x.d_, y.a_, y.b_);
  return {xx.p - yy.p, xx.q - yy.q, xy.p + yx.p, xy.q + yx.q};
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  *this = *this * o;
  return *this;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(sqrt2, i)");
  // 1/z = conj(z) / |z|^2, |z|^2 = X^2 + Y^2 in Q(sqrt2), nonzero because Q(sqrt2) is real.
  Real2 x2 = mul(a_, b_, a_, b_);
  Real2 y2 = mul(c_, d_, c_, d_);
  Rational p = x2.p + y2.p;
  Rational q = x2.q + y2.q;
  // 1/(p + q sqrt2) = (p - q sqrt2) / (p^2 - 2 q^2)
  Rational norm = p * p - 2 * q * q;
  ExactScalar inv_abs2(p / norm, -q / norm, 0, 0);
  return conj() * inv_abs2;
}

int ExactScalar::real_sign() const {
  if (!is_real()) throw std::domain_error("sign of a non-real scalar");
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with 2 b^2
  int cmp_ = cmp(a_ * a_, 2 * b_ * b_);
  return cmp_ > 0 ? sa : sb;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string ExactScalar::to_string() const {
  return dirac::to_string(a_) + " + " + dirac::to_string(b_) + "*r2 + i*(" + dirac::to_string(c_) +
         " + " + dirac::to_string(d_) + "*r2)";
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << x.to_string(); }

ExactScalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

std::optional<ExactScalar> exact_sqrt(const ExactScalar& x) {
  if (!x.is_real()) return std::nullopt;
  if (x.is_zero()) return ExactScalar(0);
  if (x.real_sign() > 0) return sqrt_in_q_sqrt2(x.a(), x.b());
  auto r = sqrt_in_q_sqrt2(-x.a(), -x.b());
  if (!r) return std::nullopt;
  return ExactScalar::i() * *r;
}

}  // namespace dirac
