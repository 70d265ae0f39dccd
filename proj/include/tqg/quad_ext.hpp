/**
 * @file quad_ext.hpp
 * @brief Exact arithmetic in Q(sqrt(2p)).
 *
 * Elements are a + b*sqrt(2p). An element with p == 0 is an untagged rational
 * constant and adopts the tag of the other operand in mixed arithmetic.
 * When 2p is a perfect square the b-part is folded into a.
 */
#pragma once

#include <cmath>
#include <ostream>
#include <string>

#include "tqg/rational.hpp"

namespace tqg {

class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadExt(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadExt(const Rational& a, const Rational& b, int p) : a_(a), b_(b), p_(p) {
    if (p < 2) throw ParameterError("QuadExt needs p >= 2");
    canonicalize();
  }

  /// sqrt(2p) itself.
  static QuadExt root(int p) { return QuadExt(0, 1, p); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  int p() const { return p_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  const Rational& rational_value() const {
    if (!is_rational()) throw ConsistencyError("irrational value " + str());
    return a_;
  }

  long double to_long_double() const {
    long double r = a_.get_d();
    if (sgn(b_) != 0) r += static_cast<long double>(b_.get_d()) * std::sqrt(2.0L * p_);
    return r;
  }

  std::string str() const {
    if (is_rational()) return a_.get_str();
    std::string s = sgn(a_) == 0 ? "" : a_.get_str() + (sgn(b_) > 0 ? "+" : "");
    return s + b_.get_str() + "*sqrt(" + std::to_string(2 * p_) + ")";
  }

  QuadExt operator-() const {
    QuadExt r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
  }

  QuadExt& operator+=(const QuadExt& o) {
    p_ = join(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadExt& operator-=(const QuadExt& o) {
    p_ = join(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadExt& operator*=(const QuadExt& o) {
    int p = join(o);
    Rational a = a_ * o.a_ + Rational(2 * p) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    p_ = p;
    canonicalize();
    return *this;
  }
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

  QuadExt inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt(2p))");
    Rational norm = a_ * a_ - Rational(2 * p_) * b_ * b_;
    QuadExt r = *this;
    r.a_ = a_ / norm;
    r.b_ = -b_ / norm;
    return r;
  }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    if (x.p_ != 0 && y.p_ != 0 && x.p_ != y.p_) throw ParameterError("QuadExt: mismatched p");
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
  friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

 private:
  int join(const QuadExt& o) const {
    if (p_ == 0) return o.p_;
    if (o.p_ != 0 && o.p_ != p_) throw ParameterError("QuadExt: mismatched p");
    return p_;
  }

  void canonicalize() {
    if (p_ == 0 || sgn(b_) == 0) return;
    Integer n(2 * p_), r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r == n) {
      a_ += b_ * Rational(r);
      b_ = 0;
    }
  }

  Rational a_{0};
  Rational b_{0};
  int p_ = 0;
};

inline bool is_zero(const QuadExt& x) { return x.is_zero(); }

}  // namespace tqg
