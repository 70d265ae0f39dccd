/**
 * @file cyclo.hpp
 * @brief Exact arithmetic in Q(q), q a primitive 2p-th root of unity, as Q[x]/Phi_2p.
 *
 * Values are stored as integer numerators over one positive common denominator,
 * in lowest terms. An element with p == 0 is an untagged rational constant.
 */
#pragma once

#include <complex>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "tqg/rational.hpp"

namespace tqg {

namespace detail {

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
inline std::vector<long> cyclotomic_polynomial(int n) {
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<long> div = cyclotomic_polynomial(d);
    int dd = static_cast<int>(div.size()) - 1;
    int dn = static_cast<int>(num.size()) - 1;
    std::vector<long> quot(dn - dd + 1, 0);
    for (int k = dn; k >= dd; --k) {
      long c = num[k];
      quot[k - dd] = c;
      for (int i = 0; i <= dd; ++i) num[k - dd + i] -= c * div[i];
    }
    num = quot;
  }
  return num;
}

struct CycloData {
  int p = 0;
  int d = 0;                             // phi(2p)
  std::vector<long> phi;                 // monic, size d + 1
  std::vector<std::vector<long>> power;  // x^k mod Phi for 0 <= k < 2p
};

inline const CycloData* cyclo_data(int p) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second.get();
  auto data = std::make_unique<CycloData>();
  data->p = p;
  data->phi = cyclotomic_polynomial(2 * p);
  data->d = static_cast<int>(data->phi.size()) - 1;
  std::vector<long> cur(data->d, 0);
  cur[0] = 1;
  for (int k = 0; k < 2 * p; ++k) {
    data->power.push_back(cur);
    // multiply by x and reduce
    long top = cur[data->d - 1];
    for (int i = data->d - 1; i > 0; --i) cur[i] = cur[i - 1] - top * data->phi[i];
    cur[0] = -top * data->phi[0];
  }
  const CycloData* raw = data.get();
  cache.emplace(p, std::move(data));
  return raw;
}

// Dense polynomials over Q for the extended gcd.
using QPoly = std::vector<Rational>;

inline void trim(QPoly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

inline void poly_divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  r = a;
}

inline QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

}  // namespace detail

class Cyclo {
 public:
  Cyclo() : num_(1, Integer(0)), den_(1) {}
  Cyclo(long v) : num_(1, Integer(v)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Cyclo(const Rational& r) : num_(1, r.get_num()), den_(r.get_den()) {}  // NOLINT

  /// Element of Q(q) from rational coefficients of 1, q, q^2, ... (any length).
  Cyclo(int p, const std::vector<Rational>& coeffs) {
    if (p < 2) throw ParameterError("Cyclo needs p >= 2");
    ctx_ = detail::cyclo_data(p);
    Integer den(1);
    for (const auto& c : coeffs) den = lcm_(den, c.get_den());
    std::vector<Integer> raw(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) raw[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
    num_ = reduce_(raw);
    den_ = den;
    normalize_();
  }

  static Cyclo q_power(int p, long k) {
    if (p < 2) throw ParameterError("Cyclo needs p >= 2");
    Cyclo r;
    r.ctx_ = detail::cyclo_data(p);
    long m = ((k % (2 * p)) + 2 * p) % (2 * p);
    const auto& pw = r.ctx_->power[m];
    r.num_.assign(pw.begin(), pw.end());
    r.den_ = 1;
    return r;
  }
  static Cyclo q(int p) { return q_power(p, 1); }

  /// 0 for an untagged rational constant.
  int p() const { return ctx_ ? ctx_->p : 0; }
  int degree() const { return ctx_ ? ctx_->d : 1; }

  bool is_zero() const {
    for (const auto& c : num_)
      if (sgn(c) != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < num_.size(); ++i)
      if (sgn(num_[i]) != 0) return false;
    return true;
  }
  bool is_one() const { return is_rational() && den_ == 1 && num_[0] == 1; }

  Rational coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(num_.size())) return Rational(0);
    Rational r(num_[j], den_);
    r.canonicalize();
    return r;
  }
  std::vector<Rational> coeffs() const {
    std::vector<Rational> out(degree());
    for (int j = 0; j < degree(); ++j) out[j] = coeff(j);
    return out;
  }
  Rational rational_value() const {
    if (!is_rational()) throw ConsistencyError("irrational cyclotomic value " + str());
    return coeff(0);
  }

  /// Evaluate under q -> exp(i*pi*k/p); k must be coprime to 2p.
  std::complex<long double> embed(int k = 1) const {
    std::complex<long double> acc = 0;
    long double pp = ctx_ ? ctx_->p : 1;
    long double den = den_.get_d();
    const long double pi = std::acos(-1.0L);
    for (size_t j = 0; j < num_.size(); ++j) {
      if (sgn(num_[j]) == 0) continue;
      long double ang = pi * k * static_cast<long double>(j) / pp;
      acc += std::complex<long double>(std::cos(ang), std::sin(ang)) *
             (static_cast<long double>(num_[j].get_d()) / den);
    }
    return acc;
  }

  std::string str() const {
    if (is_rational()) return coeff(0).get_str();
    std::string s;
    for (int j = 0; j < degree(); ++j) {
      Rational c = coeff(j);
      if (sgn(c) == 0) continue;
      if (!s.empty() && sgn(c) > 0) s += "+";
      std::string mon = j == 0 ? "" : (j == 1 ? "q" : "q^" + std::to_string(j));
      if (j == 0) s += c.get_str();
      else if (c == 1) s += mon;
      else if (c == -1) s += "-" + mon;
      else s += c.get_str() + "*" + mon;
    }
    return s;
  }

  Cyclo operator-() const {
    Cyclo r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
  }

  Cyclo& operator+=(const Cyclo& o) { return add_(o, 1); }
  Cyclo& operator-=(const Cyclo& o) { return add_(o, -1); }

  Cyclo& operator*=(const Cyclo& o) {
    const detail::CycloData* ctx = join_(o);
    if (o.num_.size() == 1 || num_.size() == 1) {
      const Cyclo& scalar = o.num_.size() == 1 ? o : *this;
      const Cyclo& vec = o.num_.size() == 1 ? *this : o;
      std::vector<Integer> out(vec.num_.size());
      for (size_t i = 0; i < out.size(); ++i) out[i] = vec.num_[i] * scalar.num_[0];
      Integer den = den_ * o.den_;
      num_ = std::move(out);
      den_ = std::move(den);
      ctx_ = ctx;
      normalize_();
      return *this;
    }
    const int d = ctx->d;
    std::vector<Integer> prod(2 * d - 1);
    for (int i = 0; i < d; ++i) {
      if (sgn(num_[i]) == 0) continue;
      for (int j = 0; j < d; ++j) {
        if (sgn(o.num_[j]) == 0) continue;
        mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
      }
    }
    ctx_ = ctx;
    num_ = reduce_(prod);
    den_ *= o.den_;
    normalize_();
    return *this;
  }

  Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }

  /// Inverse via the extended gcd with Phi_2p.
  Cyclo inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(q)");
    if (is_rational() || !ctx_) {
      Rational v = 1 / coeff(0);
      Cyclo r(v);
      r.ctx_ = ctx_;
      r.pad_();
      return r;
    }
    using detail::QPoly;
    QPoly a = coeffs();
    detail::trim(a);
    QPoly m(ctx_->phi.begin(), ctx_->phi.end());
    // invariant: s * a == r (mod m)
    QPoly r0 = m, r1 = a, s0 = {}, s1 = {Rational(1)};
    while (!(r1.size() == 1)) {
      QPoly quot, rem;
      detail::poly_divmod(r0, r1, quot, rem);
      QPoly s2 = detail::poly_sub(s0, detail::poly_mul(quot, s1));
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
      if (r1.empty()) throw ConsistencyError("cyclotomic inverse: nontrivial gcd");
    }
    Rational c = r1[0];
    for (auto& x : s1) x /= c;
    return Cyclo(ctx_->p, s1);
  }

  friend Cyclo operator+(Cyclo x, const Cyclo& y) { return x += y; }
  friend Cyclo operator-(Cyclo x, const Cyclo& y) { return x -= y; }
  friend Cyclo operator*(Cyclo x, const Cyclo& y) { return x *= y; }
  friend Cyclo operator/(Cyclo x, const Cyclo& y) { return x /= y; }
  friend bool operator==(const Cyclo& x, const Cyclo& y) {
    x.join_(y);
    if (x.den_ != y.den_) return false;
    size_t n = std::max(x.num_.size(), y.num_.size());
    for (size_t i = 0; i < n; ++i) {
      const Integer zero(0);
      const Integer& a = i < x.num_.size() ? x.num_[i] : zero;
      const Integer& b = i < y.num_.size() ? y.num_[i] : zero;
      if (a != b) return false;
    }
    return true;
  }
  friend bool operator!=(const Cyclo& x, const Cyclo& y) { return !(x == y); }
  friend std::ostream& operator<<(std::ostream& os, const Cyclo& x) { return os << x.str(); }

 private:
  static Integer lcm_(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }

  const detail::CycloData* join_(const Cyclo& o) const {
    if (!ctx_) return o.ctx_;
    if (o.ctx_ && o.ctx_ != ctx_) throw ParameterError("Cyclo: mismatched p");
    return ctx_;
  }

  void pad_() {
    if (ctx_) num_.resize(ctx_->d);
  }

  std::vector<Integer> reduce_(std::vector<Integer>& raw) const {
    const int d = ctx_->d;
    for (int k = static_cast<int>(raw.size()) - 1; k >= d; --k) {
      if (sgn(raw[k]) == 0) continue;
      for (int i = 0; i < d; ++i) {
        long c = ctx_->phi[i];
        if (c != 0) raw[k - d + i] -= raw[k] * c;
      }
    }
    raw.resize(d);
    return std::move(raw);
  }

  Cyclo& add_(const Cyclo& o, int sign) {
    const detail::CycloData* ctx = join_(o);
    ctx_ = ctx;
    pad_();
    if (den_ == o.den_) {
      for (size_t i = 0; i < o.num_.size(); ++i) {
        if (sign > 0) num_[i] += o.num_[i];
        else num_[i] -= o.num_[i];
      }
    } else {
      for (auto& c : num_) c *= o.den_;
      for (size_t i = 0; i < o.num_.size(); ++i) {
        if (sgn(o.num_[i]) == 0) continue;
        if (sign > 0) mpz_addmul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), den_.get_mpz_t());
        else mpz_submul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), den_.get_mpz_t());
      }
      den_ *= o.den_;
    }
    normalize_();
    return *this;
  }

  void normalize_() {
    pad_();
    if (den_ == 1) return;
    Integer g = den_;
    for (const auto& c : num_) {
      if (sgn(c) == 0) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) return;
    }
    bool zero = true;
    for (const auto& c : num_) zero = zero && sgn(c) == 0;
    if (zero) {
      den_ = 1;
      return;
    }
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }

  const detail::CycloData* ctx_ = nullptr;
  std::vector<Integer> num_;
  Integer den_;
};

inline bool is_zero(const Cyclo& x) { return x.is_zero(); }

/// [n] = (q^n - q^-n) / (q - q^-1).
inline Cyclo quantum_int(long n, int p) {
  if (p < 2) throw ParameterError("quantum_int needs p >= 2");
  // [n] = sum_{j=0}^{n-1} q^{n-1-2j} for n > 0, and [-n] = -[n].
  long m = n < 0 ? -n : n;
  std::vector<Rational> c(2 * p, Rational(0));
  for (long j = 0; j < m; ++j) {
    long e = ((m - 1 - 2 * j) % (2 * p) + 2 * p) % (2 * p);
    c[e] += 1;
  }
  Cyclo value(p, c);
  return n < 0 ? -value : value;
}

}  // namespace tqg
