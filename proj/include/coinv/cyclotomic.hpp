#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "coinv/core.hpp"

namespace coinv {

namespace detail {

inline std::vector<Integer> poly_div_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
  std::vector<Integer> q(num.size() - den.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = num[i + den.size() - 1] / den.back();
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q[i] * den[j];
  }
  return q;
}

}  // namespace detail

/// Coefficients of the r-th cyclotomic polynomial, lowest degree first.
inline const std::vector<Integer>& cyclotomic_polynomial(int r) {
  require(r >= 1, "cyclotomic_polynomial: r must be positive");
  static std::mutex mutex;
  static std::map<int, std::vector<Integer>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(r); it != cache.end()) return it->second;
  }
  std::vector<Integer> p(static_cast<std::size_t>(r) + 1, 0);
  p[0] = -1;
  p.back() = 1;
  for (int d = 1; d < r; ++d)
    if (r % d == 0) p = detail::poly_div_exact(p, cyclotomic_polynomial(d));
  std::lock_guard lock(mutex);
  return cache.emplace(r, std::move(p)).first->second;
}

/// Element of Q(xi), xi a primitive r-th root of unity, stored as a polynomial
/// in xi of degree below phi(r).
class CyclotomicNumber {
 public:
  CyclotomicNumber() = default;
  explicit CyclotomicNumber(int r, const Rational& value = 0) : r_(r) {
    require(r >= 1, "CyclotomicNumber: r must be positive");
    c_.assign(static_cast<std::size_t>(phi()), 0);
    c_[0] = value;
  }
  static CyclotomicNumber root_power(int r, int j) {
    CyclotomicNumber x(r);
    x.add_power(j, 1);
    return x;
  }

  int r() const { return r_; }
  int phi() const { return static_cast<int>(cyclotomic_polynomial(r_).size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }

  /// Adds v * xi^j.
  void add_power(int j, const Rational& v) {
    j = ((j % r_) + r_) % r_;
    std::vector<Rational> full(static_cast<std::size_t>(r_), 0);
    full[static_cast<std::size_t>(j)] = v;
    add_reduced(full);
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  const Rational& rational_part() const { return c_[0]; }

  /// Complex conjugate: xi -> xi^{-1}.
  CyclotomicNumber conj() const {
    CyclotomicNumber out(r_);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) out.add_power(-static_cast<int>(i), c_[i]);
    return out;
  }

  CyclotomicNumber& operator+=(const CyclotomicNumber& o) {
    require(r_ == o.r_, "CyclotomicNumber: mismatched r");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  CyclotomicNumber& operator-=(const CyclotomicNumber& o) {
    require(r_ == o.r_, "CyclotomicNumber: mismatched r");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  CyclotomicNumber& operator*=(const Rational& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& s) { return a *= s; }
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    require(a.r_ == b.r_, "CyclotomicNumber: mismatched r");
    std::vector<Rational> prod(a.c_.size() + b.c_.size(), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != 0)
        for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
    CyclotomicNumber out(a.r_);
    out.add_reduced(prod);
    return out;
  }
  CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a.r_ == b.r_ && a.c_ == b.c_;
  }
  bool operator==(const Rational& v) const { return is_rational() && c_[0] == v; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      std::string coeff = coinv::to_string(c_[i]);
      if (!s.empty()) s += c_[i] > 0 ? "+" : "";
      if (i == 0) {
        s += coeff;
        continue;
      }
      if (c_[i] == -1) s += "-";
      else if (c_[i] != 1) s += coeff + "*";
      s += i == 1 ? "z" : "z^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  // Adds an arbitrary-degree polynomial in xi after reducing modulo Phi_r.
  void add_reduced(std::vector<Rational> p) {
    const auto& phi_r = cyclotomic_polynomial(r_);
    std::size_t deg = phi_r.size() - 1;
    for (std::size_t i = p.size(); i-- > deg;) {
      if (p[i] == 0) continue;
      Rational lead = p[i];
      for (std::size_t j = 0; j <= deg; ++j) p[i - deg + j] -= lead * Rational(phi_r[j]);
    }
    for (std::size_t i = 0; i < deg && i < p.size(); ++i) c_[i] += p[i];
  }

  int r_ = 1;
  std::vector<Rational> c_{Rational(0)};
};

}  // namespace coinv
