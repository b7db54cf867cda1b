#pragma once

#include <map>
#include <string>

#include "coinv/monomial.hpp"

namespace coinv {

/// Sparse polynomial in a fixed number of variables with exact coefficients.
/// Terms are kept in a std::map, so iteration order (and hence every printed
/// form) is canonical.
template <class Coeff>
class Polynomial {
 public:
  using Terms = std::map<Monomial, Coeff>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : n_(nvars) {}
  static Polynomial constant(int nvars, const Coeff& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }
  static Polynomial term(const Monomial& m, const Coeff& c = Coeff(1)) {
    Polynomial p(m.nvars());
    p.add_term(m, c);
    return p;
  }

  int nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(const Monomial& m, const Coeff& c) {
    require(m.nvars() == n_, "polynomial: monomial has the wrong number of variables");
    if (c == Coeff(0)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Coeff(0)) terms_.erase(it);
    }
  }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    require(o.n_ == n_ || o.is_zero(), "polynomial sum: variable counts differ");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require(o.n_ == n_ || o.is_zero(), "polynomial difference: variable counts differ");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Coeff& s) {
    if (s == Coeff(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require(a.n_ == b.n_, "polynomial product: variable counts differ");
    Polynomial out(a.n_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_ && (a.n_ == b.n_ || a.is_zero());
  }

  /// Substitutes x_i -> x_{perm(i)} (perm is 1-based one-line notation).
  Polynomial permuted(const std::vector<int>& perm) const {
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) {
      Monomial t(n_);
      for (int i = 1; i <= n_; ++i) t.exp(perm[static_cast<std::size_t>(i - 1)]) = m.exp(i);
      out.add_term(t, c);
    }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    // highest monomials first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += "(" + coeff_string(it->second) + ")*" + it->first.to_string();
    }
    return s;
  }

 private:
  static std::string coeff_string(const Coeff& c) {
    if constexpr (requires { c.to_string(); }) return c.to_string();
    else return coinv::to_string(c);
  }

  int n_ = 0;
  Terms terms_;
};

using MultiPolynomial = Polynomial<Rational>;

}  // namespace coinv
