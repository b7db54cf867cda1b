#pragma once

#include <cctype>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "coinv/core.hpp"

namespace coinv {

/// Dense exponent vector; variable x_{i+1} has exponent exps[i].
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int n) : e_(static_cast<std::size_t>(n), 0) {}
  Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int a : e_) require(a >= 0, "monomial exponents must be non-negative");
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  const std::vector<int>& exponents() const { return e_; }
  /// 1-based exponent of x_i.
  int exp(int i) const { return e_[static_cast<std::size_t>(i - 1)]; }
  int& exp(int i) { return e_[static_cast<std::size_t>(i - 1)]; }
  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  int max_exponent() const {
    int m = 0;
    for (int a : e_) m = std::max(m, a);
    return m;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    require(a.e_.size() == b.e_.size(), "monomial product: variable counts differ");
    Monomial out = a;
    for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] += b.e_[i];
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) continue;
      if (!s.empty()) s += '*';
      s += "x" + std::to_string(i + 1);
      if (e_[i] != 1) s += "^" + std::to_string(e_[i]);
    }
    return s.empty() ? "1" : s;
  }

  /// Parses "x1^6*x2*x4^2" (also accepting "1" and repeated variables) in n variables.
  static Monomial parse(const std::string& text, int n) {
    Monomial m(n);
    std::string t;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty() || t == "1") return m;
    std::size_t pos = 0;
    auto number = [&](const char* what) {
      std::size_t start = pos;
      while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
      require(pos > start, std::string("monomial '") + text + "': expected " + what);
      return std::stoi(t.substr(start, pos - start));
    };
    while (true) {
      require(pos < t.size() && t[pos] == 'x', "monomial '" + text + "': expected a variable x<i>");
      ++pos;
      int var = number("variable index");
      require(var >= 1 && var <= n, "monomial '" + text + "': variable x" + std::to_string(var) +
                                        " outside x1..x" + std::to_string(n));
      int power = 1;
      if (pos < t.size() && t[pos] == '^') {
        ++pos;
        power = number("exponent");
      }
      m.exp(var) += power;
      if (pos == t.size()) break;
      require(t[pos] == '*', "monomial '" + text + "': expected '*'");
      ++pos;
    }
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ULL;
    for (int a : m.exponents()) h = (h ^ static_cast<std::size_t>(a)) * 1099511628211ULL;
    return h;
  }
};

/// All exponent vectors in n variables of total degree d with every exponent < bound
/// (bound < 0 means unbounded), in lexicographically decreasing order.
inline std::vector<Monomial> monomials_of_degree(int n, int d, int bound = -1) {
  std::vector<Monomial> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  int cap = bound < 0 ? d : bound - 1;
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      if (remaining <= cap) {
        cur[static_cast<std::size_t>(pos)] = remaining;
        out.emplace_back(cur);
      }
      return;
    }
    for (int a = std::min(remaining, cap); a >= 0; --a) {
      cur[static_cast<std::size_t>(pos)] = a;
      self(self, pos + 1, remaining - a);
    }
  };
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

}  // namespace coinv
