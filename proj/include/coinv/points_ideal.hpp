#pragma once

// Top-degree ideals of finite point sets: reflection-group orbits, indicator
// polynomials, and the standard monomials of T(X) under graded reverse lex.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "coinv/combinatorics.hpp"
#include "coinv/monomial.hpp"

namespace coinv {

/// a + b sqrt(d) with rational a, b and a square-free d >= 1 (d = 1 forces b = 0).
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(Rational a, Rational b = 0, int d = 1) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    require(d >= 1 && is_square_free(d), "QuadraticNumber: d must be a square-free positive integer");
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
    }
    if (b_ == 0) d_ = 1;
  }
  static bool is_square_free(int d) {
    for (int p = 2; p * p <= d; ++p)
      if (d % (p * p) == 0) return false;
    return true;
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  /// 1 for rational values.
  int d() const { return d_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    int d = common(x, y);
    return QuadraticNumber(x.a_ + y.a_, x.b_ + y.b_, d);
  }
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
    int d = common(x, y);
    return QuadraticNumber(x.a_ - y.a_, x.b_ - y.b_, d);
  }
  QuadraticNumber operator-() const { return QuadraticNumber(-a_, -b_, d_); }
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    int d = common(x, y);
    return QuadraticNumber(x.a_ * y.a_ + Rational(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  QuadraticNumber inverse() const {
    require(!is_zero(), "QuadraticNumber: division by zero");
    Rational n = norm();
    return QuadraticNumber(a_ / n, -b_ / n, d_);
  }
  friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) { return x * y.inverse(); }
  QuadraticNumber& operator+=(const QuadraticNumber& o) { return *this = *this + o; }
  QuadraticNumber& operator-=(const QuadraticNumber& o) { return *this = *this - o; }
  QuadraticNumber& operator*=(const QuadraticNumber& o) { return *this = *this * o; }

  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
  }
  /// Arbitrary but fixed total order, used to store points in sets.
  friend bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.a_ != y.a_) return x.a_ < y.a_;
    if (x.b_ != y.b_) return x.b_ < y.b_;
    return x.d_ < y.d_;
  }

  std::string to_string() const {
    if (b_ == 0) return coinv::to_string(a_);
    std::string root = "sqrt(" + std::to_string(d_) + ")";
    std::string bpart = b_ == 1 ? root : b_ == -1 ? "-" + root : coinv::to_string(b_) + "*" + root;
    if (a_ == 0) return bpart;
    return coinv::to_string(a_) + (b_ > 0 ? "+" : "") + bpart;
  }

 private:
  static int common(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.b_ == 0) return y.d_;
    if (y.b_ == 0) return x.d_;
    require(x.d_ == y.d_, "QuadraticNumber: mixed radicals sqrt(" + std::to_string(x.d_) + ") and sqrt(" +
                              std::to_string(y.d_) + ")");
    return x.d_;
  }

  Rational a_ = 0, b_ = 0;
  int d_ = 1;
};

using Point = std::vector<QuadraticNumber>;

inline std::string point_to_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].to_string();
  return s + ")";
}

/// Permutation word with a sign per position: (w.p)_{w(i)} = s_i p_i.
struct SignedPermutation {
  std::vector<int> word;
  std::vector<int> signs;

  int size() const { return static_cast<int>(word.size()); }
  Point apply(const Point& p) const {
    require(p.size() == word.size(), "SignedPermutation: point has the wrong dimension");
    Point out(p.size());
    for (std::size_t i = 0; i < word.size(); ++i)
      out[static_cast<std::size_t>(word[i] - 1)] = signs[i] < 0 ? -p[i] : p[i];
    return out;
  }
};

inline constexpr int kReflectionGroupGuard = 5;

/// The 2^{n-1} n! signed permutations with an even number of sign changes.
inline std::vector<SignedPermutation> dn_elements(int n) {
  require(n >= 1, "dn_elements: n must be positive");
  if (n > kReflectionGroupGuard)
    throw resource_error("dn_elements: n = " + std::to_string(n) + " exceeds the guard " + std::to_string(kReflectionGroupGuard));
  std::vector<SignedPermutation> out;
  for (const auto& sigma : all_permutations(n))
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      if (std::popcount(mask) % 2) continue;
      SignedPermutation g{sigma.word(), std::vector<int>(static_cast<std::size_t>(n), 1)};
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1U) g.signs[static_cast<std::size_t>(i)] = -1;
      out.push_back(std::move(g));
    }
  return out;
}

inline std::set<Point> orbit(const std::vector<SignedPermutation>& group, const Point& p) {
  std::set<Point> out;
  for (const auto& g : group) out.insert(g.apply(p));
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials with quadratic coefficients, ordered by graded reverse lex.

/// Graded reverse lexicographic comparison with x1 > x2 > ... : true when a < b.
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (int i = a.nvars(); i >= 1; --i)
    if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i);
  return false;
}

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(a, b); }
};

class ExactPolynomial {
 public:
  ExactPolynomial() = default;
  explicit ExactPolynomial(int n) : n_(n) {}

  int nvars() const { return n_; }
  const std::map<Monomial, QuadraticNumber, GrevlexLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Monomial& m, const QuadraticNumber& c) {
    require(m.nvars() == n_, "ExactPolynomial: monomial has the wrong number of variables");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  const Monomial& leading_monomial() const {
    require(!terms_.empty(), "leading_monomial: zero polynomial");
    return terms_.rbegin()->first;
  }
  int degree() const { return terms_.empty() ? -1 : leading_monomial().degree(); }

  QuadraticNumber evaluate(const Point& p) const {
    require(static_cast<int>(p.size()) == n_, "evaluate: point has the wrong dimension");
    QuadraticNumber total;
    for (const auto& [m, c] : terms_) {
      QuadraticNumber v = c;
      for (int i = 1; i <= n_; ++i)
        for (int t = 0; t < m.exp(i); ++t) v *= p[static_cast<std::size_t>(i - 1)];
      total += v;
    }
    return total;
  }

  friend ExactPolynomial operator*(const ExactPolynomial& f, const ExactPolynomial& g) {
    require(f.n_ == g.n_, "ExactPolynomial: variable counts differ");
    ExactPolynomial out(f.n_);
    for (const auto& [m1, c1] : f.terms_)
      for (const auto& [m2, c2] : g.terms_) out.add_term(m1 * m2, c1 * c2);
    return out;
  }
  friend bool operator==(const ExactPolynomial& f, const ExactPolynomial& g) {
    return f.n_ == g.n_ && f.terms_ == g.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += "(" + it->second.to_string() + ")*" + it->first.to_string();
    }
    return s;
  }

 private:
  int n_ = 0;
  std::map<Monomial, QuadraticNumber, GrevlexLess> terms_;
};

/// Product over the other points y of (x_i - y_i)/(p_i - y_i), i the first
/// coordinate where p and y differ.
inline ExactPolynomial indicator(const std::vector<Point>& points, const Point& p) {
  int n = static_cast<int>(p.size());
  std::set<Point> seen;
  bool found = false;
  for (const auto& y : points) {
    require(static_cast<int>(y.size()) == n, "indicator: points have different dimensions");
    require(seen.insert(y).second, "indicator: duplicate point " + point_to_string(y));
    found = found || y == p;
  }
  require(found, "indicator: the point is not in X");
  ExactPolynomial f(n);
  f.add_term(Monomial(n), QuadraticNumber(1));
  for (const auto& y : points) {
    if (y == p) continue;
    int i = 0;
    while (p[static_cast<std::size_t>(i)] == y[static_cast<std::size_t>(i)]) ++i;
    QuadraticNumber scale = (p[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(i)]).inverse();
    ExactPolynomial factor(n);
    Monomial xi(n);
    xi.exp(i + 1) = 1;
    factor.add_term(xi, scale);
    factor.add_term(Monomial(n), -(y[static_cast<std::size_t>(i)] * scale));
    f = f * factor;
  }
  return f;
}

inline ExactPolynomial top_degree(const ExactPolynomial& f) {
  require(!f.is_zero(), "top_degree: zero polynomial");
  int d = f.degree();
  ExactPolynomial out(f.nvars());
  for (const auto& [m, c] : f.terms())
    if (m.degree() == d) out.add_term(m, c);
  return out;
}

/// Monomials divisible by no leading monomial of P, in increasing grevlex order.
/// Finite exactly when every variable has a pure power among the leading monomials.
inline std::vector<Monomial> staircase(const std::vector<ExactPolynomial>& generators, int n) {
  std::vector<Monomial> leads;
  for (const auto& g : generators) {
    require(g.nvars() == n, "staircase: generator has the wrong number of variables");
    if (!g.is_zero()) leads.push_back(g.leading_monomial());
  }
  std::vector<int> bound(static_cast<std::size_t>(n), -1);
  for (const auto& m : leads)
    for (int i = 1; i <= n; ++i)
      if (m.exp(i) == m.degree() && m.degree() > 0 &&
          (bound[static_cast<std::size_t>(i - 1)] < 0 || m.degree() < bound[static_cast<std::size_t>(i - 1)]))
        bound[static_cast<std::size_t>(i - 1)] = m.degree();
  for (int i = 0; i < n; ++i)
    require(bound[static_cast<std::size_t>(i)] > 0,
            "staircase: infinite, no pure power of x" + std::to_string(i + 1) + " among the leading monomials");
  std::vector<Monomial> out;
  Monomial cur(n);
  auto rec = [&](auto&& self, int i) -> void {
    if (i > n) {
      for (const auto& m : leads)
        if (m.divides(cur)) return;
      out.push_back(cur);
      return;
    }
    for (int a = 0; a < bound[static_cast<std::size_t>(i - 1)]; ++a) {
      cur.exp(i) = a;
      self(self, i + 1);
    }
    cur.exp(i) = 0;
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), grevlex_less);
  return out;
}

// ---------------------------------------------------------------------------
// The top-degree ideal.

struct TIdealGenerator {
  ExactPolynomial top;      // tau(f), an element of T(X)
  ExactPolynomial witness;  // f, vanishing on X
};

struct TIdealResult {
  int n = 0;
  std::vector<TIdealGenerator> generators;
  std::vector<Monomial> staircase;  // increasing grevlex
  QPolynomial hilbert;
};

namespace detail {

inline QuadraticNumber evaluate_monomial(const Monomial& m, const Point& p) {
  QuadraticNumber v(1);
  for (int i = 1; i <= m.nvars(); ++i)
    for (int t = 0; t < m.exp(i); ++t) v *= p[static_cast<std::size_t>(i - 1)];
  return v;
}

// Incremental elimination of evaluation vectors. Each basis row remembers which
// combination of the accepted monomials produced it.
class EvaluationEliminator {
 public:
  explicit EvaluationEliminator(const std::vector<Point>& points) : points_(points) {}

  /// Adds m; when ev(m) depends on the accepted monomials, returns the
  /// vanishing polynomial m - sum c_s s instead.
  bool try_accept(const Monomial& m, ExactPolynomial& vanishing) {
    std::vector<QuadraticNumber> v;
    for (const auto& p : points_) v.push_back(evaluate_monomial(m, p));
    std::vector<QuadraticNumber> comb(accepted_.size() + 1);
    comb.back() = QuadraticNumber(1);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      QuadraticNumber c = v[static_cast<std::size_t>(pivots_[r])];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * rows_[r][j];
      for (std::size_t j = 0; j < combos_[r].size(); ++j) comb[j] -= c * combos_[r][j];
    }
    int pivot = -1;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) {
        pivot = static_cast<int>(j);
        break;
      }
    if (pivot < 0) {
      vanishing = ExactPolynomial(m.nvars());
      for (std::size_t j = 0; j < accepted_.size(); ++j) vanishing.add_term(accepted_[j], comb[j]);
      vanishing.add_term(m, comb.back());
      return false;
    }
    QuadraticNumber inv = v[static_cast<std::size_t>(pivot)].inverse();
    for (auto& x : v) x *= inv;
    for (auto& x : comb) x *= inv;
    rows_.push_back(std::move(v));
    combos_.push_back(std::move(comb));
    pivots_.push_back(pivot);
    accepted_.push_back(m);
    return true;
  }

  const std::vector<Monomial>& accepted() const { return accepted_; }

 private:
  const std::vector<Point>& points_;
  std::vector<Monomial> accepted_;
  std::vector<std::vector<QuadraticNumber>> rows_;
  std::vector<std::vector<QuadraticNumber>> combos_;
  std::vector<int> pivots_;
};

inline void check_points(const std::vector<Point>& points) {
  require(!points.empty(), "compute_t_ideal: X must be non-empty");
  std::set<Point> seen;
  int d = 1;
  for (const auto& p : points) {
    require(p.size() == points.front().size(), "compute_t_ideal: points have different dimensions");
    require(seen.insert(p).second, "compute_t_ideal: duplicate point " + point_to_string(p));
    for (const auto& x : p) {
      if (x.d() == 1) continue;
      require(d == 1 || d == x.d(), "compute_t_ideal: points mix sqrt(" + std::to_string(d) + ") and sqrt(" +
                                        std::to_string(x.d()) + ")");
      d = x.d();
    }
  }
}

inline QPolynomial hilbert_of(const std::vector<Monomial>& stair) {
  QPolynomial h;
  for (const auto& m : stair) h += QPolynomial::monomial(m.degree());
  return h;
}

}  // namespace detail

inline constexpr int kPointGuard = 64;

/// Degree-by-degree sweep in increasing grevlex order: a monomial outside the
/// current staircase is standard when its evaluation vector is independent of
/// the smaller standard ones; otherwise the dependency gives f vanishing on X
/// with leading monomial m, and tau(f) joins P. A degree with no new standard
/// monomial ends the sweep, since every later monomial is then a multiple of a
/// leading monomial. P lies in T(X) and dim C[x]/T(X) = |X|, so a staircase of
/// size |X| is the standard monomial basis of the quotient.
inline TIdealResult compute_t_ideal(const std::vector<Point>& points) {
  detail::check_points(points);
  if (static_cast<int>(points.size()) > kPointGuard)
    throw resource_error("compute_t_ideal: |X| = " + std::to_string(points.size()) + " exceeds the guard " +
                         std::to_string(kPointGuard));
  int n = static_cast<int>(points.front().size());
  TIdealResult result;
  result.n = n;
  detail::EvaluationEliminator elim(points);
  std::vector<Monomial> leads;
  for (int d = 0;; ++d) {
    std::vector<Monomial> degree_monomials = monomials_of_degree(n, d);
    std::sort(degree_monomials.begin(), degree_monomials.end(), grevlex_less);
    bool new_standard = false;
    for (const auto& m : degree_monomials) {
      bool divisible = false;
      for (const auto& l : leads) divisible = divisible || l.divides(m);
      if (divisible) continue;
      ExactPolynomial f;
      if (elim.try_accept(m, f)) {
        new_standard = true;
        continue;
      }
      ensure(f.leading_monomial() == m, "compute_t_ideal: vanishing polynomial has an unexpected leading term");
      leads.push_back(m);
      result.generators.push_back({top_degree(f), std::move(f)});
    }
    if (!new_standard) break;
  }
  ensure(static_cast<int>(elim.accepted().size()) == static_cast<int>(points.size()),
         "compute_t_ideal: standard monomials do not match |X|");
  std::vector<ExactPolynomial> tops;
  for (const auto& g : result.generators) tops.push_back(g.top);
  result.staircase = staircase(tops, n);
  ensure(result.staircase == elim.accepted(), "compute_t_ideal: staircase differs from the accepted monomials");
  result.hilbert = detail::hilbert_of(result.staircase);
  return result;
}

/// The loop as stated: start from P = all monomials of degree |X|; while
/// |st(P)| > |X|, take a null vector of the evaluation matrix on st(P) and add
/// tau(f). The null vector chosen is the one whose leading monomial is smallest,
/// found by scanning st(P) upward until the first dependent evaluation vector.
inline TIdealResult compute_t_ideal_one_per_step(const std::vector<Point>& points) {
  detail::check_points(points);
  if (static_cast<int>(points.size()) > kPointGuard)
    throw resource_error("compute_t_ideal: |X| = " + std::to_string(points.size()) + " exceeds the guard " +
                         std::to_string(kPointGuard));
  int n = static_cast<int>(points.front().size());
  int size = static_cast<int>(points.size());
  std::vector<ExactPolynomial> P;
  for (const auto& m : monomials_of_degree(n, size)) {
    ExactPolynomial f(n);
    f.add_term(m, QuadraticNumber(1));
    P.push_back(std::move(f));
  }
  TIdealResult result;
  result.n = n;
  while (true) {
    std::vector<Monomial> stair = staircase(P, n);
    if (static_cast<int>(stair.size()) == size) {
      result.staircase = std::move(stair);
      break;
    }
    ensure(static_cast<int>(stair.size()) > size, "compute_t_ideal: staircase smaller than |X|");
    detail::EvaluationEliminator elim(points);
    ExactPolynomial f;
    bool found = false;
    for (const auto& m : stair)
      if (!elim.try_accept(m, f)) {
        found = true;
        break;
      }
    ensure(found, "compute_t_ideal: evaluation matrix has no null vector");
    ExactPolynomial top = top_degree(f);
    P.push_back(top);
    result.generators.push_back({std::move(top), std::move(f)});
  }
  result.hilbert = detail::hilbert_of(result.staircase);
  return result;
}

}  // namespace coinv
