#pragma once

// Symmetric polynomials in a fixed number of variables: Schur, elementary,
// complete homogeneous and ribbon Schur polynomials, Schur expansion, omega.
//
// Two representations are provided. MultiPolynomial is the explicit one (every
// monomial stored). SymmetricPolynomial stores one coefficient per monomial
// symmetric function m_lambda and is what the larger Frobenius computations use.

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "coinv/polynomial.hpp"
#include "coinv/tableaux.hpp"

namespace coinv {

// ---------------------------------------------------------------------------
// Expansions keyed by (r-)partitions.

inline bool is_zero_value(const Integer& v) { return v == 0; }
inline bool is_zero_value(const Rational& v) { return v == 0; }
inline bool is_zero_value(const QPolynomial& v) { return v.is_zero(); }

/// Finite linear combination of basis elements indexed by Key; zero
/// coefficients are never stored.
template <class Key, class Value>
class Expansion {
 public:
  using Map = std::map<Key, Value>;

  void add(const Key& key, const Value& v) {
    if (is_zero_value(v)) return;
    auto [it, inserted] = terms_.try_emplace(key, v);
    if (!inserted) {
      it->second += v;
      if (is_zero_value(it->second)) terms_.erase(it);
    }
  }
  Value get(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Value() : it->second;
  }
  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  friend bool operator==(const Expansion&, const Expansion&) = default;

 private:
  Map terms_;
};

using SchurExpansion = Expansion<Partition, Integer>;
using GradedSchurExpansion = Expansion<Partition, QPolynomial>;
using WreathExpansion = Expansion<RPartition, Integer>;
using GradedWreathExpansion = Expansion<RPartition, QPolynomial>;

template <class Value>
Expansion<Partition, Value> omega(const Expansion<Partition, Value>& e) {
  Expansion<Partition, Value> out;
  for (const auto& [lambda, c] : e.terms()) out.add(conjugate(lambda), c);
  return out;
}

template <class Key, class Value>
std::string expansion_to_string(const Expansion<Key, Value>& e) {
  if (e.empty()) return "0";
  std::string s;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    if (!s.empty()) s += " + ";
    std::string c;
    if constexpr (std::is_same_v<Value, QPolynomial>) c = "(" + it->second.to_string() + ")";
    else c = it->second.get_str();
    s += c + "*s" + it->first.to_string();
  }
  return s;
}

// ---------------------------------------------------------------------------
// Explicit polynomials.

inline MultiPolynomial schur(const Partition& lambda, int m) {
  MultiPolynomial p(m);
  if (m < lambda.length()) return p;
  for (const auto& t : enumerate_ssyt(lambda, m)) p.add_term(Monomial(t.weight(m)), Rational(1));
  return p;
}

inline MultiPolynomial elementary(int d, int m, int r = 1) {
  require(r >= 1, "elementary: r must be positive");
  MultiPolynomial p(m);
  if (d < 0 || d > m) return p;
  std::vector<int> pick(static_cast<std::size_t>(m), 0);
  std::fill(pick.end() - d, pick.end(), r);
  do p.add_term(Monomial(pick), Rational(1));
  while (std::next_permutation(pick.begin(), pick.end()));
  return p;
}

inline MultiPolynomial elementary_product(const Partition& mu, int m, int r = 1) {
  MultiPolynomial p = MultiPolynomial::constant(m, Rational(1));
  for (int part : mu.parts())
    if (part > 0) p = p * elementary(part, m, r);
  return p;
}

inline MultiPolynomial homogeneous(int d, int m) {
  MultiPolynomial p(m);
  if (d < 0) return p;
  for (const auto& mono : monomials_of_degree(m, d)) p.add_term(mono, Rational(1));
  return p;
}

/// Checks whether `word` (the filling read bottom row first, left to right) is
/// a semistandard filling of the ribbon with the given row lengths, listed top
/// to bottom. Consecutive rows share one column: the first cell of the upper
/// row sits directly above the last cell of the row below it.
inline bool is_ribbon_reading_word(const std::vector<int>& rows, const Word& word) {
  std::size_t total = 0;
  for (int len : rows) {
    require(len >= 1, "ribbon rows must have positive length");
    total += static_cast<std::size_t>(len);
  }
  if (word.size() != total) return false;
  std::size_t pos = 0;
  for (std::size_t idx = rows.size(); idx-- > 0;) {
    std::size_t len = static_cast<std::size_t>(rows[idx]);
    for (std::size_t j = 1; j < len; ++j)
      if (word[pos + j - 1] > word[pos + j]) return false;
    if (pos > 0 && !(word[pos] < word[pos - 1])) return false;
    pos += len;
  }
  return true;
}

/// Word positions i (1-based) after which a new, higher row begins.
inline DescentSet ribbon_descent_set(const std::vector<int>& rows) {
  DescentSet s;
  int pos = 0;
  for (std::size_t idx = rows.size(); idx-- > 1;) {
    pos += rows[idx];
    s.insert(pos);
  }
  return s;
}

/// Row lengths (top to bottom) of the ribbon of size n whose reading words have descent set s.
inline std::vector<int> ribbon_rows_from_descents(int n, DescentSet s) {
  std::vector<int> reading;
  int last = 0;
  for (int i : s.to_vector()) {
    require(i >= 1 && i < n, "ribbon descent outside 1..n-1");
    reading.push_back(i - last);
    last = i;
  }
  if (n > 0) reading.push_back(n - last);
  return std::vector<int>(reading.rbegin(), reading.rend());
}

/// The transposed ribbon.
inline std::vector<int> conjugate_ribbon(const std::vector<int>& rows) {
  int n = 0;
  for (int len : rows) n += len;
  DescentSet s = ribbon_descent_set(rows), c;
  for (int i = 1; i < n; ++i)
    if (!s.contains(i)) c.insert(i);
  return ribbon_rows_from_descents(n, c);
}

inline MultiPolynomial ribbon_schur(const std::vector<int>& rows, int m, int guard = kSytGuard) {
  int total = 0;
  for (int len : rows) total += len;
  if (total > guard) throw resource_error("ribbon_schur: ribbon too large for explicit expansion");
  DescentSet des = ribbon_descent_set(rows);
  MultiPolynomial p(m);
  Word w(static_cast<std::size_t>(total), 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == total) {
      std::vector<int> e(static_cast<std::size_t>(m), 0);
      for (int v : w) ++e[static_cast<std::size_t>(v - 1)];
      p.add_term(Monomial(std::move(e)), Rational(1));
      return;
    }
    int lo = 1, hi = m;
    if (pos > 0) {
      if (des.contains(pos)) hi = w[static_cast<std::size_t>(pos - 1)] - 1;
      else lo = w[static_cast<std::size_t>(pos - 1)];
    }
    for (int v = lo; v <= hi; ++v) {
      w[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return p;
}

inline bool is_symmetric(const MultiPolynomial& p) {
  int m = p.nvars();
  for (int i = 1; i < m; ++i) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) perm[static_cast<std::size_t>(j - 1)] = j;
    std::swap(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(i)]);
    if (!(p.permuted(perm) == p)) return false;
  }
  return true;
}

/// p = sum c_lambda s_lambda, found by repeatedly cancelling the
/// lexicographically largest exponent vector (always a partition for symmetric p).
inline Expansion<Partition, Rational> schur_expand_rational(const MultiPolynomial& p) {
  require(is_symmetric(p), "schur_expand: input is not symmetric");
  int m = p.nvars();
  require(p.degree() <= m, "schur_expand: need at least as many variables as the degree");
  Expansion<Partition, Rational> out;
  MultiPolynomial rest = p;
  while (!rest.is_zero()) {
    const auto& [lead, c] = *rest.terms().rbegin();
    Partition lambda(lead.exponents());
    Rational coeff = c;
    out.add(lambda.trimmed(), coeff);
    rest -= schur(lambda, m) * coeff;
  }
  return out;
}

inline SchurExpansion schur_expand(const MultiPolynomial& p) {
  SchurExpansion out;
  auto rational = schur_expand_rational(p);
  for (const auto& [lambda, c] : rational.terms()) {
    require(c.get_den() == 1, "schur_expand: non-integral Schur coefficient");
    out.add(lambda, c.get_num());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Monomial-symmetric coordinates.

namespace detail {
inline std::mutex& kostka_mutex() {
  static std::mutex m;
  return m;
}
inline std::map<std::pair<Partition, Partition>, Integer>& kostka_cache() {
  static std::map<std::pair<Partition, Partition>, Integer> c;
  return c;
}
}  // namespace detail

/// Number of semistandard tableaux of shape lambda and content mu.
inline Integer kostka(const Partition& lambda, const Partition& mu) {
  Partition l = lambda.trimmed(), u = mu.trimmed();
  if (l.size() != u.size()) return 0;
  if (l.size() == 0) return 1;
  if (u.length() == 1) return l.length() == 1 ? 1 : 0;
  {
    std::lock_guard lock(detail::kostka_mutex());
    auto it = detail::kostka_cache().find({l, u});
    if (it != detail::kostka_cache().end()) return it->second;
  }
  // the largest letter occupies a horizontal strip of size u_last
  int strip = u.part(u.length());
  std::vector<int> rest_mu(u.parts().begin(), u.parts().end() - 1);
  Partition umu(rest_mu);
  Integer total = 0;
  std::vector<int> kappa = l.parts();
  auto rec = [&](auto&& self, std::size_t row, int remaining) -> void {
    if (row == kappa.size()) {
      if (remaining == 0) total += kostka(Partition(kappa), umu);
      return;
    }
    int orig = kappa[row];
    int below = row + 1 < l.parts().size() ? l.parts()[row + 1] : 0;
    for (int take = 0; take <= std::min(remaining, orig - below); ++take) {
      kappa[row] = orig - take;
      self(self, row + 1, remaining - take);
    }
    kappa[row] = orig;
  };
  rec(rec, 0, strip);
  std::lock_guard lock(detail::kostka_mutex());
  detail::kostka_cache()[{l, u}] = total;
  return total;
}

/// Symmetric polynomial in m variables stored as sum c_lambda m_lambda over
/// partitions with at most m parts.
class SymmetricPolynomial {
 public:
  SymmetricPolynomial() = default;
  explicit SymmetricPolynomial(int m) : m_(m) {}
  static SymmetricPolynomial one(int m) {
    SymmetricPolynomial p(m);
    p.add(Partition{}, 1);
    return p;
  }

  int nvars() const { return m_; }
  const std::map<Partition, Integer>& coefficients() const { return c_.terms(); }
  Integer coefficient(const Partition& lambda) const { return c_.get(lambda.trimmed()); }
  void add(const Partition& lambda, const Integer& v) {
    if (lambda.length() > m_) return;
    c_.add(lambda.trimmed(), v);
  }

  static SymmetricPolynomial homogeneous(int d, int m) {
    SymmetricPolynomial p(m);
    for (const auto& lambda : partitions_of(d, m)) p.add(lambda, 1);
    return p;
  }
  static SymmetricPolynomial elementary(int d, int m) {
    SymmetricPolynomial p(m);
    if (d <= m) p.add(Partition(std::vector<int>(static_cast<std::size_t>(d), 1)), 1);
    return p;
  }
  static SymmetricPolynomial schur(const Partition& lambda, int m) {
    SymmetricPolynomial p(m);
    if (lambda.length() > m) return p;
    for (const auto& mu : partitions_of(lambda.size(), m)) p.add(mu, kostka(lambda, mu));
    return p;
  }
  /// Coefficient of x^lambda is the number of ribbon fillings of content lambda,
  /// counted by a memoised scan over reading words.
  static SymmetricPolynomial ribbon(const std::vector<int>& rows, int m) {
    int total = 0;
    for (int len : rows) total += len;
    DescentSet des = ribbon_descent_set(rows);
    SymmetricPolynomial p(m);
    for (const auto& lambda : partitions_of(total, m)) {
      std::vector<int> content(lambda.parts());
      std::map<std::pair<std::vector<int>, int>, Integer> memo;
      std::function<Integer(int, int)> count = [&](int pos, int last) -> Integer {
        if (pos == total) return 1;
        auto key = std::make_pair(content, last);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Integer ways = 0;
        for (int v = 1; v <= static_cast<int>(content.size()); ++v) {
          if (content[static_cast<std::size_t>(v - 1)] == 0) continue;
          if (pos > 0) {
            if (des.contains(pos) ? !(v < last) : !(v >= last)) continue;
          }
          --content[static_cast<std::size_t>(v - 1)];
          ways += count(pos + 1, v);
          ++content[static_cast<std::size_t>(v - 1)];
        }
        memo[key] = ways;
        return ways;
      };
      p.add(lambda, count(0, 0));
    }
    return p;
  }

  friend SymmetricPolynomial operator*(const SymmetricPolynomial& f, const SymmetricPolynomial& g) {
    require(f.m_ == g.m_, "symmetric product: variable counts differ");
    int m = f.m_;
    std::map<int, int> fdeg, gdeg;
    for (const auto& [l, c] : f.coefficients()) fdeg[l.size()] = 1;
    for (const auto& [l, c] : g.coefficients()) gdeg[l.size()] = 1;
    SymmetricPolynomial out(m);
    for (const auto& [da, u1] : fdeg)
      for (const auto& [db, u2] : gdeg) {
        for (const auto& lambda : partitions_of(da + db, m)) {
          // coefficient of x^lambda: sum over x^alpha * x^(lambda - alpha)
          std::vector<int> lam = lambda.padded(m).parts();
          std::vector<int> alpha(static_cast<std::size_t>(m), 0);
          Integer total = 0;
          auto rec = [&](auto&& self, int pos, int left) -> void {
            if (pos == m) {
              if (left != 0) return;
              std::vector<int> a = alpha, b(static_cast<std::size_t>(m));
              for (std::size_t i = 0; i < b.size(); ++i) b[i] = lam[i] - alpha[i];
              std::sort(a.rbegin(), a.rend());
              std::sort(b.rbegin(), b.rend());
              Integer fa = f.coefficient(Partition(a));
              if (fa == 0) return;
              Integer gb = g.coefficient(Partition(b));
              total += fa * gb;
              return;
            }
            for (int v = 0; v <= std::min(left, lam[static_cast<std::size_t>(pos)]); ++v) {
              alpha[static_cast<std::size_t>(pos)] = v;
              self(self, pos + 1, left - v);
            }
            alpha[static_cast<std::size_t>(pos)] = 0;
          };
          rec(rec, 0, da);
          out.add(lambda, total);
        }
      }
    return out;
  }

  MultiPolynomial to_multi() const {
    MultiPolynomial p(m_);
    for (const auto& [lambda, c] : coefficients()) {
      std::vector<int> e = lambda.padded(m_).parts();
      std::sort(e.begin(), e.end());
      do p.add_term(Monomial(e), Rational(c));
      while (std::next_permutation(e.begin(), e.end()));
    }
    return p;
  }
  static SymmetricPolynomial from_multi(const MultiPolynomial& p) {
    require(is_symmetric(p), "from_multi: input is not symmetric");
    SymmetricPolynomial s(p.nvars());
    for (const auto& [mono, c] : p.terms()) {
      const auto& e = mono.exponents();
      if (!std::is_sorted(e.rbegin(), e.rend())) continue;
      require(c.get_den() == 1, "from_multi: non-integral coefficient");
      s.add(Partition(e), c.get_num());
    }
    return s;
  }

  friend bool operator==(const SymmetricPolynomial&, const SymmetricPolynomial&) = default;

 private:
  int m_ = 0;
  Expansion<Partition, Integer> c_;
};

/// Schur expansion via the unitriangular Kostka change of basis.
inline SchurExpansion schur_expand(const SymmetricPolynomial& p) {
  int m = p.nvars();
  SchurExpansion out;
  std::map<Partition, Integer> rest = p.coefficients();
  while (!rest.empty()) {
    auto [lambda, c] = *rest.rbegin();
    require(lambda.size() <= m, "schur_expand: need at least as many variables as the degree");
    out.add(lambda, c);
    for (const auto& mu : partitions_of(lambda.size(), m)) {
      if (mu > lambda) continue;
      Integer k = kostka(lambda, mu);
      if (k == 0) continue;
      auto& slot = rest[mu];
      slot -= c * k;
      if (slot == 0) rest.erase(mu);
    }
  }
  return out;
}

}  // namespace coinv
