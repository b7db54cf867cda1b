#pragma once

// Partitions, permutations, r-colored permutations and their descent
// statistics; dominance order; q-binomial coefficients.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "coinv/core.hpp"

namespace coinv {

/// Result of comparing two elements of a partial order.
enum class Order { Less, Equal, Greater, Incomparable };

inline const char* to_string(Order o) {
  switch (o) {
    case Order::Less: return "Less";
    case Order::Equal: return "Equal";
    case Order::Greater: return "Greater";
    case Order::Incomparable: return "Incomparable";
  }
  return "?";
}

/// Weakly decreasing sequence of non-negative integers. Trailing zeros are
/// stored (they matter when the partition is an exponent partition of a
/// monomial in n variables) but ignored by comparison.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      require(parts_[i] >= 0, "partition parts must be non-negative");
      if (i + 1 < parts_.size())
        require(parts_[i] >= parts_[i + 1], "partition parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t stored_length() const { return parts_.size(); }

  /// 1-based part access; indices past the stored parts read as 0.
  int part(int i) const {
    return (i >= 1 && static_cast<std::size_t>(i) <= parts_.size()) ? parts_[i - 1] : 0;
  }

  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const {
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
  }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  bool is_zero() const { return largest() == 0; }

  Partition padded(int n) const {
    require(length() <= n, "partition " + to_string() + " has more than " + std::to_string(n) + " parts");
    std::vector<int> p(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < length(); ++i) p[static_cast<std::size_t>(i)] = parts_[static_cast<std::size_t>(i)];
    return Partition(std::move(p));
  }
  Partition trimmed() const {
    return Partition(std::vector<int>(parts_.begin(), parts_.begin() + length()));
  }

  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < length(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[static_cast<std::size_t>(i)]);
    }
    return s + ")";
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    int la = a.length();
    if (la != b.length()) return false;
    return std::equal(a.parts_.begin(), a.parts_.begin() + la, b.parts_.begin());
  }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    int la = a.length(), lb = b.length();
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.begin() + la,
                                                  b.parts_.begin(), b.parts_.begin() + lb);
  }

 private:
  std::vector<int> parts_;
};

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.largest()), 0);
  for (int p : lambda.parts())
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

/// Dominance order. Both arguments must have the same size.
inline Order dominance_compare(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw precondition_error("dominance_compare: partitions of different sizes " + lambda.to_string() +
                             " and " + mu.to_string() + " are incomparable gradings");
  int len = std::max(lambda.length(), mu.length());
  bool le = true, ge = true;
  int a = 0, b = 0;
  for (int j = 1; j <= len; ++j) {
    a += lambda.part(j);
    b += mu.part(j);
    if (a > b) le = false;
    if (a < b) ge = false;
  }
  if (le && ge) return Order::Equal;
  if (le) return Order::Less;
  if (ge) return Order::Greater;
  return Order::Incomparable;
}

/// {i in [lo,hi] : floor(mu_i / r) > floor(mu_{i+1} / r)} with mu_{n+1} read as 0.
inline DescentSet partition_descents(const Partition& mu, int r, int lo, int hi) {
  require(r >= 1, "partition_descents: r must be positive");
  require(1 <= lo && lo <= hi && hi <= static_cast<int>(mu.stored_length()),
          "partition_descents: invalid index range");
  DescentSet out;
  for (int i = lo; i <= hi; ++i)
    if (mu.part(i) / r > mu.part(i + 1) / r) out.insert(i);
  return out;
}

inline DescentSet partition_descents(const Partition& mu, int r = 1) {
  if (mu.stored_length() == 0) return {};
  return partition_descents(mu, r, 1, static_cast<int>(mu.stored_length()));
}

struct PartitionFlags {
  bool is_nk_partition = false;
  bool is_r_descent_partition = false;
  bool is_exponent_of_descent_monomial = false;
};

/// Classification of rho against the (n,k,r) vanishing criterion. rho is read
/// as a length-n sequence (zero padded).
inline PartitionFlags classify_partition(const Partition& rho, int n, int k, int r) {
  require(r >= 1 && 1 <= k && k <= n, "classify_partition: need r >= 1 and 1 <= k <= n");
  PartitionFlags flags;
  if (rho.length() > n) return flags;
  Partition p = rho.padded(n);
  flags.is_nk_partition = p.largest() < r * k;
  bool steps = true;
  for (int i = 1; i < n; ++i) steps = steps && (p.part(i) - p.part(i + 1) <= r);
  flags.is_r_descent_partition = steps && p.part(n) < r;
  bool tail = p.part(n) < r;
  for (int i = n - k + 1; i < n; ++i) tail = tail && (p.part(i) - p.part(i + 1) <= r);
  flags.is_exponent_of_descent_monomial = flags.is_nk_partition && tail;
  return flags;
}

/// Descent partition with prescribed descent set: lambda_i = |S cap {i..n-1}|.
inline Partition descent_partition_from_set(DescentSet s, int n) {
  require(n >= 1, "descent_partition_from_set: n must be positive");
  require(s.subset_of(DescentSet::from_mask(((std::uint64_t{1} << n) - 1) & ~std::uint64_t{1})),
          "descent_partition_from_set: S must lie in {1..n-1}");
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  for (int i = n; i >= 1; --i)
    parts[static_cast<std::size_t>(i - 1)] = (i < n ? parts[static_cast<std::size_t>(i)] : 0) + (s.contains(i) ? 1 : 0);
  return Partition(std::move(parts));
}

/// A permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size() + 1, false);
    for (int v : word_) {
      require(v >= 1 && static_cast<std::size_t>(v) <= word_.size() && !seen[static_cast<std::size_t>(v)],
              "permutation word must be a bijection on {1..n}");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  static Permutation identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }
  /// Parses the compact digit form "31427865" (n <= 9).
  static Permutation from_digits(const std::string& digits) {
    std::vector<int> w;
    for (char c : digits) w.push_back(c - '0');
    return Permutation(std::move(w));
  }

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& word() const { return word_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

struct PermutationStats {
  DescentSet descents;
  int des = 0;
  std::vector<int> d;  // d[i-1] = |Des cap {i..n}|
  int inv = 0;
};

inline std::vector<int> suffix_descent_counts(DescentSet des, int n) {
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  int running = 0;
  for (int i = n; i >= 1; --i) {
    if (des.contains(i)) ++running;
    d[static_cast<std::size_t>(i - 1)] = running;
  }
  return d;
}

inline PermutationStats perm_descents(const Permutation& sigma) {
  PermutationStats s;
  int n = sigma.size();
  for (int i = 1; i < n; ++i)
    if (sigma(i) > sigma(i + 1)) s.descents.insert(i);
  s.des = s.descents.size();
  s.d = suffix_descent_counts(s.descents, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (sigma(i) > sigma(j)) ++s.inv;
  return s;
}

/// An element pi_1^{c_1} ... pi_n^{c_n} of G(r,1,n). Colors are reduced mod r.
class ColoredPermutation {
 public:
  ColoredPermutation() = default;
  ColoredPermutation(Permutation word, std::vector<int> colors, int r)
      : word_(std::move(word)), colors_(std::move(colors)), r_(r) {
    require(r_ >= 1, "colored permutation: r must be positive");
    require(colors_.size() == word_.word().size(), "colored permutation: one color per letter");
    for (int& c : colors_) c = ((c % r_) + r_) % r_;
  }
  static ColoredPermutation uncolored(Permutation word) {
    std::vector<int> zeros(word.word().size(), 0);
    return ColoredPermutation(std::move(word), std::move(zeros), 1);
  }

  const Permutation& word() const { return word_; }
  const std::vector<int>& colors() const { return colors_; }
  int r() const { return r_; }
  int size() const { return word_.size(); }
  int letter(int i) const { return word_(i); }
  int color(int i) const { return colors_[static_cast<std::size_t>(i - 1)]; }

  std::string to_string() const {
    std::string s;
    for (int i = 1; i <= size(); ++i) {
      if (i > 1) s += ' ';
      s += std::to_string(letter(i)) + "^" + std::to_string(color(i));
    }
    return s;
  }

  friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;
  friend auto operator<=>(const ColoredPermutation&, const ColoredPermutation&) = default;

 private:
  Permutation word_;
  std::vector<int> colors_;
  int r_ = 1;
};

struct ColoredStats {
  DescentSet descents;
  int des = 0;
  std::vector<int> d;
  std::vector<int> f;  // f_i = r d_i + c_i
};

/// i is a descent when c_i < c_{i+1}, or c_i = c_{i+1} and pi_i > pi_{i+1}.
inline ColoredStats colored_descents(const ColoredPermutation& g) {
  ColoredStats s;
  int n = g.size();
  for (int i = 1; i < n; ++i) {
    if (g.color(i) < g.color(i + 1) || (g.color(i) == g.color(i + 1) && g.letter(i) > g.letter(i + 1)))
      s.descents.insert(i);
  }
  s.des = s.descents.size();
  s.d = suffix_descent_counts(s.descents, n);
  s.f.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    s.f[static_cast<std::size_t>(i - 1)] = g.r() * s.d[static_cast<std::size_t>(i - 1)] + g.color(i);
  return s;
}

/// An r-tuple of partitions.
class RPartition {
 public:
  RPartition() = default;
  RPartition(std::initializer_list<Partition> parts) : components_(parts) {}
  explicit RPartition(std::vector<Partition> components) : components_(std::move(components)) {}

  int r() const { return static_cast<int>(components_.size()); }
  const Partition& operator[](int i) const { return components_[static_cast<std::size_t>(i)]; }
  const std::vector<Partition>& components() const { return components_; }
  int size() const {
    int s = 0;
    for (const auto& p : components_) s += p.size();
    return s;
  }
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < components_.size(); ++i) {
      if (i) s += ',';
      s += components_[i].to_string();
    }
    return s + ")";
  }

  friend bool operator==(const RPartition&, const RPartition&) = default;
  friend auto operator<=>(const RPartition&, const RPartition&) = default;

 private:
  std::vector<Partition> components_;
};

/// Polynomial in q with integer coefficients, lowest power first.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(std::initializer_list<std::int64_t> coeffs) : c_(coeffs) { normalize(); }
  explicit QPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { normalize(); }
  static QPolynomial monomial(int power, std::int64_t coeff = 1) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(power) + 1, 0);
    c.back() = coeff;
    return QPolynomial(std::move(c));
  }

  const std::vector<std::int64_t>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t coefficient(int power) const {
    return (power >= 0 && static_cast<std::size_t>(power) < c_.size()) ? c_[static_cast<std::size_t>(power)] : 0;
  }
  std::int64_t at_one() const { return std::accumulate(c_.begin(), c_.end(), std::int64_t{0}); }

  /// q -> q^r.
  QPolynomial substitute_power(int r) const {
    if (c_.empty()) return {};
    std::vector<std::int64_t> out(static_cast<std::size_t>(degree() * r + 1), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i * static_cast<std::size_t>(r)] = c_[i];
    return QPolynomial(std::move(out));
  }
  QPolynomial shifted(int power) const {
    if (c_.empty()) return {};
    std::vector<std::int64_t> out(static_cast<std::size_t>(power), 0);
    out.insert(out.end(), c_.begin(), c_.end());
    return QPolynomial(std::move(out));
  }

  QPolynomial& operator+=(const QPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return QPolynomial(std::move(out));
  }
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      std::int64_t v = c_[i];
      if (v == 0) continue;
      if (!s.empty()) s += v < 0 ? "-" : "+";
      else if (v < 0) s += "-";
      std::int64_t a = v < 0 ? -v : v;
      if (i == 0) s += std::to_string(a);
      else {
        if (a != 1) s += std::to_string(a);
        s += "q";
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<std::int64_t> c_;
};

/// Gaussian binomial [a choose b]_q; zero when b > a.
inline QPolynomial q_binomial(int a, int b) {
  if (b < 0 || a < 0 || b > a) return {};
  // row[j] = [i choose j]_q, updated with [i choose j] = [i-1 choose j-1] + q^j [i-1 choose j]
  std::vector<QPolynomial> row(static_cast<std::size_t>(b) + 1);
  row[0] = QPolynomial{1};
  for (int i = 1; i <= a; ++i) {
    for (int j = std::min(i, b); j >= 1; --j)
      row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)].shifted(j);
  }
  return row[static_cast<std::size_t>(b)];
}

// ---------------------------------------------------------------------------
// Enumeration helpers.

namespace detail {
inline void partitions_rec(int remaining, int max_part, int max_parts, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_parts) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_parts, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

/// Partitions of n with at most max_parts parts, each at most max_part,
/// in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n, int max_parts = -1, int max_part = -1) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  detail::partitions_rec(n, max_part < 0 ? n : max_part, max_parts < 0 ? n + 1 : max_parts, cur, out);
  return out;
}

/// All weakly decreasing length-n sequences with entries in [0, bound).
inline std::vector<Partition> sequences_below(int n, int bound) {
  std::vector<Partition> out;
  if (bound <= 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int cap) -> void {
    if (pos == n) {
      out.emplace_back(cur);
      return;
    }
    for (int v = cap; v >= 0; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, bound - 1);
  return out;
}

inline std::vector<RPartition> r_partitions_of(int n, int r) {
  std::vector<RPartition> out;
  std::vector<Partition> cur;
  auto rec = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == r - 1) {
      for (const auto& p : partitions_of(remaining)) {
        cur.push_back(p);
        out.emplace_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int take = remaining; take >= 0; --take) {
      for (const auto& p : partitions_of(take)) {
        cur.push_back(p);
        self(self, slot + 1, remaining - take);
        cur.pop_back();
      }
    }
  };
  rec(rec, 0, n);
  return out;
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline std::vector<ColoredPermutation> all_colored_permutations(int n, int r) {
  std::vector<ColoredPermutation> out;
  for (const auto& p : all_permutations(n)) {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    while (true) {
      out.emplace_back(p, c, r);
      int i = n - 1;
      while (i >= 0 && c[static_cast<std::size_t>(i)] == r - 1) c[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++c[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

inline Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace coinv
