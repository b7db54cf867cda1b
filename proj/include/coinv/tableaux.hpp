#pragma once

// Standard, semistandard and standard r-tableaux; descent statistics; RSK.

#include <algorithm>
#include <string>
#include <vector>

#include "coinv/combinatorics.hpp"

namespace coinv {

using Word = std::vector<int>;
using Rows = std::vector<std::vector<int>>;

inline Partition shape_of(const Rows& rows) {
  std::vector<int> p;
  for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
  return Partition(std::move(p));
}

inline std::string rows_to_string(const Rows& rows) {
  std::string s;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += '|';
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) s += ' ';
      s += std::to_string(rows[i][j]);
    }
  }
  return s;
}

class StandardTableau {
 public:
  StandardTableau() = default;
  StandardTableau(std::initializer_list<std::vector<int>> rows) : StandardTableau(Rows(rows)) {}
  explicit StandardTableau(Rows rows) : rows_(std::move(rows)) {
    shape_of(rows_);  // validates row lengths
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    std::vector<bool> seen(n + 1, false);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      require(!rows_[i].empty(), "tableau rows must be non-empty");
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        int v = rows_[i][j];
        require(v >= 1 && static_cast<std::size_t>(v) <= n && !seen[static_cast<std::size_t>(v)],
                "standard tableau entries must be exactly 1..n");
        seen[static_cast<std::size_t>(v)] = true;
        if (j) require(rows_[i][j - 1] < v, "standard tableau rows must increase");
        if (i) require(rows_[i - 1][j] < v, "standard tableau columns must increase");
      }
    }
  }

  const Rows& rows() const { return rows_; }
  Partition shape() const { return shape_of(rows_); }
  int size() const { return shape().size(); }
  /// Row index (0-based) of each entry: row[v-1].
  std::vector<int> row_of() const {
    std::vector<int> out(static_cast<std::size_t>(size()), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (int v : rows_[i]) out[static_cast<std::size_t>(v - 1)] = static_cast<int>(i);
    return out;
  }
  std::string to_string() const { return rows_to_string(rows_); }

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

 private:
  Rows rows_;
};

class SemistandardTableau {
 public:
  SemistandardTableau() = default;
  SemistandardTableau(std::initializer_list<std::vector<int>> rows) : SemistandardTableau(Rows(rows)) {}
  explicit SemistandardTableau(Rows rows) : rows_(std::move(rows)) {
    shape_of(rows_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      require(!rows_[i].empty(), "tableau rows must be non-empty");
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        int v = rows_[i][j];
        require(v >= 1, "tableau entries must be positive");
        if (j) require(rows_[i][j - 1] <= v, "semistandard rows must weakly increase");
        if (i) require(rows_[i - 1][j] < v, "semistandard columns must strictly increase");
      }
    }
  }

  const Rows& rows() const { return rows_; }
  Partition shape() const { return shape_of(rows_); }
  /// wt(T)_i = number of entries equal to i, for i = 1..m.
  std::vector<int> weight(int m) const {
    std::vector<int> w(static_cast<std::size_t>(m), 0);
    for (const auto& r : rows_)
      for (int v : r) {
        require(v <= m, "weight: entry exceeds variable count");
        ++w[static_cast<std::size_t>(v - 1)];
      }
    return w;
  }
  std::string to_string() const { return rows_to_string(rows_); }

  friend bool operator==(const SemistandardTableau&, const SemistandardTableau&) = default;

 private:
  Rows rows_;
};

constexpr int kSytGuard = 12;
constexpr int kRSytGuard = 10;

/// All standard tableaux of shape lambda. Entries n, n-1, ..., 1 are placed in
/// removable corners, scanning corners top to bottom.
inline std::vector<StandardTableau> enumerate_syt(const Partition& lambda, int guard = kSytGuard) {
  int n = lambda.size();
  if (n > guard)
    throw resource_error("enumerate_syt: size " + std::to_string(n) + " exceeds guard " + std::to_string(guard));
  std::vector<int> shape(lambda.parts().begin(), lambda.parts().begin() + lambda.length());
  Rows fill(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) fill[i].assign(static_cast<std::size_t>(shape[i]), 0);
  std::vector<StandardTableau> out;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == 0) {
      out.emplace_back(fill);
      return;
    }
    for (std::size_t i = 0; i < shape.size(); ++i) {
      int len = shape[i];
      if (len == 0) continue;
      bool corner = (i + 1 == shape.size()) || shape[i + 1] < len;
      if (!corner) continue;
      fill[i][static_cast<std::size_t>(len - 1)] = v;
      --shape[i];
      self(self, v - 1);
      ++shape[i];
    }
  };
  rec(rec, n);
  return out;
}

struct TableauStats {
  DescentSet descents;
  int maj = 0;
  std::vector<int> d;
};

inline TableauStats syt_descents(const StandardTableau& t) {
  TableauStats s;
  auto row = t.row_of();
  int n = t.size();
  for (int i = 1; i < n; ++i)
    if (row[static_cast<std::size_t>(i)] > row[static_cast<std::size_t>(i - 1)]) s.descents.insert(i);
  s.maj = s.descents.sum();
  s.d = suffix_descent_counts(s.descents, n);
  return s;
}

inline Integer count_syt_descents_between(const Partition& lambda, DescentSet lo, DescentSet hi,
                                          int guard = kSytGuard) {
  int n = lambda.size();
  require(lo.subset_of(hi), "count_syt_descents_between: S_lo must be a subset of S_hi");
  require(hi.restricted(1, n - 1) == hi, "count_syt_descents_between: descent sets must lie in {1..n-1}");
  Integer count = 0;
  for (const auto& t : enumerate_syt(lambda, guard)) {
    DescentSet des = syt_descents(t).descents;
    if (lo.subset_of(des) && des.subset_of(hi)) ++count;
  }
  return count;
}

/// Semistandard tableaux of shape lambda with entries in 1..m, filled row by row.
inline std::vector<SemistandardTableau> enumerate_ssyt(const Partition& lambda, int m, int guard = kSytGuard) {
  if (lambda.size() > guard)
    throw resource_error("enumerate_ssyt: size " + std::to_string(lambda.size()) + " exceeds guard");
  std::vector<SemistandardTableau> out;
  if (m < lambda.length()) return out;
  Rows fill(static_cast<std::size_t>(lambda.length()));
  for (int i = 0; i < lambda.length(); ++i) fill[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(lambda.part(i + 1)), 0);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < fill.size(); ++i)
    for (std::size_t j = 0; j < fill[i].size(); ++j) cells.emplace_back(i, j);
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      out.emplace_back(fill);
      return;
    }
    auto [i, j] = cells[idx];
    int lo = 1;
    if (j) lo = std::max(lo, fill[i][j - 1]);
    if (i) lo = std::max(lo, fill[i - 1][j] + 1);
    // leave room for the strictly increasing column below
    int below = 0;
    for (std::size_t r = i + 1; r < fill.size() && j < fill[r].size(); ++r) ++below;
    for (int v = lo; v <= m - below; ++v) {
      fill[i][j] = v;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
  return out;
}

struct RskPair {
  SemistandardTableau P;
  StandardTableau Q;
};

/// Row insertion; an inserted value bumps the leftmost entry strictly larger than it.
inline RskPair rsk(const Word& w) {
  Rows p, q;
  for (std::size_t t = 0; t < w.size(); ++t) {
    int x = w[t];
    require(x >= 1, "rsk: word letters must be positive");
    std::size_t row = 0;
    while (true) {
      if (row == p.size()) {
        p.push_back({x});
        q.push_back({static_cast<int>(t + 1)});
        break;
      }
      auto it = std::upper_bound(p[row].begin(), p[row].end(), x);
      if (it == p[row].end()) {
        p[row].push_back(x);
        q[row].push_back(static_cast<int>(t + 1));
        break;
      }
      std::swap(x, *it);
      ++row;
    }
  }
  return {SemistandardTableau(std::move(p)), StandardTableau(std::move(q))};
}

inline Word rsk_inverse(const SemistandardTableau& P, const StandardTableau& Q) {
  require(P.shape() == Q.shape(), "rsk_inverse: P and Q must have the same shape");
  Rows p = P.rows();
  Rows q = Q.rows();
  int n = Q.size();
  Word w(static_cast<std::size_t>(n), 0);
  for (int v = n; v >= 1; --v) {
    std::size_t row = 0;
    while (q[row].back() != v) ++row;  // v is always at a corner
    q[row].pop_back();
    int x = p[row].back();
    p[row].pop_back();
    while (row > 0) {
      --row;
      // largest entry strictly smaller than x
      auto it = std::lower_bound(p[row].begin(), p[row].end(), x);
      ensure(it != p[row].begin(), "rsk_inverse: reverse bump failed");
      --it;
      std::swap(x, *it);
    }
    if (q.back().empty()) {
      q.pop_back();
      p.pop_back();
    }
    w[static_cast<std::size_t>(v - 1)] = x;
  }
  return w;
}

inline DescentSet word_descents(const Word& w) {
  DescentSet s;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) s.insert(static_cast<int>(i + 1));
  return s;
}

/// r-tuple of standard fillings jointly using 1..n; components may be empty.
class StandardRTableau {
 public:
  StandardRTableau() = default;
  explicit StandardRTableau(std::vector<Rows> components) : comps_(std::move(components)) {
    require(!comps_.empty(), "r-tableau needs at least one component");
    std::size_t n = 0;
    for (const auto& c : comps_)
      for (const auto& r : c) n += r.size();
    std::vector<bool> seen(n + 1, false);
    for (const auto& c : comps_) {
      shape_of(c);
      for (std::size_t i = 0; i < c.size(); ++i) {
        require(!c[i].empty(), "tableau rows must be non-empty");
        for (std::size_t j = 0; j < c[i].size(); ++j) {
          int v = c[i][j];
          require(v >= 1 && static_cast<std::size_t>(v) <= n && !seen[static_cast<std::size_t>(v)],
                  "r-tableau entries must be exactly 1..n");
          seen[static_cast<std::size_t>(v)] = true;
          if (j) require(c[i][j - 1] < v, "r-tableau rows must increase");
          if (i) require(c[i - 1][j] < v, "r-tableau columns must increase");
        }
      }
    }
  }

  int r() const { return static_cast<int>(comps_.size()); }
  const std::vector<Rows>& components() const { return comps_; }
  RPartition shape() const {
    std::vector<Partition> s;
    for (const auto& c : comps_) s.push_back(shape_of(c));
    return RPartition(std::move(s));
  }
  int size() const { return shape().size(); }
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      if (i) s += " ; ";
      s += comps_[i].empty() ? "-" : rows_to_string(comps_[i]);
    }
    return s;
  }

  friend bool operator==(const StandardRTableau&, const StandardRTableau&) = default;

 private:
  std::vector<Rows> comps_;
};

/// All standard r-tableaux of shape lambda_bar: choose which values go to each
/// component (lexicographic subsets), then relabel standard tableaux of each shape.
inline std::vector<StandardRTableau> enumerate_r_syt(const RPartition& shape, int guard = kRSytGuard) {
  int n = shape.size();
  if (n > guard)
    throw resource_error("enumerate_r_syt: size " + std::to_string(n) + " exceeds guard " + std::to_string(guard));
  int r = shape.r();
  require(r >= 1, "enumerate_r_syt: need at least one component");
  std::vector<std::vector<StandardTableau>> syts;
  for (int c = 0; c < r; ++c) syts.push_back(enumerate_syt(shape[c], guard));

  std::vector<StandardRTableau> out;
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  std::vector<int> remaining;
  for (int c = 0; c < r; ++c) remaining.push_back(shape[c].size());

  auto emit = [&] {
    std::vector<std::vector<int>> values(static_cast<std::size_t>(r));
    for (int v = 1; v <= n; ++v) values[static_cast<std::size_t>(owner[static_cast<std::size_t>(v - 1)])].push_back(v);
    std::vector<std::size_t> pick(static_cast<std::size_t>(r), 0);
    while (true) {
      std::vector<Rows> comps;
      for (int c = 0; c < r; ++c) {
        Rows rows;
        if (shape[c].size() > 0) {
          rows = syts[static_cast<std::size_t>(c)][pick[static_cast<std::size_t>(c)]].rows();
          for (auto& row : rows)
            for (int& v : row) v = values[static_cast<std::size_t>(c)][static_cast<std::size_t>(v - 1)];
        }
        comps.push_back(std::move(rows));
      }
      out.emplace_back(std::move(comps));
      int c = r - 1;
      while (c >= 0 && pick[static_cast<std::size_t>(c)] + 1 == syts[static_cast<std::size_t>(c)].size())
        pick[static_cast<std::size_t>(c--)] = 0;
      if (c < 0) break;
      ++pick[static_cast<std::size_t>(c)];
    }
  };
  auto rec = [&](auto&& self, int v) -> void {
    if (v > n) {
      emit();
      return;
    }
    for (int c = 0; c < r; ++c) {
      if (remaining[static_cast<std::size_t>(c)] == 0) continue;
      --remaining[static_cast<std::size_t>(c)];
      owner[static_cast<std::size_t>(v - 1)] = c;
      self(self, v + 1);
      ++remaining[static_cast<std::size_t>(c)];
    }
  };
  rec(rec, 1);
  return out;
}

struct RTableauStats {
  DescentSet descents;
  std::vector<int> c;
  std::vector<int> d;
  std::vector<int> f;
  int maj = 0;
};

/// i is a descent when i+1 lies in a component of higher index, or in the same
/// component strictly below i.
inline RTableauStats r_tableau_stats(const StandardRTableau& t) {
  int n = t.size();
  int r = t.r();
  std::vector<int> comp(static_cast<std::size_t>(n), 0), row(static_cast<std::size_t>(n), 0);
  for (int c = 0; c < r; ++c) {
    const auto& rows = t.components()[static_cast<std::size_t>(c)];
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (int v : rows[i]) {
        comp[static_cast<std::size_t>(v - 1)] = c;
        row[static_cast<std::size_t>(v - 1)] = static_cast<int>(i);
      }
  }
  RTableauStats s;
  for (int i = 1; i < n; ++i) {
    auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(i);
    if (comp[a] < comp[b] || (comp[a] == comp[b] && row[b] > row[a])) s.descents.insert(i);
  }
  s.c = comp;
  s.d = suffix_descent_counts(s.descents, n);
  s.f.resize(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    s.f[i] = r * s.d[i] + s.c[i];
    s.maj += s.f[i];
  }
  return s;
}

}  // namespace coinv
