#pragma once

// Ground truth by exact linear algebra: the quotients R_{n,k} (r = 1) and
// S_{n,k} are built degree by degree, refined components are ranks of spans of
// normal forms, and multiplicities come from traces against character tables.

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coinv/combinatorics.hpp"
#include "coinv/cyclotomic.hpp"
#include "coinv/descent_monomials.hpp"
#include "coinv/monomial.hpp"
#include "coinv/representations.hpp"
#include "coinv/symfunc.hpp"

namespace coinv {

// ---------------------------------------------------------------------------
// Sparse exact linear algebra.

/// (column, value) pairs sorted by column, no zero values.
using SparseVector = std::vector<std::pair<int, Rational>>;

inline Rational sparse_at(const SparseVector& v, int col) {
  auto it = std::lower_bound(v.begin(), v.end(), col, [](const auto& e, int c) { return e.first < c; });
  return (it != v.end() && it->first == col) ? it->second : Rational(0);
}

/// dst += a * src
inline void sparse_axpy(SparseVector& dst, const Rational& a, const SparseVector& src) {
  SparseVector out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(std::move(dst[i++]));
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, a * src[j].second);
      ++j;
    } else {
      Rational v = dst[i].second + a * src[j].second;
      if (v != 0) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

/// Row space kept in fully reduced echelon form. The pivot of a row is its
/// smallest column, so low column indices are eliminated first.
class RowReducer {
 public:
  RowReducer() = default;
  explicit RowReducer(int columns) : columns_(columns), pivot_row_(static_cast<std::size_t>(columns), -1) {}

  int columns() const { return columns_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVector>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  bool is_pivot(int col) const { return pivot_row_[static_cast<std::size_t>(col)] >= 0; }
  const SparseVector& row_for_pivot(int col) const { return rows_[static_cast<std::size_t>(pivot_row_[static_cast<std::size_t>(col)])]; }

  /// v minus its projection onto the row space along the pivots.
  SparseVector reduce(SparseVector v) const {
    SparseVector original = v;
    for (const auto& [col, value] : original) {
      int row = pivot_row_[static_cast<std::size_t>(col)];
      if (row >= 0) sparse_axpy(v, -value, rows_[static_cast<std::size_t>(row)]);
    }
    return v;
  }

  /// Returns true when v enlarges the row space.
  bool insert(SparseVector v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    int pivot = v.front().first;
    Rational scale = 1 / v.front().second;
    for (auto& e : v) e.second *= scale;
    for (auto& row : rows_) {
      Rational c = sparse_at(row, pivot);
      if (c != 0) sparse_axpy(row, -c, v);
    }
    pivot_row_[static_cast<std::size_t>(pivot)] = static_cast<int>(rows_.size());
    pivots_.push_back(pivot);
    rows_.push_back(std::move(v));
    return true;
  }

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

 private:
  int columns_ = 0;
  std::vector<SparseVector> rows_;
  std::vector<int> pivots_;
  std::vector<int> pivot_row_;
};

// ---------------------------------------------------------------------------
// The graded quotient.

/// One graded piece: truncated monomials (exponents below rk) sorted from the
/// largest in the straightening order, and normal forms in terms of the
/// standard (non-pivot) monomials.
struct QuotientDegree {
  std::vector<Monomial> monomials;
  std::unordered_map<Monomial, int, MonomialHash> index;
  std::vector<int> standard;             // columns of standard monomials
  std::vector<SparseVector> normal_form;  // per column, over positions in `standard`
};

class GradedQuotient {
 public:
  GradedQuotient() = default;
  GradedQuotient(int n, int k, int r) : n_(n), k_(k), r_(r) {}

  int n() const { return n_; }
  int k() const { return k_; }
  int r() const { return r_; }
  /// True when the top degree was reached (every higher degree vanishes).
  bool complete() const { return complete_; }
  int computed_degree() const { return static_cast<int>(degrees_.size()) - 1; }
  int top_degree() const {
    for (int d = computed_degree(); d >= 0; --d)
      if (dim(d) > 0) return d;
    return -1;
  }
  const QuotientDegree& degree(int d) const { return degrees_[static_cast<std::size_t>(d)]; }
  std::vector<QuotientDegree>& mutable_degrees() { return degrees_; }
  void set_complete(bool c) { complete_ = c; }

  int dim(int d) const {
    if (d < 0 || d > computed_degree()) return 0;
    return static_cast<int>(degrees_[static_cast<std::size_t>(d)].standard.size());
  }
  int total_dim() const {
    int s = 0;
    for (int d = 0; d <= computed_degree(); ++d) s += dim(d);
    return s;
  }
  QPolynomial hilbert() const {
    std::vector<std::int64_t> c;
    for (int d = 0; d <= computed_degree(); ++d) c.push_back(dim(d));
    return QPolynomial(std::move(c));
  }
  std::vector<Monomial> standard_monomials(int d) const {
    std::vector<Monomial> out;
    if (d < 0 || d > computed_degree()) return out;
    const auto& deg = degrees_[static_cast<std::size_t>(d)];
    for (int col : deg.standard) out.push_back(deg.monomials[static_cast<std::size_t>(col)]);
    return out;
  }

  /// Coordinates of the class of m over standard_monomials(deg m).
  SparseVector normal_form(const Monomial& m) const {
    require(m.nvars() == n_, "normal_form: monomial must have n variables");
    if (m.max_exponent() >= r_ * k_) return {};
    int d = m.degree();
    if (d > computed_degree()) {
      if (complete_) return {};
      throw resource_error("normal_form: degree " + std::to_string(d) + " beyond the computed range");
    }
    const auto& deg = degrees_[static_cast<std::size_t>(d)];
    return deg.normal_form[static_cast<std::size_t>(deg.index.at(m))];
  }

 private:
  int n_ = 0, k_ = 0, r_ = 1;
  bool complete_ = false;
  std::vector<QuotientDegree> degrees_;
};

inline constexpr std::int64_t kQuotientMonomialGuard = 100000;

/// Row reduction of the ideal's degree-d slice inside the truncated ring
/// C[x]/<x_i^{rk}>: the slice is spanned by e_j(x^r) * m, n-k+1 <= j <= n.
inline QuotientDegree build_quotient_degree(int n, int k, int r, int d) {
  QuotientDegree out;
  out.monomials = monomials_of_degree(n, d, r * k);
  std::vector<std::pair<MonomialOrderKey, Monomial>> keyed;
  for (const auto& m : out.monomials) keyed.emplace_back(MonomialOrderKey(m), m);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return b.first < a.first; });
  out.monomials.clear();
  for (auto& [key, m] : keyed) out.monomials.push_back(m);
  for (std::size_t i = 0; i < out.monomials.size(); ++i) out.index.emplace(out.monomials[i], static_cast<int>(i));

  int columns = static_cast<int>(out.monomials.size());
  RowReducer ideal(columns);
  for (int j = std::max(1, n - k + 1); j <= n; ++j) {
    if (r * j > d) break;
    std::vector<std::vector<int>> subsets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
      if (std::popcount(mask) == j) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
          if ((mask >> i) & 1U) s.push_back(i);
        subsets.push_back(std::move(s));
      }
    for (const auto& m : monomials_of_degree(n, d - r * j, r * k)) {
      SparseVector row;
      for (const auto& s : subsets) {
        std::vector<int> e = m.exponents();
        bool alive = true;
        for (int i : s) {
          e[static_cast<std::size_t>(i)] += r;
          alive = alive && e[static_cast<std::size_t>(i)] < r * k;
        }
        if (alive) row.emplace_back(out.index.at(Monomial(e)), Rational(1));
      }
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      if (!row.empty()) ideal.insert(std::move(row));
      if (ideal.rank() == columns) break;
    }
  }

  std::vector<int> position(static_cast<std::size_t>(columns), -1);
  for (int c = 0; c < columns; ++c)
    if (!ideal.is_pivot(c)) {
      position[static_cast<std::size_t>(c)] = static_cast<int>(out.standard.size());
      out.standard.push_back(c);
    }
  out.normal_form.resize(static_cast<std::size_t>(columns));
  for (int c = 0; c < columns; ++c) {
    if (position[static_cast<std::size_t>(c)] >= 0) {
      out.normal_form[static_cast<std::size_t>(c)] = {{position[static_cast<std::size_t>(c)], Rational(1)}};
      continue;
    }
    // pivot row: x_c + sum a_j x_j lies in the ideal, so x_c = -sum a_j x_j
    SparseVector nf;
    for (const auto& [col, value] : ideal.row_for_pivot(c))
      if (col != c) {
        ensure(position[static_cast<std::size_t>(col)] >= 0, "build_quotient: echelon form not fully reduced");
        nf.emplace_back(position[static_cast<std::size_t>(col)], -value);
      }
    std::sort(nf.begin(), nf.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.normal_form[static_cast<std::size_t>(c)] = std::move(nf);
  }
  return out;
}

/// Builds the quotient degree by degree up to degree_cap (negative: until the
/// first vanishing degree, after which every higher degree vanishes too).
inline GradedQuotient build_quotient(int n, int k, int r = 1, int degree_cap = -1) {
  require(1 <= k && k <= n && r >= 1, "build_quotient: need 1 <= k <= n and r >= 1");
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= r * k;
    if (total > kQuotientMonomialGuard)
      throw resource_error("build_quotient: (rk)^n = " + std::to_string(r * k) + "^" + std::to_string(n) +
                           " truncated monomials exceeds the guard " + std::to_string(kQuotientMonomialGuard));
  }
  GradedQuotient q(n, k, r);
  int max_degree = n * (r * k - 1);
  for (int d = 0; d <= max_degree; ++d) {
    if (degree_cap >= 0 && d > degree_cap) return q;
    q.mutable_degrees().push_back(build_quotient_degree(n, k, r, d));
    if (q.dim(d) == 0) break;
  }
  q.set_complete(true);
  return q;
}

// ---------------------------------------------------------------------------
// Refined components R_{n,k,rho} = image(P_{<=rho}) / image(P_{<rho}).

struct RefinedComponent {
  Partition rho;
  int degree = 0;
  RowReducer upper;  // image of span{m : lambda(m) dominated by rho}
  RowReducer lower;  // image of span{m : lambda(m) strictly dominated by rho}
  int dim() const { return upper.rank() - lower.rank(); }
};

inline RefinedComponent refined_component(const GradedQuotient& q, const Partition& rho) {
  RefinedComponent c;
  c.rho = rho.trimmed();
  c.degree = rho.size();
  int d = c.degree;
  c.upper = RowReducer(q.dim(d));
  c.lower = RowReducer(q.dim(d));
  if (rho.length() > q.n() || q.dim(d) == 0) return c;
  for (const auto& m : q.degree(d).monomials) {
    Order o = dominance_compare(exponent_partition(m), c.rho);
    if (o != Order::Less && o != Order::Equal) continue;
    SparseVector nf = q.normal_form(m);
    if (nf.empty()) continue;
    c.upper.insert(nf);
    if (o == Order::Less) c.lower.insert(std::move(nf));
  }
  return c;
}

// ---------------------------------------------------------------------------
// Group action and traces. A colored permutation g acts by x_i -> xi^{c_i} x_{g(i)}.

/// Image of a standard monomial under g: xi-power and normal form.
inline std::pair<int, SparseVector> act_on_monomial(const GradedQuotient& q, const ColoredPermutation& g,
                                                    const Monomial& m) {
  int n = q.n();
  Monomial image(n);
  int power = 0;
  for (int i = 1; i <= n; ++i) {
    image.exp(g.letter(i)) = m.exp(i);
    power += g.color(i) * m.exp(i);
  }
  return {power % q.r(), q.normal_form(image)};
}

namespace detail {

// Trace of g on a g-stable subspace given in fully reduced echelon form: each
// image vector's coordinate on its own basis row is its value at that row's pivot.
inline std::vector<Rational> subspace_trace(const GradedQuotient& q, const ColoredPermutation& g, int d,
                                            const RowReducer& space) {
  std::vector<Rational> by_power(static_cast<std::size_t>(q.r()), 0);
  std::vector<Monomial> basis = q.standard_monomials(d);
  for (std::size_t idx = 0; idx < space.rows().size(); ++idx) {
    int pivot = space.pivots()[idx];
    for (const auto& [col, value] : space.rows()[idx]) {
      auto [power, nf] = act_on_monomial(q, g, basis[static_cast<std::size_t>(col)]);
      Rational at = sparse_at(nf, pivot);
      if (at != 0) by_power[static_cast<std::size_t>(power)] += value * at;
    }
  }
  return by_power;
}

}  // namespace detail

inline CyclotomicNumber group_action_trace(const GradedQuotient& q, const ColoredPermutation& g,
                                           const RefinedComponent& c) {
  require(g.r() == q.r(), "group_action_trace: element's r differs from the quotient's");
  require(g.size() == q.n(), "group_action_trace: element acts on a different number of variables");
  auto up = detail::subspace_trace(q, g, c.degree, c.upper);
  auto low = detail::subspace_trace(q, g, c.degree, c.lower);
  CyclotomicNumber t(q.r());
  for (int j = 0; j < q.r(); ++j) t.add_power(j, up[static_cast<std::size_t>(j)] - low[static_cast<std::size_t>(j)]);
  return t;
}

// ---------------------------------------------------------------------------
// Characters.

/// Partitions obtained by removing a border strip of size h, with the strip's
/// height (rows spanned minus one).
inline std::vector<std::pair<Partition, int>> remove_border_strips(const Partition& lambda, int h) {
  std::vector<std::pair<Partition, int>> out;
  int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 1; i <= len; ++i) beta[static_cast<std::size_t>(i - 1)] = lambda.part(i) + len - i;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - h;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++height;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> parts(nb.size());
    for (std::size_t j = 0; j < nb.size(); ++j) parts[j] = nb[j] - static_cast<int>(nb.size() - 1 - j);
    out.emplace_back(Partition(parts).trimmed(), height);
  }
  return out;
}

/// Murnaghan-Nakayama recursion removing strips of size mu_1, mu_2, ...
inline Integer sn_character(const Partition& lambda, const Partition& mu) {
  require(lambda.size() == mu.size(), "sn_character: |lambda| must equal |mu|");
  std::map<std::pair<Partition, int>, Integer> memo;
  std::vector<int> cycles = mu.trimmed().parts();
  std::function<Integer(const Partition&, std::size_t)> chi = [&](const Partition& shape, std::size_t i) -> Integer {
    if (i == cycles.size()) return 1;
    auto key = std::make_pair(shape, static_cast<int>(i));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer total = 0;
    for (const auto& [rest, height] : remove_border_strips(shape, cycles[i]))
      total += (height % 2 ? -1 : 1) * chi(rest, i + 1);
    memo.emplace(key, total);
    return total;
  };
  return chi(lambda.trimmed(), 0);
}

/// Character of Z_r wr S_n at the class whose cycles of color sum c have the
/// lengths in mu_bar[c]: strips of size h removed from component j carry xi^{j c}.
inline CyclotomicNumber wreath_character(const RPartition& lambda, const RPartition& mu, int r) {
  require(lambda.r() == r && mu.r() == r, "wreath_character: both labels need r components");
  require(lambda.size() == mu.size(), "wreath_character: sizes differ");
  std::vector<std::pair<int, int>> cycles;  // (length, color)
  for (int c = 0; c < r; ++c) {
    Partition lengths = mu[c].trimmed();
    for (int h : lengths.parts()) cycles.emplace_back(h, c);
  }
  std::map<std::pair<RPartition, int>, CyclotomicNumber> memo;
  std::function<CyclotomicNumber(const RPartition&, std::size_t)> chi = [&](const RPartition& shape,
                                                                            std::size_t i) -> CyclotomicNumber {
    if (i == cycles.size()) return CyclotomicNumber(r, 1);
    auto key = std::make_pair(shape, static_cast<int>(i));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    auto [h, color] = cycles[i];
    CyclotomicNumber total(r);
    for (int j = 0; j < r; ++j)
      for (const auto& [rest, height] : remove_border_strips(shape[j], h)) {
        std::vector<Partition> comps = shape.components();
        comps[static_cast<std::size_t>(j)] = rest;
        CyclotomicNumber term = chi(RPartition(comps), i + 1) * CyclotomicNumber::root_power(r, j * color);
        if (height % 2) total -= term;
        else total += term;
      }
    memo.emplace(key, total);
    return total;
  };
  std::vector<Partition> trimmed;
  for (const auto& p : lambda.components()) trimmed.push_back(p.trimmed());
  return chi(RPartition(trimmed), 0);
}

struct ConjugacyClass {
  RPartition label;  // lengths of cycles grouped by color sum
  ColoredPermutation representative;
  Integer size;
};

inline Integer group_order(int n, int r) {
  Integer order = factorial(n);
  for (int i = 0; i < n; ++i) order *= r;
  return order;
}

/// Classes of G(r,1,n) (S_n when r = 1): one cycle per part, color sum c placed
/// on the cycle's smallest element.
inline std::vector<ConjugacyClass> conjugacy_classes(int n, int r) {
  std::vector<ConjugacyClass> out;
  for (const auto& label : r_partitions_of(n, r)) {
    std::vector<int> word(static_cast<std::size_t>(n)), colors(static_cast<std::size_t>(n), 0);
    Integer centralizer = 1;
    int next = 1;
    for (int c = 0; c < r; ++c) {
      std::map<int, int> mult;
      Partition lengths = label[c].trimmed();
      for (int h : lengths.parts()) {
        ++mult[h];
        for (int t = 0; t < h; ++t) word[static_cast<std::size_t>(next + t - 1)] = next + (t + 1) % h;
        colors[static_cast<std::size_t>(next - 1)] = c;
        next += h;
      }
      for (const auto& [h, m] : mult) {
        centralizer *= factorial(m);
        for (int t = 0; t < m; ++t) centralizer *= h * r;
      }
    }
    out.push_back({label, ColoredPermutation(Permutation(word), colors, r), group_order(n, r) / centralizer});
  }
  return out;
}

/// Multiplicity of each irreducible in a refined component, by the inner
/// product of its character with the irreducible characters.
inline WreathExpansion decompose(const GradedQuotient& q, const RefinedComponent& c) {
  int n = q.n(), r = q.r();
  auto classes = conjugacy_classes(n, r);
  std::vector<CyclotomicNumber> traces;
  for (const auto& cls : classes) traces.push_back(group_action_trace(q, cls.representative, c));
  Integer order = group_order(n, r);
  WreathExpansion out;
  Integer dim_check = 0;
  for (const auto& lambda : r_partitions_of(n, r)) {
    CyclotomicNumber sum(r);
    for (std::size_t i = 0; i < classes.size(); ++i)
      sum += traces[i] * wreath_character(lambda, classes[i].label, r).conj() * Rational(classes[i].size);
    sum *= Rational(1) / Rational(order);
    ensure(sum.is_rational(), "decompose: multiplicity of " + lambda.to_string() + " is not rational");
    Rational m = sum.rational_part();
    ensure(m.get_den() == 1 && m >= 0,
           "decompose: multiplicity of " + lambda.to_string() + " is " + to_string(m) + ", not a non-negative integer");
    out.add(lambda, m.get_num());
    dim_check += m.get_num() * Integer(static_cast<long>(enumerate_r_syt(lambda).size()));
  }
  ensure(dim_check == c.dim(), "decompose: multiplicities do not account for the component's dimension");
  return out;
}

inline SchurExpansion decompose_symmetric(const GradedQuotient& q, const RefinedComponent& c) {
  require(q.r() == 1, "decompose_symmetric: quotient must have r = 1");
  SchurExpansion out;
  WreathExpansion full = decompose(q, c);
  for (const auto& [lambda, m] : full.terms()) out.add(lambda[0], m);
  return out;
}

// ---------------------------------------------------------------------------
// Tableau counts versus the oracle.

struct VerifyCell {
  Partition rho;
  int dim = 0;
  WreathExpansion oracle;
  WreathExpansion theorem;
  bool agree() const { return oracle == theorem; }
};

struct VerifyReport {
  int n = 0, k = 0, r = 1;
  QPolynomial hilbert;
  std::vector<VerifyCell> cells;
  int mismatches() const {
    int m = 0;
    for (const auto& c : cells) m += c.agree() ? 0 : 1;
    return m;
  }
};

/// Every partition rho with at most n parts and |rho| up to the top degree.
inline VerifyReport verify_theorem(int n, int k, int r = 1) {
  VerifyReport report;
  report.n = n;
  report.k = k;
  report.r = r;
  GradedQuotient q = build_quotient(n, k, r);
  report.hilbert = q.hilbert();
  std::vector<Partition> rhos;
  for (int d = 0; d <= q.top_degree(); ++d)
    for (const auto& rho : partitions_of(d, n)) rhos.push_back(rho);
  report.cells.resize(rhos.size());
  parallel_for(rhos.size(), [&](std::size_t i) {
    VerifyCell& cell = report.cells[i];
    cell.rho = rhos[i];
    RefinedComponent c = refined_component(q, rhos[i]);
    cell.dim = c.dim();
    cell.oracle = decompose(q, c);
    for (const auto& lambda : r_partitions_of(n, r)) {
      Integer m = r == 1 ? multiplicity_rnk(n, k, rhos[i], lambda[0]) : multiplicity_snk(n, k, r, rhos[i], lambda);
      cell.theorem.add(lambda, m);
    }
  });
  return report;
}

}  // namespace coinv
