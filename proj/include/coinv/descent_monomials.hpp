#pragma once

// Descent monomials gs_{pi,I} (r = 1) and b_{g,I} (r > 1), the order on
// monomials used by straightening, and the decomposition lemmas.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coinv/combinatorics.hpp"
#include "coinv/polynomial.hpp"

namespace coinv {

/// Variables sorted by decreasing exponent (ties: smaller index first); colors
/// are the exponents of those variables mod r.
inline ColoredPermutation index_colored_permutation(const Monomial& m, int r = 1) {
  require(r >= 1, "index_colored_permutation: r must be positive");
  int n = m.nvars();
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i + 1;
  std::stable_sort(word.begin(), word.end(), [&](int a, int b) { return m.exp(a) > m.exp(b); });
  std::vector<int> colors(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) colors[static_cast<std::size_t>(i)] = m.exp(word[static_cast<std::size_t>(i)]) % r;
  return ColoredPermutation(Permutation(std::move(word)), std::move(colors), r);
}

inline Permutation index_permutation(const Monomial& m) { return index_colored_permutation(m, 1).word(); }

inline Partition exponent_partition(const Monomial& m) {
  std::vector<int> e = m.exponents();
  std::sort(e.rbegin(), e.rend());
  return Partition(std::move(e));
}

/// The sequence (lambda_i - r d_i(g) - c_i(g)) / r along the index colored permutation.
inline std::vector<int> complementary_sequence(const Monomial& m, int r) {
  ColoredPermutation g = index_colored_permutation(m, r);
  ColoredStats st = colored_descents(g);
  std::vector<int> v(static_cast<std::size_t>(m.nvars()));
  for (int i = 1; i <= m.nvars(); ++i) {
    int diff = m.exp(g.letter(i)) - st.f[static_cast<std::size_t>(i - 1)];
    ensure(diff >= 0 && diff % r == 0, "complementary partition: exponent below the descent staircase");
    v[static_cast<std::size_t>(i - 1)] = diff / r;
    if (i > 1) ensure(v[static_cast<std::size_t>(i - 2)] >= v[static_cast<std::size_t>(i - 1)],
                      "complementary partition: sequence not weakly decreasing");
  }
  return v;
}

inline Partition complementary_partition(const Monomial& m, int r = 1) {
  return conjugate(Partition(complementary_sequence(m, r)));
}

inline Monomial gs_monomial(const Permutation& sigma) {
  PermutationStats st = perm_descents(sigma);
  Monomial m(sigma.size());
  for (int i = 1; i <= sigma.size(); ++i) m.exp(sigma(i)) = st.d[static_cast<std::size_t>(i - 1)];
  return m;
}

/// (g, I, nu): the monomial b_{g,I} times e_nu(x^r). nu is empty for elements of
/// the quotient basis.
struct DescentBasisElement {
  ColoredPermutation g;
  std::vector<int> I;
  Partition nu;

  std::string to_string() const {
    std::string s = "g=[" + g.to_string() + "] I=(";
    for (std::size_t i = 0; i < I.size(); ++i) s += (i ? "," : "") + std::to_string(I[i]);
    s += ")";
    if (!nu.is_zero()) s += " nu=" + nu.to_string();
    return s;
  }

  friend bool operator==(const DescentBasisElement& a, const DescentBasisElement& b) {
    return a.g == b.g && a.I == b.I && a.nu == b.nu;
  }
  friend std::strong_ordering operator<=>(const DescentBasisElement& a, const DescentBasisElement& b) {
    if (auto c = a.g <=> b.g; c != 0) return c;
    if (auto c = a.I <=> b.I; c != 0) return c;
    return a.nu <=> b.nu;
  }
};

/// b_g times x_{pi_l}^{r I_l}, without checking the basis conditions on I.
inline Monomial descent_monomial_raw(const ColoredPermutation& g, const std::vector<int>& I) {
  int n = g.size();
  require(I.size() <= static_cast<std::size_t>(n), "descent monomial: I longer than n");
  ColoredStats st = colored_descents(g);
  Monomial m(n);
  for (int i = 1; i <= n; ++i) {
    int e = st.f[static_cast<std::size_t>(i - 1)];
    if (static_cast<std::size_t>(i) <= I.size()) e += g.r() * I[static_cast<std::size_t>(i - 1)];
    m.exp(g.letter(i)) = e;
  }
  return m;
}

inline void check_sequence_condition(const ColoredPermutation& g, const std::vector<int>& I, int n, int k, int r) {
  require(1 <= k && k <= n, "descent basis element: need 1 <= k <= n");
  require(g.size() == n, "descent basis element: permutation has the wrong length");
  require(g.r() == r, "descent basis element: color count does not match r");
  require(I.size() == static_cast<std::size_t>(n - k), "descent basis element: I must have n-k entries");
  int des = colored_descents(g).des;
  int bound = k - des;
  require(bound > 0, "descent basis element: des(g) must be less than k");
  for (std::size_t i = 0; i < I.size(); ++i) {
    require(I[i] >= 0, "descent basis element: I entries must be non-negative");
    require(I[i] < bound, "descent basis element: need k - des(g) > i_1");
    if (i) require(I[i - 1] >= I[i], "descent basis element: I must be weakly decreasing");
  }
}

inline Monomial descent_basis_monomial(const DescentBasisElement& e, int n, int k, int r) {
  check_sequence_condition(e.g, e.I, n, k, r);
  require(e.nu.is_zero(), "descent_basis_monomial: element carries an e-factor");
  return descent_monomial_raw(e.g, e.I);
}

/// Compares monomials of equal degree: m1 < m2 when lambda(m1) is strictly
/// dominated by lambda(m2), or the exponent partitions agree and pi(m1) has
/// more inversions.
inline Order prec_compare(const Monomial& m1, const Monomial& m2) {
  require(m1.nvars() == m2.nvars(), "prec_compare: variable counts differ");
  require(m1.degree() == m2.degree(), "prec_compare: monomials of different degree");
  if (m1 == m2) return Order::Equal;
  Order dom = dominance_compare(exponent_partition(m1), exponent_partition(m2));
  if (dom != Order::Equal) return dom;
  int i1 = perm_descents(index_permutation(m1)).inv, i2 = perm_descents(index_permutation(m2)).inv;
  if (i1 > i2) return Order::Less;
  if (i1 < i2) return Order::Greater;
  return Order::Incomparable;
}

/// Largest monomial of m * e_mu(x^r): x_{pi(i)} gets exponent p_{pi(i)} + r mu'_i.
inline Monomial leading_product_monomial(const Monomial& m, const Partition& mu, int r = 1) {
  int n = m.nvars();
  require(mu.largest() <= n, "leading_product_monomial: parts of mu must be at most n");
  Permutation pi = index_permutation(m);
  Partition conj = conjugate(mu);
  Monomial out = m;
  for (int i = 1; i <= n; ++i) out.exp(pi(i)) += r * conj.part(i);
  return out;
}

inline void check_truncation(const Monomial& m, int k, int r, const char* who) {
  require(m.max_exponent() < r * k, std::string(who) + ": every exponent must be below r*k = " +
                                        std::to_string(r * k) + " (got " + m.to_string() + ")");
}

/// One straightening step: the unique (g, I, nu) whose leading product monomial is m.
inline DescentBasisElement straighten_step(const Monomial& m, int n, int k, int r = 1) {
  require(m.nvars() == n, "straighten_step: monomial must have n variables");
  require(1 <= k && k <= n && r >= 1, "straighten_step: need 1 <= k <= n and r >= 1");
  check_truncation(m, k, r, "straighten_step");
  DescentBasisElement e;
  e.g = index_colored_permutation(m, r);
  std::vector<int> v = complementary_sequence(m, r);
  int pivot = v[static_cast<std::size_t>(n - k)];  // v_{n-k+1}
  e.I.resize(static_cast<std::size_t>(n - k));
  std::vector<int> nu_conj(v);
  for (int l = 0; l < n - k; ++l) {
    e.I[static_cast<std::size_t>(l)] = v[static_cast<std::size_t>(l)] - pivot;
    nu_conj[static_cast<std::size_t>(l)] = pivot;
  }
  e.nu = conjugate(Partition(nu_conj));
  return e;
}

namespace detail {
/// Multiplies p by e_d(x^r), dropping every term with an exponent >= bound.
inline MultiPolynomial times_elementary_truncated(const MultiPolynomial& p, int d, int r, int bound) {
  int n = p.nvars();
  MultiPolynomial out(n);
  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  std::fill(pick.end() - d, pick.end(), 1);
  std::vector<std::vector<int>> subsets;
  do {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (pick[static_cast<std::size_t>(i)]) s.push_back(i + 1);
    subsets.push_back(std::move(s));
  } while (std::next_permutation(pick.begin(), pick.end()));
  for (const auto& [mono, c] : p.terms()) {
    for (const auto& s : subsets) {
      Monomial t = mono;
      bool ok = true;
      for (int i : s) {
        t.exp(i) += r;
        if (t.exp(i) >= bound) ok = false;
      }
      if (ok) out.add_term(t, c);
    }
  }
  return out;
}
}  // namespace detail

/// b_{g,I} e_nu(x^r) modulo <x_i^{rk}>.
inline MultiPolynomial basis_element_polynomial(const DescentBasisElement& e, int n, int k, int r) {
  check_sequence_condition(e.g, e.I, n, k, r);
  Monomial b = descent_monomial_raw(e.g, e.I);
  MultiPolynomial p(n);
  if (b.max_exponent() < r * k) p.add_term(b, Rational(1));
  for (int part : e.nu.parts())
    if (part > 0) {
      require(part >= n - k + 1 && part <= n, "basis element: parts of nu must lie in [n-k+1, n]");
      p = detail::times_elementary_truncated(p, part, r, r * k);
    }
  return p;
}

/// Sort key for a total order refining the monomial order: exponent partition
/// lexicographically, then fewer inversions is larger, then exponent vector.
struct MonomialOrderKey {
  std::vector<int> lambda;
  int neg_inv = 0;
  Monomial mono;

  explicit MonomialOrderKey(const Monomial& m)
      : lambda(exponent_partition(m).parts()), neg_inv(-perm_descents(index_permutation(m)).inv), mono(m) {}

  friend auto operator<=>(const MonomialOrderKey&, const MonomialOrderKey&) = default;
  friend bool operator==(const MonomialOrderKey&, const MonomialOrderKey&) = default;
};

using BasisExpansion = std::map<DescentBasisElement, Rational>;

/// Repeated straightening for fixed (n, k, r). Expanded basis elements are cached,
/// so one instance should be reused across many monomials (single thread).
class Straightener {
 public:
  Straightener(int n, int k, int r) : n_(n), k_(k), r_(r) {
    require(1 <= k && k <= n && r >= 1, "straightening: need 1 <= k <= n and r >= 1");
  }

  const MultiPolynomial& expand(const DescentBasisElement& e) {
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(e, basis_element_polynomial(e, n_, k_, r_)).first->second;
  }

  BasisExpansion straighten(const Monomial& m) {
    require(m.nvars() == n_, "straighten_full: monomial must have n variables");
    check_truncation(m, k_, r_, "straighten_full");
    return straighten(MultiPolynomial::term(m, Rational(1)));
  }

  /// Expansion of a polynomial whose monomials all have exponents below r*k.
  BasisExpansion straighten(const MultiPolynomial& p) {
    std::map<MonomialOrderKey, Rational> work;
    for (const auto& [mono, c] : p.terms()) {
      check_truncation(mono, k_, r_, "straighten_full");
      work.emplace(MonomialOrderKey(mono), c);
    }
    BasisExpansion out;
    while (!work.empty()) {
      auto top = std::prev(work.end());
      MonomialOrderKey key = top->first;
      Rational c = top->second;
      DescentBasisElement e = straighten_step(key.mono, n_, k_, r_);
      const MultiPolynomial& poly = expand(e);
      Rational lead = poly.coefficient(key.mono);
      ensure(lead != 0, "straightening: leading monomial missing from expansion");
      Rational factor = c / lead;
      out[e] += factor;
      for (const auto& [mono, coeff] : poly.terms()) {
        MonomialOrderKey k2(mono);
        ensure(k2 <= key, "straightening: expansion produced a larger monomial");
        Rational& slot = work[k2];
        slot -= factor * coeff;
        if (slot == 0) work.erase(k2);
      }
    }
    for (auto it = out.begin(); it != out.end();)
      it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  }

  BasisExpansion project(const Monomial& m) {
    BasisExpansion full = straighten(m);
    BasisExpansion out;
    for (const auto& [e, c] : full)
      if (e.nu.is_zero()) out.emplace(e, c);
    return out;
  }

  MultiPolynomial reexpand(const BasisExpansion& ex) {
    MultiPolynomial p(n_);
    for (const auto& [e, c] : ex) p += expand(e) * c;
    return p;
  }

  int n() const { return n_; }
  int k() const { return k_; }
  int r() const { return r_; }

 private:
  int n_, k_, r_;
  std::map<DescentBasisElement, MultiPolynomial> cache_;
};

inline BasisExpansion straighten_full(const Monomial& m, int n, int k, int r = 1) {
  Straightener s(n, k, r);
  return s.straighten(m);
}

inline BasisExpansion project_to_quotient(const Monomial& m, int n, int k, int r = 1) {
  Straightener s(n, k, r);
  return s.project(m);
}

/// All quotient basis elements (g, I): des(g) < k and k - des(g) > I_1 >= ... >= I_{n-k} >= 0.
inline std::vector<DescentBasisElement> enumerate_basis(int n, int k, int r = 1) {
  require(1 <= k && k <= n && r >= 1, "enumerate_basis: need 1 <= k <= n and r >= 1");
  std::vector<DescentBasisElement> out;
  std::vector<ColoredPermutation> gs = r == 1 ? std::vector<ColoredPermutation>{} : all_colored_permutations(n, r);
  if (r == 1)
    for (const auto& p : all_permutations(n)) gs.push_back(ColoredPermutation::uncolored(p));
  for (const auto& g : gs) {
    int bound = k - colored_descents(g).des;
    if (bound <= 0) continue;
    std::vector<int> I(static_cast<std::size_t>(n - k), 0);
    auto rec = [&](auto&& self, int pos, int cap) -> void {
      if (pos == n - k) {
        out.push_back({g, I, Partition{}});
        return;
      }
      for (int v = cap; v >= 0; --v) {
        I[static_cast<std::size_t>(pos)] = v;
        self(self, pos + 1, v);
      }
    };
    rec(rec, 0, bound - 1);
  }
  return out;
}

/// Basis of the truncated ring C[x]/<x_i^{rk}>: quotient basis elements times
/// e_nu(x^r), nu with parts in [n-k+1, n], whose leading monomial stays below r*k.
inline std::vector<DescentBasisElement> enumerate_truncated_basis(int n, int k, int r = 1) {
  std::vector<DescentBasisElement> out;
  for (const auto& base : enumerate_basis(n, k, r)) {
    int top = descent_monomial_raw(base.g, base.I).max_exponent();
    // nu' has length n-k+1..n columns; its first part ell(nu) adds r*ell(nu) to the top exponent
    int max_len = (r * k - 1 - top) / r;
    for (int len = 0; len <= max_len; ++len) {
      std::vector<int> nu(static_cast<std::size_t>(len), 0);
      auto rec = [&](auto&& self, int pos, int cap) -> void {
        if (pos == len) {
          out.push_back({base.g, base.I, Partition(nu)});
          return;
        }
        for (int v = cap; v >= n - k + 1; --v) {
          nu[static_cast<std::size_t>(pos)] = v;
          self(self, pos + 1, v);
        }
      };
      rec(rec, 0, n);
    }
  }
  return out;
}

/// rho with mu = nu + r rho, or nullopt when no such partition exists.
inline std::optional<Partition> decompose_nu(const Partition& mu, const Partition& nu, int r = 1) {
  require(r >= 1, "decompose_nu: r must be positive");
  int len = static_cast<int>(std::max(mu.stored_length(), nu.stored_length()));
  std::vector<int> rho(static_cast<std::size_t>(len));
  for (int i = 1; i <= len; ++i) {
    int diff = mu.part(i) - nu.part(i);
    if (diff < 0 || diff % r != 0) return std::nullopt;
    rho[static_cast<std::size_t>(i - 1)] = diff / r;
    if (i > 1 && rho[static_cast<std::size_t>(i - 2)] < rho[static_cast<std::size_t>(i - 1)]) return std::nullopt;
  }
  return Partition(std::move(rho));
}

struct NuRho {
  Partition nu;
  Partition rho;
};

/// The unique (nu, rho) with mu = nu + r rho, nu the exponent partition of an
/// (n,k,r)-descent monomial with Des^r_{n-k+1,n}(nu) = S and nu_i = mu_i mod r on
/// the tail, and rho_1 = ... = rho_{n-k+1}.
inline NuRho decompose_by_descent_subset(const Partition& mu, DescentSet s, int n, int k, int r = 1) {
  require(1 <= k && k <= n && r >= 1, "decompose_by_descent_subset: need 1 <= k <= n and r >= 1");
  require(classify_partition(mu, n, k, r).is_nk_partition, "decompose_by_descent_subset: mu must be an (n,k,r)-partition");
  Partition m = mu.padded(n);
  DescentSet allowed = partition_descents(m, r, n - k + 1, n);
  require(s.subset_of(allowed), "decompose_by_descent_subset: S must lie inside Des^r_{n-k+1,n}(mu)");
  // a descent monomial's exponent partition ends below r, so it never descends at n
  require(!s.contains(n), "decompose_by_descent_subset: no decomposition for this S");
  std::vector<int> nu(static_cast<std::size_t>(n)), rho(static_cast<std::size_t>(n));
  int above = 0;
  for (int i = n; i >= n - k + 1; --i) {
    if (s.contains(i)) ++above;
    int residue = m.part(i) % r;
    nu[static_cast<std::size_t>(i - 1)] = residue + r * above;
    int diff = m.part(i) - nu[static_cast<std::size_t>(i - 1)];
    require(diff >= 0 && diff % r == 0, "decompose_by_descent_subset: no decomposition for this S");
    rho[static_cast<std::size_t>(i - 1)] = diff / r;
  }
  int flat = rho[static_cast<std::size_t>(n - k)];
  for (int i = 1; i <= n - k; ++i) {
    rho[static_cast<std::size_t>(i - 1)] = flat;
    nu[static_cast<std::size_t>(i - 1)] = m.part(i) - r * flat;
  }
  for (int i = 1; i < n; ++i) {
    require(nu[static_cast<std::size_t>(i - 1)] >= nu[static_cast<std::size_t>(i)] &&
                rho[static_cast<std::size_t>(i - 1)] >= rho[static_cast<std::size_t>(i)],
            "decompose_by_descent_subset: no decomposition for this S");
  }
  Partition nu_part(std::move(nu));
  // for r > 1 the residues can push a step of nu above r
  require(classify_partition(nu_part, n, k, r).is_exponent_of_descent_monomial,
          "decompose_by_descent_subset: no decomposition for this S");
  return {std::move(nu_part), Partition(std::move(rho))};
}

}  // namespace coinv
