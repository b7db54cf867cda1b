#pragma once

// Closed-form multiplicities of irreducibles in the refined components
// R_{n,k,rho} and S_{n,k,rho}, their generating functions and Frobenius images.

#include <map>
#include <string>
#include <vector>

#include "coinv/combinatorics.hpp"
#include "coinv/symfunc.hpp"
#include "coinv/tableaux.hpp"

namespace coinv {

inline Partition padded_rho(const Partition& rho, int n) {
  require(rho.length() <= n, "rho has more than n nonzero parts");
  return rho.padded(n);
}

inline Integer multiplicity_rnk(int n, int k, const Partition& rho, const Partition& lambda) {
  require(1 <= k && k <= n, "multiplicity_rnk: need 1 <= k <= n");
  require(lambda.size() == n, "multiplicity_rnk: lambda must be a partition of n");
  if (rho.length() > n || !classify_partition(rho, n, k, 1).is_exponent_of_descent_monomial) return 0;
  Partition p = rho.padded(n);
  return count_syt_descents_between(lambda, partition_descents(p, 1, n - k + 1, n), partition_descents(p, 1));
}

inline Integer multiplicity_snk(int n, int k, int r, const Partition& rho, const RPartition& lambda) {
  require(1 <= k && k <= n && r >= 1, "multiplicity_snk: need 1 <= k <= n and r >= 1");
  require(lambda.r() == r, "multiplicity_snk: lambda must have r components");
  require(lambda.size() == n, "multiplicity_snk: lambda must have n boxes");
  if (rho.length() > n || !classify_partition(rho, n, k, r).is_exponent_of_descent_monomial) return 0;
  Partition p = rho.padded(n);
  DescentSet lo = partition_descents(p, r, n - k + 1, n);
  DescentSet hi = partition_descents(p, r, 1, n);
  Integer count = 0;
  for (const auto& t : enumerate_r_syt(lambda)) {
    RTableauStats s = r_tableau_stats(t);
    if (!lo.subset_of(s.descents) || !s.descents.subset_of(hi)) continue;
    bool colors = true;
    for (int i = 1; i <= n && colors; ++i) colors = s.c[static_cast<std::size_t>(i - 1)] == p.part(i) % r;
    if (colors) ++count;
  }
  return count;
}

inline SchurExpansion frob_rnk_rho(int n, int k, const Partition& rho) {
  SchurExpansion out;
  for (const auto& lambda : partitions_of(n)) out.add(lambda, multiplicity_rnk(n, k, rho, lambda));
  return out;
}

inline WreathExpansion multiplicity_table_snk(int n, int k, int r, const Partition& rho) {
  WreathExpansion out;
  for (const auto& lambda : r_partitions_of(n, r)) out.add(lambda, multiplicity_snk(n, k, r, rho, lambda));
  return out;
}

/// Data of the ribbon-times-h factorisation: gaps d_i between consecutive
/// descents of rho, the number p of descents below n-k+1, and the ribbon rows
/// (n - sum d, d_des, ..., d_{p+1}) with zero-length rows dropped.
struct RibbonFactorisation {
  std::vector<int> d;
  int p = 0;
  std::vector<int> rows;
};

inline RibbonFactorisation ribbon_factorisation(int n, int k, const Partition& rho) {
  Partition m = padded_rho(rho, n);
  RibbonFactorisation f;
  int last = 0;
  for (int i : partition_descents(m, 1).to_vector()) {
    f.d.push_back(i - last);
    if (i < n - k + 1) ++f.p;
    last = i;
  }
  if (n - last > 0) f.rows.push_back(n - last);
  for (std::size_t i = f.d.size(); i-- > static_cast<std::size_t>(f.p);) f.rows.push_back(f.d[i]);
  return f;
}

/// s_gamma * prod_{i<=p} h_{d_i}; with omega set, the image s_{gamma'} * prod e_{d_i}.
inline SchurExpansion frob_ribbon_product(int n, int k, const Partition& rho, bool apply_omega = false) {
  if (rho.length() > n || !classify_partition(rho, n, k, 1).is_exponent_of_descent_monomial) return {};
  RibbonFactorisation f = ribbon_factorisation(n, k, rho);
  std::vector<int> rows = apply_omega ? conjugate_ribbon(f.rows) : f.rows;
  SymmetricPolynomial prod = SymmetricPolynomial::ribbon(rows, n);
  for (int i = 0; i < f.p; ++i) {
    int d = f.d[static_cast<std::size_t>(i)];
    prod = prod * (apply_omega ? SymmetricPolynomial::elementary(d, n) : SymmetricPolynomial::homogeneous(d, n));
  }
  return schur_expand(prod);
}

inline QPolynomial graded_mult_gf(int n, int k, const Partition& lambda) {
  require(1 <= k && k <= n, "graded_mult_gf: need 1 <= k <= n");
  require(lambda.size() == n, "graded_mult_gf: lambda must be a partition of n");
  QPolynomial f;
  for (const auto& t : enumerate_syt(lambda)) {
    TableauStats s = syt_descents(t);
    f += QPolynomial::monomial(s.maj) * q_binomial(n - s.descents.size() - 1, n - k);
  }
  return f;
}

inline QPolynomial graded_mult_gf_wreath(int n, int k, int r, const RPartition& lambda) {
  require(1 <= k && k <= n && r >= 1, "graded_mult_gf_wreath: need 1 <= k <= n and r >= 1");
  require(lambda.r() == r && lambda.size() == n, "graded_mult_gf_wreath: lambda must be an r-partition of n");
  QPolynomial f;
  for (const auto& t : enumerate_r_syt(lambda)) {
    RTableauStats s = r_tableau_stats(t);
    f += QPolynomial::monomial(s.maj) * q_binomial(n - s.descents.size() - 1, n - k).substitute_power(r);
  }
  return f;
}

inline GradedSchurExpansion grfrob(int n, int k) {
  GradedSchurExpansion out;
  for (const auto& lambda : partitions_of(n)) out.add(lambda, graded_mult_gf(n, k, lambda));
  return out;
}

inline GradedWreathExpansion grfrob_wreath(int n, int k, int r) {
  GradedWreathExpansion out;
  for (const auto& lambda : r_partitions_of(n, r)) out.add(lambda, graded_mult_gf_wreath(n, k, r, lambda));
  return out;
}

}  // namespace coinv
