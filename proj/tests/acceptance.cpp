// Acceptance run: one PASS/FAIL line per criterion. Usage: acceptance DATA_DIR

#include <coinv/cli.hpp>
#include <coinv/coinv.hpp>

#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>

using namespace coinv;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<Partition> exponent_partitions(int n, int k, int r) {
  std::vector<Partition> out;
  for (const auto& rho : sequences_below(n, r * k))
    if (classify_partition(rho, n, k, r).is_exponent_of_descent_monomial) out.push_back(rho);
  return out;
}

RPartition rp(std::initializer_list<Partition> parts) { return RPartition(parts); }

// Runs the tableau-count-vs-oracle sweep for each (n, k, r) and tallies cells.
Outcome sweep(const std::vector<std::tuple<int, int, int>>& grid, bool count_rectangle) {
  Outcome o;
  int cells = 0, mismatches = 0, zero = 0, rectangle_zero = 0;
  std::string first_bad;
  for (const auto& [n, k, r] : grid) {
    VerifyReport report = verify_theorem(n, k, r);
    for (const auto& c : report.cells) {
      ++cells;
      bool oracle_zero = c.dim == 0;
      if (oracle_zero) ++zero;
      if (oracle_zero && c.rho.length() <= n - 1 && c.rho.largest() <= k) ++rectangle_zero;
      if (!c.agree() || oracle_zero != c.theorem.empty()) {
        ++mismatches;
        if (first_bad.empty())
          first_bad = " first mismatch (n,k,r)=(" + std::to_string(n) + "," + std::to_string(k) + "," +
                      std::to_string(r) + ") rho=" + c.rho.to_string();
      }
    }
  }
  o.pass = mismatches == 0;
  o.detail = std::to_string(cells) + " cells, " + std::to_string(mismatches) + " mismatches, " +
             std::to_string(zero) + " zero modules";
  if (count_rectangle)
    o.detail += ", " + std::to_string(rectangle_zero) + " of them inside the (n-1)xk rectangle";
  o.detail += first_bad;
  return o;
}

Outcome ac1() {
  auto t = Clock::now();
  Integer m = multiplicity_rnk(8, 6, Partition{5, 3, 2, 2, 1, 1, 1, 0}, Partition{4, 3, 1});
  double s = seconds_since(t);
  return {m == 7 && s < 1.0, "multiplicity " + m.get_str() + " in " + std::to_string(s) + " s"};
}

Outcome ac2() {
  std::vector<std::tuple<int, int, int>> grid;
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= n; ++k) grid.emplace_back(n, k, 1);
  return sweep(grid, true);
}

Outcome ac3() {
  Partition rho{9, 5, 5, 4, 3, 2, 0};
  WreathExpansion table = multiplicity_table_snk(7, 5, 2, rho);
  WreathExpansion expected;
  for (const auto& left : {Partition{2, 1}, Partition{1, 1, 1}}) {
    for (const auto& right : {Partition{4}, Partition{2, 2}, Partition{2, 1, 1}}) expected.add(rp({left, right}), 1);
    expected.add(rp({left, Partition{3, 1}}), 2);
  }
  bool pointwise = true;
  for (const auto& lambda : r_partitions_of(7, 2))
    pointwise = pointwise && multiplicity_snk(7, 5, 2, rho, lambda) == expected.get(lambda);
  return {table == expected && pointwise, std::to_string(table.size()) + " nonzero entries"};
}

Outcome ac4() {
  std::vector<std::tuple<int, int, int>> grid;
  for (int r = 2; r <= 3; ++r)
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= n; ++k) grid.emplace_back(n, k, r);
  for (int k = 1; k <= 4; ++k) grid.emplace_back(4, k, 2);
  return sweep(grid, false);
}

Outcome ac5() {
  int checked = 0, bad = 0;
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k)
      for (const auto& rho : exponent_partitions(n, k, 1)) {
        ++checked;
        if (!(frob_ribbon_product(n, k, rho) == frob_rnk_rho(n, k, rho))) ++bad;
      }
  Partition rho{7, 7, 5, 3, 3, 3, 3, 2, 1, 1, 0};
  RibbonFactorisation f = ribbon_factorisation(11, 8, rho);
  bool example = f.d == std::vector<int>{2, 1, 4, 1, 2} && f.p == 2 && f.rows == std::vector<int>{1, 2, 1, 4} &&
                 frob_ribbon_product(11, 8, rho) == frob_rnk_rho(11, 8, rho);
  return {bad == 0 && example, std::to_string(checked) + " components, " + std::to_string(bad) +
                                   " mismatches; n=11 example " + (example ? "ok" : "wrong")};
}

Outcome ac6() {
  int checked = 0, bad = 0;
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      auto rhos = exponent_partitions(n, k, 1);
      for (const auto& lambda : partitions_of(n)) {
        QPolynomial sum;
        for (const auto& rho : rhos) {
          Integer c = multiplicity_rnk(n, k, rho, lambda);
          if (c != 0) sum += QPolynomial::monomial(rho.size(), c.get_si());
        }
        ++checked;
        if (!(graded_mult_gf(n, k, lambda) == sum)) ++bad;
        if (k == n) {
          QPolynomial maj;
          for (const auto& t : enumerate_syt(lambda)) maj += QPolynomial::monomial(syt_descents(t).maj);
          if (!(graded_mult_gf(n, n, lambda) == maj)) ++bad;
        }
      }
    }
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 4; ++n)
      for (int k = 1; k <= n; ++k) {
        auto rhos = exponent_partitions(n, k, r);
        for (const auto& lambda : r_partitions_of(n, r)) {
          QPolynomial sum;
          for (const auto& rho : rhos) {
            Integer c = multiplicity_snk(n, k, r, rho, lambda);
            if (c != 0) sum += QPolynomial::monomial(rho.size(), c.get_si());
          }
          ++checked;
          if (!(graded_mult_gf_wreath(n, k, r, lambda) == sum)) ++bad;
          if (k == n) {
            QPolynomial maj;
            for (const auto& t : enumerate_r_syt(lambda)) maj += QPolynomial::monomial(r_tableau_stats(t).maj);
            if (!(graded_mult_gf_wreath(n, n, r, lambda) == maj)) ++bad;
          }
        }
      }
  return {bad == 0, std::to_string(checked) + " generating functions, " + std::to_string(bad) + " mismatches"};
}

Outcome ac7() {
  int bad = 0;
  for (int n = 1; n <= 7; ++n) {
    GradedSchurExpansion g = grfrob(n, n);
    for (const auto& lambda : partitions_of(n))
      if (g.get(lambda).at_one() != oracle_ref::hook_length_count(lambda.parts())) ++bad;
  }
  Integer m = multiplicity_rnk(5, 5, Partition{3, 2, 2, 1, 0}, Partition{2, 2, 1});
  return {bad == 0 && m == 1,
          "Chevalley n<=7: " + std::to_string(bad) + " mismatches; (2,2,1) at mu=(3,2,2,1): " + m.get_str()};
}

Outcome ac8() {
  std::mt19937 rng(8);
  int configs = 0, tested = 0, bad = 0;
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 5; ++n)
      for (int k = 1; k <= n; ++k) {
        ++configs;
        GradedQuotient q = build_quotient(n, k, r);
        Straightener s(n, k, r);
        std::uniform_int_distribution<int> dist(0, r * k - 1);
        for (int trial = 0; trial < 200; ++trial) {
          std::vector<int> e(static_cast<std::size_t>(n));
          for (int& a : e) a = dist(rng);
          Monomial m(e);
          ++tested;
          if (!(s.reexpand(s.straighten(m)) == MultiPolynomial::term(m))) ++bad;
          SparseVector combined;
          for (const auto& [el, c] : s.project(m)) sparse_axpy(combined, c, q.normal_form(descent_basis_monomial(el, n, k, r)));
          if (!(combined == q.normal_form(m))) ++bad;
        }
      }
  return {bad == 0, std::to_string(tested) + " monomials over " + std::to_string(configs) + " configurations, " +
                        std::to_string(bad) + " failures"};
}

Outcome ac9(const std::string& data_dir) {
  struct Case {
    const char* file;
    QPolynomial expected;
  };
  std::vector<Case> cases = {{"d3_orbits.json", QPolynomial{1, 3, 6, 10, 11, 5}},
                             {"d3_orbits_sqrt10.json", QPolynomial{1, 3, 5, 7, 9, 11}},
                             {"d3_orbits_sqrt3.json", QPolynomial{1, 3, 5, 7, 8, 8, 4}}};
  Outcome o;
  for (const auto& c : cases) {
    std::vector<Point> pts =
        cli::load_point_configuration(cli::json::parse(cli::detail::read_file(data_dir + "/" + c.file)));
    auto t = Clock::now();
    TIdealResult a = compute_t_ideal(pts);
    double s = seconds_since(t);
    TIdealResult b = compute_t_ideal_one_per_step(pts);
    bool ok = a.hilbert == c.expected && s < 60.0 && a.staircase == b.staircase && a.hilbert == b.hilbert;
    o.pass = o.pass && ok;
    o.detail += std::string(o.detail.empty() ? "" : "; ") + c.file + " " + a.hilbert.to_string() + " (" +
                std::to_string(s) + " s" + (a.staircase == b.staircase ? ", one-per-step identical" : ", one-per-step differs") + ")";
  }
  return o;
}

Outcome ac10() {
  int bad = 0;
  std::vector<std::string> failed;
  auto note = [&](bool ok, const char* what) {
    if (!ok) {
      ++bad;
      if (failed.empty() || failed.back() != what) failed.push_back(what);
    }
  };
  // RSK: every word over {1,2,3} of length <= 6, and every (P, Q) pair for n <= 5.
  for (int len = 0; len <= 6; ++len) {
    Word w(static_cast<std::size_t>(len), 1);
    while (true) {
      auto [p, q] = rsk(w);
      note(rsk_inverse(p, q) == w, "rsk word round trip");
      auto [pr, qr] = oracle_ref::insertion(w);
      note(p.rows() == pr && q.rows() == qr, "rsk against reference insertion");
      note(syt_descents(q).descents == word_descents(w), "rsk descents");
      int i = len - 1;
      while (i >= 0 && w[static_cast<std::size_t>(i)] == 3) w[static_cast<std::size_t>(i--)] = 1;
      if (i < 0) break;
      ++w[static_cast<std::size_t>(i)];
    }
  }
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n)) {
      auto qs = enumerate_syt(lambda);
      for (const auto& p : enumerate_ssyt(lambda, n))
        for (const auto& q : qs) {
          auto back = rsk(rsk_inverse(p, q));
          note(back.P == p && back.Q == q, "rsk pair round trip");
        }
    }
  // Character tables: exact row orthogonality, S_n for n <= 6 and G(r,1,n) for r <= 3, n <= 3.
  for (int n = 1; n <= 6; ++n) {
    auto classes = conjugacy_classes(n, 1);
    for (const auto& lambda : partitions_of(n))
      for (const auto& nu : partitions_of(n)) {
        Integer s = 0;
        for (const auto& c : classes) s += c.size * sn_character(lambda, c.label[0]) * sn_character(nu, c.label[0]);
        note(s == (lambda == nu ? Integer(oracle_ref::factorial(n)) : Integer(0)), "S_n orthogonality");
      }
  }
  for (int r = 2; r <= 3; ++r)
    for (int n = 1; n <= 3; ++n) {
      auto classes = conjugacy_classes(n, r);
      for (const auto& lambda : r_partitions_of(n, r))
        for (const auto& mu : r_partitions_of(n, r)) {
          CyclotomicNumber s(r);
          for (const auto& c : classes)
            s += wreath_character(lambda, c.label, r) * wreath_character(mu, c.label, r).conj() * Rational(c.size);
          note(s == CyclotomicNumber(r, lambda == mu ? Rational(group_order(n, r)) : Rational(0)),
               "wreath orthogonality");
        }
    }
  // The straightening order: strict partial order refining dominance.
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 6; ++d) {
      auto ms = monomials_of_degree(n, d);
      for (const auto& a : ms)
        for (const auto& b : ms) {
          Order ab = prec_compare(a, b);
          note((ab == Order::Equal) == (a == b), "order reflexivity");
          if (ab == Order::Less) {
            note(prec_compare(b, a) == Order::Greater, "order antisymmetry");
            for (const auto& c : ms)
              if (prec_compare(b, c) == Order::Less) note(prec_compare(a, c) == Order::Less, "order transitivity");
          }
          if (dominance_compare(exponent_partition(a), exponent_partition(b)) == Order::Less)
            note(ab == Order::Less, "order refines dominance");
        }
    }
  // Sum of squares of tableau counts.
  for (int n = 1; n <= 8; ++n) {
    Integer s = 0;
    for (const auto& lambda : partitions_of(n)) {
      Integer f = static_cast<long>(enumerate_syt(lambda).size());
      s += f * f;
    }
    note(s == Integer(oracle_ref::factorial(n)), "sum of squares");
  }
  // Decompositions of every refined component: integral, non-negative, dimension-consistent.
  int components = 0;
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= (r == 1 ? 4 : 3); ++n)
      for (int k = 1; k <= n; ++k) {
        GradedQuotient q = build_quotient(n, k, r);
        auto classes = conjugacy_classes(n, r);
        for (int d = 0; d <= q.top_degree(); ++d)
          for (const auto& rho : partitions_of(d, n)) {
            RefinedComponent comp = refined_component(q, rho);
            ++components;
            try {
              WreathExpansion e = decompose(q, comp);
              Integer dim = 0;
              for (const auto& [lambda, c] : e.terms()) {
                note(c > 0, "decompose non-negative");
                dim += c * static_cast<long>(enumerate_r_syt(lambda).size());
              }
              note(dim == comp.dim(), "decompose dimension");
            } catch (const std::exception&) {
              note(false, "decompose integrality");
            }
          }
      }
  std::string detail = std::to_string(components) + " components decomposed, " + std::to_string(bad) + " failures";
  for (const auto& f : failed) detail += "; " + f;
  return {bad == 0, detail};
}

}  // namespace

int main(int argc, char** argv) {
  std::string data_dir = argc > 1 ? argv[1] : "data";
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 worked multiplicity example", ac1},
      {"AC2 theorem vs oracle, r=1, n<=5", ac2},
      {"AC3 wreath multiplicity table", ac3},
      {"AC4 theorem vs oracle, r<=3", ac4},
      {"AC5 ribbon identity", ac5},
      {"AC6 q-binomial generating functions", ac6},
      {"AC7 classical anchors", ac7},
      {"AC8 straightening soundness", ac8},
      {"AC9 top-degree Hilbert series", [&] { return ac9(data_dir); }},
      {"AC10 property suites", ac10},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    auto t = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << " [" << seconds_since(t) << " s]"
              << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
