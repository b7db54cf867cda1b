#include <gtest/gtest.h>

#include <coinv/points_ideal.hpp>

#include <random>

using namespace coinv;

namespace coinv {
void PrintTo(const QuadraticNumber& x, std::ostream* os) { *os << x.to_string(); }
}  // namespace coinv

namespace {

QuadraticNumber q(std::int64_t a) { return QuadraticNumber(Rational(a)); }

std::vector<Point> union_of_orbits(int n, const std::vector<Point>& seeds) {
  auto group = dn_elements(n);
  std::set<Point> all;
  for (const auto& s : seeds) {
    auto o = orbit(group, s);
    all.insert(o.begin(), o.end());
  }
  return {all.begin(), all.end()};
}

std::vector<Point> d3_rational() { return union_of_orbits(3, {{q(1), q(1), q(2)}, {q(-1), q(1), q(2)}, {q(1), q(2), q(2)}}); }

std::vector<Point> d3_sqrt10() {
  QuadraticNumber h(0, Rational(1, 2), 10);
  return union_of_orbits(3, {{q(1), q(1), q(2)}, {q(-1), q(1), q(2)}, {q(1), h, h}});
}

std::vector<Point> d3_sqrt3() {
  QuadraticNumber s(0, 1, 3);
  return union_of_orbits(3, {{q(1), q(1), q(2)}, {q(-1), q(1), q(2)}, {q(0), s, s}});
}

// Independent Hilbert series: h_d = rank ev(monomials of degree <= d) - rank ev(degree <= d-1),
// by plain Gaussian elimination over the quadratic field.
QPolynomial hilbert_by_ranks(const std::vector<Point>& pts) {
  int n = static_cast<int>(pts.front().size());
  std::vector<std::vector<QuadraticNumber>> basis;
  auto add = [&](std::vector<QuadraticNumber> v) {
    for (const auto& b : basis) {
      std::size_t p = 0;
      while (b[p].is_zero()) ++p;
      if (v[p].is_zero()) continue;
      QuadraticNumber c = v[p] / b[p];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * b[j];
    }
    for (const auto& x : v)
      if (!x.is_zero()) {
        basis.push_back(std::move(v));
        return true;
      }
    return false;
  };
  std::vector<std::int64_t> h;
  for (int d = 0; basis.size() < pts.size(); ++d) {
    std::int64_t gained = 0;
    for (const auto& m : monomials_of_degree(n, d)) {
      std::vector<QuadraticNumber> v;
      for (const auto& p : pts) v.push_back(detail::evaluate_monomial(m, p));
      if (add(std::move(v))) ++gained;
    }
    h.push_back(gained);
  }
  return QPolynomial(h);
}

std::vector<Point> random_rational_points(std::mt19937& rng, int n, int count) {
  std::uniform_int_distribution<int> coord(-3, 3);
  std::set<Point> pts;
  while (static_cast<int>(pts.size()) < count) {
    Point p;
    for (int i = 0; i < n; ++i) p.push_back(q(coord(rng)));
    pts.insert(p);
  }
  return {pts.begin(), pts.end()};
}

}  // namespace

TEST(QuadraticNumber, Arithmetic) {
  QuadraticNumber s(0, 1, 3);
  EXPECT_EQ(s * s, q(3));
  QuadraticNumber x(1, 2, 3);
  EXPECT_EQ(x.norm(), Rational(1 - 12));
  EXPECT_EQ(x * x.inverse(), q(1));
  EXPECT_EQ((x + s) - x, s);
  EXPECT_EQ(QuadraticNumber(1, 5, 1), q(6));
  EXPECT_EQ(QuadraticNumber(2, 0, 7).d(), 1);
  EXPECT_EQ(QuadraticNumber(0, Rational(1, 2), 10).to_string(), "1/2*sqrt(10)");
  EXPECT_THROW(QuadraticNumber(0, 1, 4), precondition_error);
  EXPECT_THROW(QuadraticNumber(0, 1, 2) + QuadraticNumber(0, 1, 3), precondition_error);
  EXPECT_THROW(q(0).inverse(), precondition_error);
}

TEST(ReflectionGroup, DnOrder) {
  EXPECT_EQ(dn_elements(1).size(), 1u);
  EXPECT_EQ(dn_elements(2).size(), 4u);
  EXPECT_EQ(dn_elements(3).size(), 24u);
  EXPECT_EQ(dn_elements(4).size(), 192u);
  for (const auto& g : dn_elements(3)) {
    int prod = 1;
    for (int s : g.signs) prod *= s;
    EXPECT_EQ(prod, 1);
  }
  EXPECT_THROW(dn_elements(6), resource_error);
}

TEST(ReflectionGroup, OrbitSizes) {
  auto g = dn_elements(3);
  EXPECT_EQ(orbit(g, {q(1), q(1), q(2)}).size(), 12u);
  EXPECT_EQ(orbit(g, {q(-1), q(1), q(2)}).size(), 12u);
  EXPECT_EQ(orbit(g, {q(1), q(2), q(2)}).size(), 12u);
  QuadraticNumber s(0, 1, 3);
  EXPECT_EQ(orbit(g, {q(0), s, s}).size(), 12u);
  EXPECT_EQ(orbit(g, {q(0), q(0), q(0)}).size(), 1u);
  EXPECT_EQ(d3_rational().size(), 36u);
  EXPECT_EQ(d3_sqrt10().size(), 36u);
  EXPECT_EQ(d3_sqrt3().size(), 36u);
}

TEST(Grevlex, Order) {
  EXPECT_TRUE(grevlex_less(Monomial{0, 0, 1}, Monomial{0, 1, 0}));
  EXPECT_TRUE(grevlex_less(Monomial{0, 1, 0}, Monomial{1, 0, 0}));
  EXPECT_TRUE(grevlex_less(Monomial{1, 0, 1}, Monomial{0, 2, 0}));
  EXPECT_TRUE(grevlex_less(Monomial{2, 0, 0}, Monomial{0, 0, 3}));
  EXPECT_FALSE(grevlex_less(Monomial{1, 1, 0}, Monomial{1, 1, 0}));
}

TEST(Indicator, DeltaOnPoints) {
  std::mt19937 rng(20261019);
  for (int trial = 0; trial < 20; ++trial) {
    int count = 1 + trial % 8;
    auto pts = random_rational_points(rng, 3, count);
    ExactPolynomial sum(3);
    for (const auto& p : pts) {
      ExactPolynomial f = indicator(pts, p);
      EXPECT_LE(f.degree(), count - 1);
      for (const auto& y : pts) EXPECT_EQ(f.evaluate(y), q(y == p ? 1 : 0));
      for (const auto& [m, c] : f.terms()) sum.add_term(m, c);
    }
    for (const auto& y : pts) EXPECT_EQ(sum.evaluate(y), q(1));
  }
  auto pts = d3_sqrt3();
  auto f = indicator(pts, pts[5]);
  for (const auto& y : pts) EXPECT_EQ(f.evaluate(y), q(y == pts[5] ? 1 : 0));
  EXPECT_THROW(indicator(pts, {q(9), q(9), q(9)}), precondition_error);
}

TEST(TopDegree, Examples) {
  ExactPolynomial f(2);
  f.add_term(Monomial{2, 0}, q(1));
  f.add_term(Monomial{1, 1}, q(-3));
  f.add_term(Monomial{1, 0}, q(5));
  f.add_term(Monomial{0, 0}, q(2));
  ExactPolynomial t = top_degree(f);
  EXPECT_EQ(t.terms().size(), 2u);
  EXPECT_EQ(t.degree(), 2);
  EXPECT_EQ(t.leading_monomial(), (Monomial{2, 0}));
  EXPECT_THROW(top_degree(ExactPolynomial(2)), precondition_error);
}

TEST(Staircase, Examples) {
  auto mono = [](Monomial m) {
    ExactPolynomial f(m.nvars());
    f.add_term(m, q(1));
    return f;
  };
  auto st = staircase({mono(Monomial{2, 0}), mono(Monomial{1, 1}), mono(Monomial{0, 3})}, 2);
  std::vector<Monomial> expected = {Monomial{0, 0}, Monomial{0, 1}, Monomial{1, 0}, Monomial{0, 2}};
  EXPECT_EQ(st, expected);
  EXPECT_EQ(staircase({mono(Monomial{1, 0, 0}), mono(Monomial{0, 1, 0}), mono(Monomial{0, 0, 1})}, 3).size(), 1u);
  EXPECT_THROW(staircase({mono(Monomial{2, 0}), mono(Monomial{1, 1})}, 2), precondition_error);
}

TEST(TIdeal, Origin) {
  auto r = compute_t_ideal({{q(0), q(0), q(0)}});
  EXPECT_EQ(r.hilbert, QPolynomial{1});
  EXPECT_EQ(r.generators.size(), 3u);
  EXPECT_THROW(compute_t_ideal({}), precondition_error);
  EXPECT_THROW(compute_t_ideal({{q(1)}, {q(1)}}), precondition_error);
}

TEST(TIdeal, D3HilbertSeries) {
  EXPECT_EQ(compute_t_ideal(d3_rational()).hilbert, (QPolynomial{1, 3, 6, 10, 11, 5}));
  EXPECT_EQ(compute_t_ideal(d3_sqrt10()).hilbert, (QPolynomial{1, 3, 5, 7, 9, 11}));
  EXPECT_EQ(compute_t_ideal(d3_sqrt3()).hilbert, (QPolynomial{1, 3, 5, 7, 8, 8, 4}));
}

TEST(TIdeal, MatchesRankOracle) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + trial % 3;
    int count = 1 + (trial * 5) % 12;
    if (n == 1) count = std::min(count, 7);
    auto pts = random_rational_points(rng, n, count);
    auto r = compute_t_ideal(pts);
    EXPECT_EQ(r.hilbert, hilbert_by_ranks(pts));
    EXPECT_EQ(r.hilbert.at_one(), count);
  }
  for (auto pts : {d3_rational(), d3_sqrt10(), d3_sqrt3()}) EXPECT_EQ(compute_t_ideal(pts).hilbert, hilbert_by_ranks(pts));
}

TEST(TIdeal, WitnessesVanishAndTopsMatch) {
  for (auto pts : {d3_rational(), d3_sqrt3()}) {
    auto r = compute_t_ideal(pts);
    for (const auto& g : r.generators) {
      for (const auto& p : pts) EXPECT_TRUE(g.witness.evaluate(p).is_zero());
      EXPECT_EQ(top_degree(g.witness), g.top);
      EXPECT_EQ(g.top.leading_monomial(), g.witness.leading_monomial());
    }
    EXPECT_EQ(static_cast<int>(r.staircase.size()), static_cast<int>(pts.size()));
  }
}

TEST(TIdeal, OrderAndSymmetryInvariance) {
  auto pts = d3_sqrt10();
  auto base = compute_t_ideal(pts);
  std::mt19937 rng(3);
  auto shuffled = pts;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  auto again = compute_t_ideal(shuffled);
  EXPECT_EQ(again.hilbert, base.hilbert);
  EXPECT_EQ(again.staircase, base.staircase);
  // T(gX) = g T(X), so the Hilbert series is unchanged under any signed permutation,
  // even one outside D_n.
  SignedPermutation g{{2, 3, 1}, {-1, 1, 1}};
  std::vector<Point> moved;
  for (const auto& p : pts) moved.push_back(g.apply(p));
  EXPECT_EQ(compute_t_ideal(moved).hilbert, base.hilbert);
}

TEST(TIdeal, SingleOrbit) {
  auto pts = union_of_orbits(3, {{q(1), q(2), q(3)}});
  EXPECT_EQ(pts.size(), 24u);
  auto r = compute_t_ideal(pts);
  EXPECT_EQ(r.hilbert.at_one(), 24);
  EXPECT_EQ(r.hilbert, hilbert_by_ranks(pts));
}

TEST(TIdeal, OnePerStepAgrees) {
  for (auto pts : {d3_rational(), d3_sqrt10(), d3_sqrt3()}) {
    auto a = compute_t_ideal(pts);
    auto b = compute_t_ideal_one_per_step(pts);
    EXPECT_EQ(a.staircase, b.staircase);
    EXPECT_EQ(a.hilbert, b.hilbert);
    for (const auto& g : b.generators)
      for (const auto& p : pts) EXPECT_TRUE(g.witness.evaluate(p).is_zero());
  }
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    auto pts = random_rational_points(rng, 2, 1 + trial);
    EXPECT_EQ(compute_t_ideal_one_per_step(pts).staircase, compute_t_ideal(pts).staircase);
  }
}

TEST(TIdeal, Guard) {
  std::vector<Point> pts;
  for (int i = 0; i <= kPointGuard; ++i) pts.push_back({q(i)});
  EXPECT_THROW(compute_t_ideal(pts), resource_error);
}
