// Hilbert series of the top-degree ideal of three D_3-orbits.

#include <coinv/coinv.hpp>

#include <iostream>

using namespace coinv;

int main() {
  auto g = dn_elements(3);
  QuadraticNumber one(1), two(2), s(0, 1, 3);
  std::set<Point> all;
  for (const Point& seed : {Point{one, one, two}, Point{-one, one, two}, Point{QuadraticNumber(0), s, s}}) {
    auto o = orbit(g, seed);
    all.insert(o.begin(), o.end());
  }
  std::vector<Point> pts(all.begin(), all.end());
  TIdealResult t = compute_t_ideal(pts);
  std::cout << pts.size() << " points\nHilbert series: " << t.hilbert.to_string() << "\ngenerators of T(X):\n";
  for (const auto& gen : t.generators) std::cout << "  " << gen.top.to_string() << "\n";
}
