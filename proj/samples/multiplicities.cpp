// Multiplicities of irreducibles in refined components, symmetric and wreath cases.

#include <coinv/coinv.hpp>

#include <iostream>

using namespace coinv;

int main() {
  Partition rho{5, 3, 2, 2, 1, 1, 1, 0};
  std::cout << "n=8 k=6 rho=" << rho.to_string() << "\n";
  std::cout << "  Frob = " << expansion_to_string(frob_rnk_rho(8, 6, rho)) << "\n";
  std::cout << "  multiplicity of (4,3,1): " << multiplicity_rnk(8, 6, rho, Partition{4, 3, 1}) << "\n";

  Partition rho2{9, 5, 5, 4, 3, 2, 0};
  std::cout << "n=7 k=5 r=2 rho=" << rho2.to_string() << "\n";
  WreathExpansion table = multiplicity_table_snk(7, 5, 2, rho2);
  for (const auto& [lambda, c] : table.terms())
    std::cout << "  " << lambda.to_string() << " " << c << "\n";

  std::cout << "graded Frobenius of R_{4,2}:\n";
  GradedSchurExpansion g = grfrob(4, 2);
  for (const auto& [lambda, f] : g.terms()) std::cout << "  s" << lambda.to_string() << ": " << f.to_string() << "\n";
}
