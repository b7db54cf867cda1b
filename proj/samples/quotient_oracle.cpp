// Builds R_{n,k} (or S_{n,k}) by linear algebra and compares each refined
// component with the tableau count.

#include <coinv/coinv.hpp>

#include <cstdlib>
#include <iostream>

using namespace coinv;

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 4;
  int k = argc > 2 ? std::atoi(argv[2]) : 3;
  int r = argc > 3 ? std::atoi(argv[3]) : 1;
  GradedQuotient q = build_quotient(n, k, r);
  std::cout << "Hilbert series: " << q.hilbert().to_string() << " (dimension " << q.total_dim() << ")\n";
  VerifyReport report = verify_theorem(n, k, r);
  for (const auto& c : report.cells) {
    if (c.dim == 0) continue;
    std::cout << "  rho=" << c.rho.to_string() << " dim " << c.dim << ": " << expansion_to_string(c.oracle)
              << (c.agree() ? "" : "  (differs from the tableau count)") << "\n";
  }
  std::cout << report.mismatches() << " mismatches\n";
  return report.mismatches() == 0 ? 0 : 1;
}
