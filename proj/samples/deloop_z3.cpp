// Deloop Z/3 with Z/2 acting by inversion and print the low-degree homology
// of BX(1) together with the induced action of the nontrivial element.

#include <iostream>

#include "gammaspace/gammaspace.hpp"

int main() {
  using namespace gammaspace;

  const auto algebra = inversion_action(3);
  const auto x = build_ggamma_set(algebra, 4);

  std::cout << check_strict_segal(*x, 4).message() << '\n';
  std::cout << check_strict_bousfield(*x, 4).message() << '\n';

  const auto report = delooping_report(x, 1, 4, 2);
  for (std::size_t q = 0; q < report.homology.size(); ++q)
    std::cout << "H_" << q << "(BX(1)) = " << report.homology[q].to_string() << '\n';
  for (const auto& a : report.actions)
    if (a.matrix.rows() > 0)
      std::cout << "element " << a.element << " acts on H_" << a.degree << " by " << a.matrix(0, 0)
                << " (mod " << a.orders[0] << ")\n";

  const auto sm = structure_map(x, 3);
  std::cout << "suspension -> 1-skeleton is an isomorphism, equivariant: "
            << (sm.equivariant ? "yes" : "no") << '\n';
}
