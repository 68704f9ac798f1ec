// Walks through one rank computation by hand: rk V(sl_7, omega_3^7, 2).

#include <iostream>

#include "qschubert/qschubert.hpp"

int main() {
  using namespace qschubert;

  // |omega_3| = 3 = level + 1, so the quantum case applies with s = 1 in QH*(Gr(7, 9)).
  const GrassmannianContext gr(7, 9);
  const QuantumElement omega3 = QuantumElement::schubert_class(gr, {1, 1, 1});

  const QuantumElement cube = qpower(omega3, 3);
  std::cout << "sigma_(1,1,1)^3 contains " << qcoefficient_of(cube, 0, {2, 2, 1, 1, 1, 1, 1})
            << " * sigma_(2,2,1,1,1,1,1)\n";

  const QuantumElement full = qpieri_mul(qpower(omega3, 7), 2);
  std::cout << "coefficient of q * [pt] in sigma_(1,1,1)^7 * sigma_2: "
            << qcoefficient_of(full, 1, point_class(gr)) << '\n';

  const RankResult r = symmetric_rank(SlnWeight::fundamental(7, 3), 2);
  std::cout << "rank(sl_7, omega_3^7, 2) = " << r.rank << " (" << to_string(r.dictionary_case) << ", s = " << *r.s
            << ")\n";

  for (int i = 1; i <= 6; ++i) {
    const SlnWeight w = SlnWeight::fundamental(7, i);
    std::cout << "omega_" << i << " at level 2: rank " << symmetric_rank(w, 2).rank
              << (in_lambda(w, 2) ? "  (in Lambda)" : "") << '\n';
  }
}
