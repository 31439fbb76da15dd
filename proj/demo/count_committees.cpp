// Small walk through the library: committee counts of the planar catalog
// instances and how one reorientation changes them.

#include <iostream>

#include "omc/omc.hpp"

int main() {
  using namespace omc;
  for (const char* name : {"lines3", "lines4", "lines5"}) {
    const TopeSet m = canonical(name);
    std::cout << name << ": " << m.size() << " topes on " << m.ground_size() << " elements\n";
    for (int k = 1; k <= m.half_size(); ++k) {
      std::cout << "  k=" << k << "  committees " << count_committees_ie(m, k, Ell::K).value
                << "  opposite-free " << count_ring_moebius(m, k).value;
      const DeltaRequest req{m, m.ground_size(), k, Variant::General};
      std::cout << "  change after reorienting element " << req.a << ": " << delta_ie(req).value << '\n';
    }
  }
}
