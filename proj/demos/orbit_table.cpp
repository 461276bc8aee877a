// Prints the orbit table of a few small forms side by side, the quickest way
// to see the classification, the cohomology columns and the centralizers.
#include <iostream>

#include "nilorb/cli.hpp"

int main() {
  for (const nilorb::RealForm& form :
       {nilorb::RealForm::sp_r(2), nilorb::RealForm::so(3, 2), nilorb::RealForm::su(2, 1),
        nilorb::RealForm::so_star(3)}) {
    std::cout << "=== " << form.name() << " ===\n";
    for (const nilorb::OrbitClass& orbit : nilorb::enumerate_orbits(form)) {
      const nilorb::cli::OrbitRecord record = nilorb::cli::make_record(orbit);
      std::cout << "  " << orbit.orbit_text();
      if (record.h1 && record.h2)
        std::cout << "  h1=" << *record.h1 << " h2=" << *record.h2;
      else
        std::cout << "  (value not in the case lists)";
      std::cout << "  Z = " << record.centralizer << " (dim " << record.centralizer_dim
                << ")  K = " << record.compact << "\n";
    }
    std::cout << "\n";
  }
  return 0;
}
