// Builds the exact matrix model of one orbit and walks through the checks:
// bracket relations, Jordan rank profile, form invariance and the signature.
#include <iostream>

#include "nilorb/realize.hpp"
#include "nilorb/structure.hpp"

int main() {
  const nilorb::OrbitClass orbit =
      nilorb::parse_orbit(nilorb::RealForm::so(3, 2), "3+^1,1+^2");
  const nilorb::MatrixRealization model = nilorb::realize_orbit(orbit);

  std::cout << "orbit " << orbit.orbit_text() << " of " << orbit.form.name() << "\n";
  std::cout << "basis:";
  for (const nilorb::BasisLabel& label : model.basis)
    std::cout << " (d=" << label.d << ",j=" << label.j << ",l=" << label.l << ")";
  std::cout << "\n\n";

  auto show = [](const char* name, const nilorb::ExactMatrix& m) {
    std::cout << name << " =\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::cout << "  ";
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::cout << nilorb::to_string(m.at(i, j)) << (j + 1 < m.cols() ? " " : "");
      std::cout << "\n";
    }
  };
  show("X", model.X);
  show("H", model.H);
  show("Y", model.Y);
  show("G", *model.G);

  std::cout << "\nchecks:\n";
  for (const nilorb::CheckItem& item : nilorb::verify_realization(model).items)
    std::cout << "  " << item.name << ": " << (item.pass ? "pass" : "FAIL") << "\n";

  const nilorb::ReductiveStructure z = nilorb::centralizer_structure(orbit);
  std::cout << "\ncentralizer " << z.description << ", dim " << z.dim
            << "; exact nullspace gives " << nilorb::centralizer_dim(model) << "\n";
  return 0;
}
