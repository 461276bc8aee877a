#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nilorb/errors.hpp"
#include "nilorb/matrix.hpp"
#include "nilorb/orbit_enum.hpp"
#include "nilorb/partition.hpp"
#include "nilorb/scalar.hpp"
#include "nilorb/signed_diagram.hpp"

namespace nilorb {

/**
 * Index of a standard basis vector: part size d, row j (1-based within the
 * part), power l (0-based, v_l = X^l v_0). Ordered by (d, l, j).
 */
struct BasisLabel {
  int d = 0;
  int j = 0;
  int l = 0;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

[[nodiscard]] inline std::vector<BasisLabel> triple_basis(const Partition& partition) {
  std::vector<BasisLabel> basis;
  for (const auto& pm : partition.parts())
    for (int l = 0; l < pm.d; ++l)
      for (int j = 1; j <= pm.t; ++j) basis.push_back({pm.d, j, l});
  return basis;
}

/**
 * An exact matrix model of one orbit: the standard triple (X, H, Y), the
 * invariant form G when the classification carries one, and the basis
 * labelling that ties matrix indices back to the diagram.
 */
struct MatrixRealization {
  ScalarField field = ScalarField::R;
  int n = 0;
  std::vector<BasisLabel> basis;
  ExactMatrix X{0, 0, ScalarField::R};
  ExactMatrix H{0, 0, ScalarField::R};
  ExactMatrix Y{0, 0, ScalarField::R};
  std::optional<ExactMatrix> G;
  std::optional<SignedDiagram> diagram;
  std::optional<RealForm> form;

  [[nodiscard]] nlohmann::ordered_json to_json() const;
};

namespace detail {

[[nodiscard]] inline nlohmann::ordered_json matrix_to_json(const ExactMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Quaternion& q = m.at(i, j);
      row.push_back({to_string(q.a), to_string(q.b), to_string(q.c), to_string(q.d)});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

[[nodiscard]] inline std::map<std::tuple<int, int, int>, std::size_t> basis_index(
    const std::vector<BasisLabel>& basis) {
  std::map<std::tuple<int, int, int>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i)
    index[{basis[i].d, basis[i].j, basis[i].l}] = i;
  return index;
}

[[nodiscard]] inline Quaternion unit_quaternion(int c) {
  switch (c) {
    case 0: return Quaternion(1);
    case 1: return Quaternion::unit_i();
    case 2: return Quaternion::unit_j();
    default: return Quaternion::unit_k();
  }
}

[[nodiscard]] inline const Rational& quaternion_component(const Quaternion& q, int c) {
  switch (c) {
    case 0: return q.a;
    case 1: return q.b;
    case 2: return q.c;
    default: return q.d;
  }
}

[[nodiscard]] inline int components_of(ScalarField f) {
  switch (f) {
    case ScalarField::R: return 1;
    case ScalarField::C: return 2;
    default: return 4;
  }
}

}  // namespace detail

inline nlohmann::ordered_json MatrixRealization::to_json() const {
  nlohmann::ordered_json out;
  out["field"] = field_name(field);
  out["n"] = n;
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  for (const auto& bl : basis)
    labels.push_back(nlohmann::ordered_json{{"d", bl.d}, {"j", bl.j}, {"l", bl.l}});
  out["basis"] = std::move(labels);
  out["X"] = detail::matrix_to_json(X);
  out["H"] = detail::matrix_to_json(H);
  out["Y"] = detail::matrix_to_json(Y);
  if (G) out["G"] = detail::matrix_to_json(*G);
  if (diagram) out["diagram"] = diagram->to_json();
  if (form) out["form"] = form->name();
  return out;
}

/**
 * The standard triple attached to a partition: on each length-d string
 * X shifts v_l to v_{l+1} (and kills v_{d-1}), H is diagonal with weight
 * 2l+1-d on v_l, and Y sends v_l to l(d-l) v_{l-1}.
 */
[[nodiscard]] inline MatrixRealization build_triple(ScalarField field,
                                                    const Partition& partition) {
  MatrixRealization r;
  r.field = field;
  r.n = partition.n();
  r.basis = triple_basis(partition);
  const auto index = detail::basis_index(r.basis);
  const auto size = static_cast<std::size_t>(r.n);
  r.X = ExactMatrix(size, size, field);
  r.H = ExactMatrix(size, size, field);
  r.Y = ExactMatrix(size, size, field);
  for (std::size_t col = 0; col < r.basis.size(); ++col) {
    const BasisLabel& bl = r.basis[col];
    r.H.set(col, col, Quaternion(2 * bl.l + 1 - bl.d));
    if (bl.l + 1 < bl.d) {
      const std::size_t row = index.at({bl.d, bl.j, bl.l + 1});
      r.X.set(row, col, Quaternion(1));
    }
    if (bl.l > 0) {
      const std::size_t row = index.at({bl.d, bl.j, bl.l - 1});
      r.Y.set(row, col, Quaternion(static_cast<long>(bl.l) * (bl.d - bl.l)));
    }
  }
  return r;
}

/**
 * The invariant form attached to a signed diagram, over the given field and
 * with symmetry type epsilon (+1 sigma-symmetric, -1 sigma-antisymmetric).
 * Rows of distinct parts are orthogonal; within a part of size d,
 * <v_{j,l}, v_{k,m}> = (-1)^l c_{jk} when l+m = d-1 and 0 otherwise, where
 * the small matrix c depends only on the field, epsilon, the parity of d and
 * the sign counts (p, q) of the part.
 */
[[nodiscard]] inline ExactMatrix gram_matrix(ScalarField field, int epsilon,
                                             const SignedDiagram& diagram) {
  if (epsilon != 1 && epsilon != -1)
    throw InvalidInput("gram_matrix: epsilon must be +1 or -1");
  if (field == ScalarField::C && epsilon != 1)
    throw InvalidInput("gram_matrix: over C only the hermitian case is defined");

  const Partition& partition = diagram.partition();
  const std::vector<BasisLabel> basis = triple_basis(partition);
  const auto index = detail::basis_index(basis);
  ExactMatrix g(basis.size(), basis.size(), field);

  for (const auto& pm : partition.parts()) {
    const SignMatrix& sign = diagram.sign_for(pm.d);
    const int t = pm.t;
    const int p = sign.p();
    const bool even = pm.d % 2 == 0;

    // c-matrix for this part, t x t.
    std::vector<std::vector<Quaternion>> c(t, std::vector<Quaternion>(t));
    auto sign_diag = [&] {
      for (int j = 0; j < t; ++j) c[j][j] = Quaternion(j < p ? 1 : -1);
    };
    auto j_diag = [&] {
      if (p != t)
        throw PreconditionViolated("gram_matrix: this parity requires all rows signed +");
      for (int j = 0; j < t; ++j) c[j][j] = Quaternion::unit_j();
    };
    if (field == ScalarField::C) {
      if (even) {
        for (int j = 0; j < t; ++j)
          c[j][j] = j < p ? Quaternion(0, -1, 0, 0) : Quaternion(0, 1, 0, 0);
      } else {
        sign_diag();
      }
    } else if (field == ScalarField::R && epsilon == 1) {
      if (even) {
        if (p != t || t % 2 != 0)
          throw PreconditionViolated(
              "gram_matrix: even parts need p = t and even multiplicity over (R,+1)");
        for (int j = 0; j + 1 < t; j += 2) {
          c[j][j + 1] = Quaternion(1);
          c[j + 1][j] = Quaternion(-1);
        }
      } else {
        sign_diag();
      }
    } else if (field == ScalarField::R && epsilon == -1) {
      if (even) {
        sign_diag();
      } else {
        if (p != t || t % 2 != 0)
          throw PreconditionViolated(
              "gram_matrix: odd parts need p = t and even multiplicity over (R,-1)");
        for (int j = 0; j < t / 2; ++j) {
          c[j][t / 2 + j] = Quaternion(1);
          c[t / 2 + j][j] = Quaternion(-1);
        }
      }
    } else if (field == ScalarField::H && epsilon == 1) {
      if (even)
        j_diag();
      else
        sign_diag();
    } else {
      if (even)
        sign_diag();
      else
        j_diag();
    }

    for (int j = 1; j <= t; ++j) {
      for (int k = 1; k <= t; ++k) {
        if (c[j - 1][k - 1].is_zero()) continue;
        for (int l = 0; l < pm.d; ++l) {
          const int m = pm.d - 1 - l;
          const std::size_t row = index.at({pm.d, j, l});
          const std::size_t col = index.at({pm.d, k, m});
          const Quaternion value =
              l % 2 == 0 ? c[j - 1][k - 1] : -c[j - 1][k - 1];
          g.set(row, col, value);
        }
      }
    }
  }
  return g;
}

/** Triple plus, for the checked families, the invariant form of the diagram. */
[[nodiscard]] inline MatrixRealization realize_orbit(const OrbitClass& orbit) {
  MatrixRealization r = build_triple(orbit.form.field(), orbit.partition);
  r.form = orbit.form;
  if (orbit.form.is_signed()) {
    if (!orbit.diagram)
      throw PreconditionViolated("realize_orbit: signed form without a diagram");
    r.diagram = orbit.diagram;
    r.G = gram_matrix(orbit.form.field(), orbit.form.epsilon(), *orbit.diagram);
  }
  return r;
}

/**
 * Dimension over R of the centralizer of (X, H, Y) inside the real form,
 * computed as the exact nullspace dimension of the linear system on a
 * general matrix Z: commutation with X, H, Y, the invariant-form condition
 * sigma(Z)^t G + G Z = 0 when a form is present, and the trace condition of
 * the sl and su families.
 */
[[nodiscard]] inline int centralizer_dim(const MatrixRealization& realization) {
  if (!realization.form)
    throw PreconditionViolated("centralizer_dim: realization carries no real form");
  const RealForm& form = *realization.form;
  const int n = realization.n;
  const int ncomp = detail::components_of(realization.field);
  const std::size_t cols = static_cast<std::size_t>(n) * n * ncomp;
  auto unknown = [&](int i, int j, int c) {
    return (static_cast<std::size_t>(i) * n + j) * ncomp + c;
  };

  std::vector<std::vector<Rational>> rows;
  auto new_row = [&]() -> std::vector<Rational>& {
    rows.emplace_back(cols, Rational(0));
    return rows.back();
  };

  // [Z, W] = 0 for W in {X, H, Y}; W has real entries so components split.
  for (const ExactMatrix* w : {&realization.X, &realization.H, &realization.Y}) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int c = 0; c < ncomp; ++c) {
          auto& row = new_row();
          for (int k = 0; k < n; ++k) {
            const Rational& wkj = w->at(k, j).a;
            if (wkj != 0) row[unknown(i, k, c)] += wkj;
            const Rational& wik = w->at(i, k).a;
            if (wik != 0) row[unknown(k, j, c)] -= wik;
          }
        }
      }
    }
  }

  if (realization.G) {
    const ExactMatrix& g = *realization.G;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        std::vector<std::vector<Rational>*> block;
        for (int cp = 0; cp < ncomp; ++cp) block.push_back(&new_row());
        for (int k = 0; k < n; ++k) {
          const Quaternion& gkj = g.at(k, j);
          if (!gkj.is_zero()) {
            for (int c = 0; c < ncomp; ++c) {
              const Quaternion term = detail::unit_quaternion(c).conjugate() * gkj;
              for (int cp = 0; cp < ncomp; ++cp)
                (*block[cp])[unknown(k, i, c)] += detail::quaternion_component(term, cp);
            }
          }
          const Quaternion& gik = g.at(i, k);
          if (!gik.is_zero()) {
            for (int c = 0; c < ncomp; ++c) {
              const Quaternion term = gik * detail::unit_quaternion(c);
              for (int cp = 0; cp < ncomp; ++cp)
                (*block[cp])[unknown(k, j, c)] += detail::quaternion_component(term, cp);
            }
          }
        }
      }
    }
  }

  const FormKind kind = form.kind();
  if (kind == FormKind::SlR || kind == FormKind::SlH) {
    auto& row = new_row();
    for (int i = 0; i < n; ++i) row[unknown(i, i, 0)] = 1;
  } else if (kind == FormKind::SU) {
    for (int c = 0; c < 2; ++c) {
      auto& row = new_row();
      for (int i = 0; i < n; ++i) row[unknown(i, i, c)] = 1;
    }
  }

  ExactMatrix a(rows.size(), cols, ScalarField::R);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rows[i][j] != 0) a.set(i, j, Quaternion(rows[i][j]));
  return static_cast<int>(nullspace_dim_real(a));
}

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;

  [[nodiscard]] bool ok() const {
    for (const auto& item : items)
      if (!item.pass) return false;
    return true;
  }
};

/**
 * Structural checks on a realization: the bracket relations of the triple,
 * the rank profile of the powers of X against the partition, and, when a
 * form is present, its symmetry type, invariance under the triple and (for
 * the families carrying a signature) its signature.
 */
[[nodiscard]] inline CheckReport verify_realization(const MatrixRealization& r) {
  CheckReport report;
  auto add = [&report](std::string name, bool pass, std::string detail = "") {
    report.items.push_back({std::move(name), pass, std::move(detail)});
  };

  const ExactMatrix& X = r.X;
  const ExactMatrix& H = r.H;
  const ExactMatrix& Y = r.Y;
  add("[H,X] = 2X", H * X - X * H == X.scaled(Quaternion(2)));
  add("[H,Y] = -2Y", H * Y - Y * H == Y.scaled(Quaternion(-2)));
  add("[X,Y] = H", X * Y - Y * X == H);

  std::map<int, int> mult;
  int d_max = 0;
  for (const auto& bl : r.basis) {
    d_max = std::max(d_max, bl.d);
    if (bl.l == 0) mult[bl.d] += 1;
  }
  ExactMatrix power = ExactMatrix::identity(static_cast<std::size_t>(r.n), r.field);
  for (int k = 0; k <= d_max; ++k) {
    std::size_t expected = 0;
    for (const auto& [d, t] : mult)
      if (d > k) expected += static_cast<std::size_t>(d - k) * t;
    const std::size_t got = rank(power);
    add("rank(X^" + std::to_string(k) + ") = " + std::to_string(expected), got == expected,
        got == expected ? "" : "got " + std::to_string(got));
    power = X * power;
  }

  if (r.G) {
    const ExactMatrix& G = *r.G;
    if (!r.form)
      throw PreconditionViolated("verify_realization: form matrix without a real form");
    const int epsilon = r.form->epsilon();
    add("sigma(G)^t = eG",
        G.conjugate_transpose() == (epsilon == 1 ? G : G.scaled(Quaternion(-1))));
    const char* names[] = {"X", "H", "Y"};
    const ExactMatrix* mats[] = {&X, &H, &Y};
    for (int idx = 0; idx < 3; ++idx)
      add(std::string("sigma(") + names[idx] + ")^t G + G " + names[idx] + " = 0",
          (mats[idx]->conjugate_transpose() * G + G * *mats[idx]).is_zero());
    if (r.form->uses_pq() && epsilon == 1) {
      const auto sig = congruence_signature(G);
      const bool pass = static_cast<int>(sig.first) == r.form->p() &&
                        static_cast<int>(sig.second) == r.form->q();
      add("signature(G) = (" + std::to_string(r.form->p()) + "," +
              std::to_string(r.form->q()) + ")",
          pass,
          pass ? ""
               : "got (" + std::to_string(sig.first) + "," + std::to_string(sig.second) + ")");
    }
  }
  return report;
}

}  // namespace nilorb
