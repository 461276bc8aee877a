#pragma once

#include <string>
#include <vector>

#include "nilorb/errors.hpp"
#include "nilorb/orbit_enum.hpp"

namespace nilorb {

enum class FactorKind { GL_R, GL_H, U_pq, O_pq, Sp_R, Sp_pq, SOstar, U, Sp_cpt, O };

/**
 * One direct factor of a centralizer or maximal compact subgroup. Single-size
 * kinds use a; the (p,q) kinds use a and b. Sp_R's parameter is the dimension
 * of the underlying symplectic space (always even). SOstar's parameter t
 * names the group SO*(2t). part_d records the part the factor comes from.
 */
struct GroupFactor {
  FactorKind kind;
  int a = 0;
  int b = 0;
  int part_d = 0;

  [[nodiscard]] int dim() const {
    const int m = a + b;
    switch (kind) {
      case FactorKind::GL_R: return a * a;
      case FactorKind::GL_H: return 4 * a * a;
      case FactorKind::U_pq: return m * m;
      case FactorKind::O_pq: return m * (m - 1) / 2;
      case FactorKind::Sp_R: return a * (a + 1) / 2;
      case FactorKind::Sp_pq: return m * (2 * m + 1);
      case FactorKind::SOstar: return a * (2 * a - 1);
      case FactorKind::U: return a * a;
      case FactorKind::Sp_cpt: return a * (2 * a + 1);
      case FactorKind::O: return a * (a - 1) / 2;
    }
    return 0;
  }

  [[nodiscard]] std::string to_string() const {
    switch (kind) {
      case FactorKind::GL_R: return "GL(" + std::to_string(a) + ",R)";
      case FactorKind::GL_H: return "GL(" + std::to_string(a) + ",H)";
      case FactorKind::U_pq: return "U(" + std::to_string(a) + "," + std::to_string(b) + ")";
      case FactorKind::O_pq: return "O(" + std::to_string(a) + "," + std::to_string(b) + ")";
      case FactorKind::Sp_R: return "Sp(" + std::to_string(a / 2) + ",R)";
      case FactorKind::Sp_pq: return "Sp(" + std::to_string(a) + "," + std::to_string(b) + ")";
      case FactorKind::SOstar: return "SO*(" + std::to_string(2 * a) + ")";
      case FactorKind::U: return "U(" + std::to_string(a) + ")";
      case FactorKind::Sp_cpt: return "Sp(" + std::to_string(a) + ")";
      case FactorKind::O: return "O(" + std::to_string(a) + ")";
    }
    return "?";
  }

  friend bool operator==(const GroupFactor&, const GroupFactor&) = default;
};

/** The reductive centralizer of the triple: factors, determinant cut, dimension. */
struct ReductiveStructure {
  std::vector<GroupFactor> factors;
  bool det_constraint_cuts_dim = false;
  int dim = 0;
  std::string description;
};

/** Its maximal compact subgroup plus the continuous center dimension of k. */
struct CompactStructure {
  std::vector<GroupFactor> factors;
  bool det_cut = false;
  int dim = 0;
  int dim_z = 0;
  std::string description;
};

namespace detail {

[[nodiscard]] inline std::string join_factors(const std::vector<GroupFactor>& factors,
                                              bool with_embedding) {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += " x ";
    out += f.to_string();
    if (with_embedding) out += "^D" + std::to_string(f.part_d);
  }
  return out;
}

}  // namespace detail

/**
 * Factor description of Z(X,H,Y), one factor per part in ascending part
 * order. The determinant (or reduced norm) constraint removes one real
 * dimension for the sl and su families and nothing elsewhere.
 */
[[nodiscard]] inline ReductiveStructure centralizer_structure(const OrbitClass& orbit) {
  ReductiveStructure out;
  const FormKind kind = orbit.form.kind();
  out.det_constraint_cuts_dim =
      kind == FormKind::SlR || kind == FormKind::SlH || kind == FormKind::SU;

  for (const auto& pm : orbit.partition.parts()) {
    const bool even = pm.d % 2 == 0;
    const SignMatrix* sign =
        orbit.diagram.has_value() ? &orbit.diagram->sign_for(pm.d) : nullptr;
    switch (kind) {
      case FormKind::SlR:
        out.factors.push_back({FactorKind::GL_R, pm.t, 0, pm.d});
        break;
      case FormKind::SlH:
        out.factors.push_back({FactorKind::GL_H, pm.t, 0, pm.d});
        break;
      case FormKind::SU:
        out.factors.push_back({FactorKind::U_pq, sign->p(), sign->q(), pm.d});
        break;
      case FormKind::SO:
        if (even)
          out.factors.push_back({FactorKind::Sp_R, pm.t, 0, pm.d});
        else
          out.factors.push_back({FactorKind::O_pq, sign->p(), sign->q(), pm.d});
        break;
      case FormKind::SpR:
        if (even)
          out.factors.push_back({FactorKind::O_pq, sign->p(), sign->q(), pm.d});
        else
          out.factors.push_back({FactorKind::Sp_R, pm.t, 0, pm.d});
        break;
      case FormKind::SpPQ:
        if (even)
          out.factors.push_back({FactorKind::SOstar, pm.t, 0, pm.d});
        else
          out.factors.push_back({FactorKind::Sp_pq, sign->p(), sign->q(), pm.d});
        break;
      case FormKind::SOStar:
        if (even)
          out.factors.push_back({FactorKind::Sp_pq, sign->p(), sign->q(), pm.d});
        else
          out.factors.push_back({FactorKind::SOstar, pm.t, 0, pm.d});
        break;
    }
  }

  for (const auto& f : out.factors) out.dim += f.dim();
  if (out.det_constraint_cuts_dim) out.dim -= 1;

  const std::string body = detail::join_factors(out.factors, true);
  out.description = out.det_constraint_cuts_dim ? "S(" + body + ")" : body;
  return out;
}

/**
 * Factor description of the maximal compact subgroup of Z(X,H,Y), size-zero
 * factors dropped, in ascending part order. dim_z is the dimension of the
 * continuous center of its Lie algebra: one per U factor, one per O factor
 * of size exactly 2, and one less for su where the determinant constraint
 * removes a continuous center direction.
 */
[[nodiscard]] inline CompactStructure maximal_compact_structure(const OrbitClass& orbit) {
  CompactStructure out;
  const FormKind kind = orbit.form.kind();
  out.det_cut = kind == FormKind::SU;

  auto push = [&out](FactorKind fk, int size, int part_d) {
    if (size == 0) return;
    out.factors.push_back({fk, size, 0, part_d});
  };

  std::vector<GroupFactor> p_side, q_side;
  for (const auto& pm : orbit.partition.parts()) {
    const bool even = pm.d % 2 == 0;
    const SignMatrix* sign =
        orbit.diagram.has_value() ? &orbit.diagram->sign_for(pm.d) : nullptr;
    switch (kind) {
      case FormKind::SlR:
        push(FactorKind::O, pm.t, pm.d);
        break;
      case FormKind::SlH:
        push(FactorKind::Sp_cpt, pm.t, pm.d);
        break;
      case FormKind::SU:
        push(FactorKind::U, sign->p(), pm.d);
        push(FactorKind::U, sign->q(), pm.d);
        break;
      case FormKind::SO:
        if (even) {
          push(FactorKind::U, pm.t / 2, pm.d);
        } else {
          push(FactorKind::O, sign->p(), pm.d);
          push(FactorKind::O, sign->q(), pm.d);
          if (sign->p() > 0) p_side.push_back({FactorKind::O, sign->p(), 0, pm.d});
          if (sign->q() > 0) q_side.push_back({FactorKind::O, sign->q(), 0, pm.d});
        }
        break;
      case FormKind::SpR:
        if (even) {
          push(FactorKind::O, sign->p(), pm.d);
          push(FactorKind::O, sign->q(), pm.d);
        } else {
          push(FactorKind::U, pm.t / 2, pm.d);
        }
        break;
      case FormKind::SpPQ:
        if (even) {
          push(FactorKind::U, pm.t, pm.d);
        } else {
          push(FactorKind::Sp_cpt, sign->p(), pm.d);
          push(FactorKind::Sp_cpt, sign->q(), pm.d);
        }
        break;
      case FormKind::SOStar:
        if (even) {
          push(FactorKind::Sp_cpt, sign->p(), pm.d);
          push(FactorKind::Sp_cpt, sign->q(), pm.d);
        } else {
          push(FactorKind::U, pm.t, pm.d);
        }
        break;
    }
  }

  for (const auto& f : out.factors) out.dim += f.dim();
  if (out.det_cut) out.dim -= 1;

  for (const auto& f : out.factors) {
    if (f.kind == FactorKind::U) ++out.dim_z;
    if (f.kind == FactorKind::O && f.a == 2) ++out.dim_z;
  }
  if (out.det_cut) out.dim_z -= 1;

  if (kind == FormKind::SlR || kind == FormKind::SU) {
    out.description = "S(" + detail::join_factors(out.factors, false) + ")";
  } else if (kind == FormKind::SO) {
    std::vector<GroupFactor> evens;
    for (const auto& f : out.factors)
      if (f.kind == FactorKind::U) evens.push_back(f);
    std::string body = detail::join_factors(evens, false);
    auto append_block = [&body](const std::vector<GroupFactor>& side) {
      if (side.empty()) return;
      if (!body.empty()) body += " x ";
      body += "S(" + detail::join_factors(side, false) + ")";
    };
    append_block(p_side);
    append_block(q_side);
    out.description = body;
  } else {
    out.description = detail::join_factors(out.factors, false);
  }
  return out;
}

}  // namespace nilorb
