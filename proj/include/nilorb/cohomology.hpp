#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nilorb/errors.hpp"
#include "nilorb/orbit_enum.hpp"

namespace nilorb {

enum class CohomologyStatus { Determined, PaperGap };

/// One cohomology dimension plus the case of the analysis that produced it.
struct HValue {
  CohomologyStatus status = CohomologyStatus::Determined;
  std::optional<int> value;
  std::string case_label;
};

struct CohomologyResult {
  CohomologyStatus status = CohomologyStatus::Determined;
  std::optional<int> h1, h2;
  std::string h1_case, h2_case;
};

/// l = #{parts with p_d != 0} + #{parts with q_d != 0}.
[[nodiscard]] inline int su_l(const SignedDiagram& diagram) {
  int l = 0;
  for (const auto& s : diagram.signs()) {
    if (s.p() != 0) ++l;
    if (s.q() != 0) ++l;
  }
  return l;
}

namespace detail {

[[nodiscard]] inline HValue determined(int value, std::string label) {
  return HValue{CohomologyStatus::Determined, value, std::move(label)};
}

[[nodiscard]] inline HValue paper_gap(std::string label) {
  return HValue{CohomologyStatus::PaperGap, std::nullopt, std::move(label)};
}

[[nodiscard]] inline int odd_part_count(const Partition& p) {
  int count = 0;
  for (const auto& pm : p.parts())
    if (pm.d % 2 == 1) ++count;
  return count;
}

[[nodiscard]] inline int even_part_count(const Partition& p) {
  int count = 0;
  for (const auto& pm : p.parts())
    if (pm.d % 2 == 0) ++count;
  return count;
}

[[nodiscard]] inline SignedDiagram make_diagram(const std::vector<std::array<int, 3>>& dtp) {
  std::vector<PartMult> parts;
  std::vector<int> p_values;
  for (const auto& [d, t, p] : dtp) {
    if (t == 0) continue;
    parts.push_back({d, t});
    p_values.push_back(p);
  }
  return SignedDiagram(Partition(parts), p_values);
}

/// Families of nonzero diagrams for so(p,2) (a side) and so(2,q) (b side).
enum class RankTwoFamily { a1, a2, a3, a4, b1, b2, b3, b4, none };

[[nodiscard]] inline RankTwoFamily match_rank_two_family(const SignedDiagram& diagram, int p,
                                                         int q) {
  if (q == 2) {
    if (p >= 2 && diagram == make_diagram({{1, p - 1, p - 1}, {3, 1, 1}})) return RankTwoFamily::a1;
    if (p >= 2 && diagram == make_diagram({{1, p - 1, p - 2}, {3, 1, 0}})) return RankTwoFamily::a2;
    if (p >= 3 && diagram == make_diagram({{1, p - 3, p - 3}, {5, 1, 1}})) return RankTwoFamily::a3;
    if (p >= 2 && diagram == make_diagram({{1, p - 2, p - 2}, {2, 2, 2}})) return RankTwoFamily::a4;
    return RankTwoFamily::none;
  }
  if (q >= 2 && diagram == make_diagram({{1, q - 1, 0}, {3, 1, 0}})) return RankTwoFamily::b1;
  if (q >= 2 && diagram == make_diagram({{1, q - 1, 1}, {3, 1, 1}})) return RankTwoFamily::b2;
  if (q >= 3 && diagram == make_diagram({{1, q - 3, 0}, {5, 1, 0}})) return RankTwoFamily::b3;
  if (q >= 2 && diagram == make_diagram({{1, q - 2, 0}, {2, 2, 2}})) return RankTwoFamily::b4;
  return RankTwoFamily::none;
}

[[nodiscard]] inline const char* family_name(RankTwoFamily f) {
  switch (f) {
    case RankTwoFamily::a1: return "a.1";
    case RankTwoFamily::a2: return "a.2";
    case RankTwoFamily::a3: return "a.3";
    case RankTwoFamily::a4: return "a.4";
    case RankTwoFamily::b1: return "b.1";
    case RankTwoFamily::b2: return "b.2";
    case RankTwoFamily::b3: return "b.3";
    case RankTwoFamily::b4: return "b.4";
    case RankTwoFamily::none: return "none";
  }
  return "?";
}

struct SODefiniteData {
  int num_even = 0;
  std::vector<const SignMatrix*> indefinite_plus;   // odd parts with p > 0, i.e. O minus O^-
  std::vector<const SignMatrix*> indefinite_minus;  // odd parts with q > 0, i.e. O minus O^+
};

[[nodiscard]] inline SODefiniteData so_definite_data(const SignedDiagram& diagram) {
  SODefiniteData data;
  for (const auto& s : diagram.signs()) {
    if (s.d() % 2 == 0) {
      ++data.num_even;
      continue;
    }
    if (s.p() > 0) data.indefinite_plus.push_back(&s);
    if (s.q() > 0) data.indefinite_minus.push_back(&s);
  }
  return data;
}

[[nodiscard]] inline HValue h2_so_general(const SignedDiagram& diagram) {
  const SODefiniteData data = so_definite_data(diagram);
  const bool plus_side =
      data.indefinite_plus.size() == 1 && data.indefinite_plus[0]->p() == 2;
  const bool minus_side =
      data.indefinite_minus.size() == 1 && data.indefinite_minus[0]->q() == 2;
  if (plus_side && minus_side)
    return determined(data.num_even + 2, "so general case (1): both sides pinned, #E+2");
  if (plus_side != minus_side)
    return determined(data.num_even + 1, "so general case (2): one side pinned, #E+1");
  return determined(data.num_even, "so general case (3): #E");
}

[[nodiscard]] inline const SignedDiagram& require_diagram(const OrbitClass& orbit) {
  if (!orbit.diagram.has_value())
    throw PreconditionViolated("orbit of a signed form must carry a diagram");
  return *orbit.diagram;
}

}  // namespace detail

/** Second de Rham cohomology dimension of the orbit, by closed-form case analysis. */
[[nodiscard]] inline HValue h2(const OrbitClass& orbit) {
  using detail::determined;
  if (orbit.is_zero) return determined(0, "zero orbit (a point)");

  switch (orbit.form.kind()) {
    case FormKind::SlR: {
      if (orbit.form.n() == 2) return determined(0, "sl(2,R): rank one");
      const auto classes = classify(orbit.partition);
      if (classes.O.size() == 1 && orbit.partition.multiplicity(classes.O[0]) == 2)
        return determined(1, "sl(n,R): single odd part with multiplicity 2");
      return determined(0, "sl(n,R): generic case");
    }
    case FormKind::SlH:
      return determined(0, "sl(n,H): always 0");
    case FormKind::SU: {
      const SignedDiagram& diagram = detail::require_diagram(orbit);
      const int l = su_l(diagram);
      const PartitionFlags flags = predicates(orbit.partition);
      if (flags.is_even) return determined(l - 1, "su case (1): all parts even, l-1");
      if (l == 1) return determined(0, "su case (2): l = 1 and all parts odd");
      return determined(l - 2, "su case (3): l >= 2 with an odd part, l-2");
    }
    case FormKind::SO: {
      const SignedDiagram& diagram = detail::require_diagram(orbit);
      const int p = orbit.form.p(), q = orbit.form.q();
      if (p + q == 3) return determined(0, "so rank one: always 0");
      if (p == 2 || q == 2) {
        const auto family = detail::match_rank_two_family(diagram, p, q);
        const std::string label = std::string("so rank-two family ") + detail::family_name(family);
        switch (family) {
          case detail::RankTwoFamily::a1:
          case detail::RankTwoFamily::a3:
          case detail::RankTwoFamily::b1:
          case detail::RankTwoFamily::b3: return determined(0, label);
          case detail::RankTwoFamily::a2:
          case detail::RankTwoFamily::a4: return determined(p == 4 ? 1 : 0, label);
          case detail::RankTwoFamily::b2:
          case detail::RankTwoFamily::b4: return determined(q == 4 ? 1 : 0, label);
          case detail::RankTwoFamily::none:
            return detail::paper_gap("so rank-two: diagram matches no listed family");
        }
      }
      return detail::h2_so_general(diagram);
    }
    case FormKind::SOStar: {
      const int odd = detail::odd_part_count(orbit.partition);
      if (odd >= 1) return determined(odd - 1, "so*: #O-1");
      return determined(0, "so*: no odd parts");
    }
    case FormKind::SpR: {
      const int odd = detail::odd_part_count(orbit.partition);
      if (odd >= 1) return determined(odd - 1, "sp(n,R): #O-1");
      return determined(0, "sp(n,R): no odd parts");
    }
    case FormKind::SpPQ:
      return determined(detail::even_part_count(orbit.partition), "sp(p,q): #E");
  }
  throw PreconditionViolated("h2: unknown form");
}

/** First de Rham cohomology dimension of the orbit. */
[[nodiscard]] inline HValue h1(const OrbitClass& orbit) {
  using detail::determined;
  if (orbit.is_zero) return determined(0, "zero orbit (a point)");

  switch (orbit.form.kind()) {
    case FormKind::SlR:
      if (orbit.form.n() == 2) return determined(1, "sl(2,R): rank one");
      return determined(0, "sl(n,R), n >= 3: always 0");
    case FormKind::SlH:
      return determined(0, "sl(n,H): always 0");
    case FormKind::SU: {
      const SignedDiagram& diagram = detail::require_diagram(orbit);
      const PartitionFlags flags = predicates(orbit.partition);
      if (flags.is_even) return determined(1, "su case (1): all parts even");
      if (su_l(diagram) == 1) return determined(1, "su case (2): l = 1 and all parts odd");
      return determined(0, "su case (3): l >= 2 with an odd part");
    }
    case FormKind::SO: {
      const SignedDiagram& diagram = detail::require_diagram(orbit);
      const int p = orbit.form.p(), q = orbit.form.q();
      if (p + q == 3) return determined(1, "so rank one: nonzero orbit");
      if (p == 2 || q == 2) {
        const auto family = detail::match_rank_two_family(diagram, p, q);
        const std::string label = std::string("so rank-two family ") + detail::family_name(family);
        switch (family) {
          case detail::RankTwoFamily::a1:
          case detail::RankTwoFamily::a2:
          case detail::RankTwoFamily::a3:
          case detail::RankTwoFamily::b1:
          case detail::RankTwoFamily::b2:
          case detail::RankTwoFamily::b3: return determined(1, label);
          case detail::RankTwoFamily::a4:
          case detail::RankTwoFamily::b4: return determined(0, label);
          case detail::RankTwoFamily::none:
            return detail::paper_gap("so rank-two: diagram matches no listed family");
        }
      }
      return determined(0, "so general: always 0");
    }
    case FormKind::SOStar:
      return determined(detail::odd_part_count(orbit.partition) == 0 ? 1 : 0,
                        "so*: 1 iff no odd parts");
    case FormKind::SpR:
      return determined(detail::odd_part_count(orbit.partition) == 0 ? 1 : 0,
                        "sp(n,R): 1 iff no odd parts");
    case FormKind::SpPQ:
      return determined(0, "sp(p,q): always 0");
  }
  throw PreconditionViolated("h1: unknown form");
}

/** Both cohomology dimensions; PaperGap if either case analysis has no value. */
[[nodiscard]] inline CohomologyResult cohomology(const OrbitClass& orbit) {
  const HValue one = h1(orbit);
  const HValue two = h2(orbit);
  CohomologyResult result;
  result.h1_case = one.case_label;
  result.h2_case = two.case_label;
  if (one.status == CohomologyStatus::PaperGap || two.status == CohomologyStatus::PaperGap) {
    result.status = CohomologyStatus::PaperGap;
    return result;
  }
  result.h1 = one.value;
  result.h2 = two.value;
  return result;
}

}  // namespace nilorb
