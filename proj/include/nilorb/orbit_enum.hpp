#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilorb/errors.hpp"
#include "nilorb/scalar.hpp"
#include "nilorb/signed_diagram.hpp"

namespace nilorb {

enum class FormKind { SlR, SlH, SU, SO, SOStar, SpR, SpPQ };

/**
 * One of the seven non-compact classical real simple Lie algebras. Validation
 * rejects the non-simple and compact parameter choices: so(p,q) requires
 * (p,q) not in {(1,1),(2,2)}, so*(2n) requires n >= 3, sl forms need n >= 2,
 * su/sp(p,q) need p,q >= 1, sp(n,R) needs n >= 1.
 */
class RealForm {
 public:
  [[nodiscard]] static RealForm sl_r(int n) {
    if (n < 2) throw InvalidForm("sl(n,R) requires n >= 2");
    return RealForm(FormKind::SlR, n, 0);
  }
  [[nodiscard]] static RealForm sl_h(int n) {
    if (n < 2) throw InvalidForm("sl(n,H) requires n >= 2 (sl(1,H) is compact)");
    return RealForm(FormKind::SlH, n, 0);
  }
  [[nodiscard]] static RealForm su(int p, int q) {
    if (p < 1 || q < 1) throw InvalidForm("su(p,q) requires p >= 1 and q >= 1");
    return RealForm(FormKind::SU, p, q);
  }
  [[nodiscard]] static RealForm so(int p, int q) {
    if (p < 1 || q < 1) throw InvalidForm("so(p,q) requires p >= 1 and q >= 1");
    if (p == 1 && q == 1) throw InvalidForm("so(1,1) is not simple");
    if (p == 2 && q == 2) throw InvalidForm("so(2,2) is not simple");
    return RealForm(FormKind::SO, p, q);
  }
  [[nodiscard]] static RealForm so_star(int n) {
    if (n < 3) throw InvalidForm("so*(2n) requires n >= 3");
    return RealForm(FormKind::SOStar, n, 0);
  }
  [[nodiscard]] static RealForm sp_r(int n) {
    if (n < 1) throw InvalidForm("sp(n,R) requires n >= 1");
    return RealForm(FormKind::SpR, n, 0);
  }
  [[nodiscard]] static RealForm sp_pq(int p, int q) {
    if (p < 1 || q < 1) throw InvalidForm("sp(p,q) requires p >= 1 and q >= 1");
    return RealForm(FormKind::SpPQ, p, q);
  }

  [[nodiscard]] FormKind kind() const { return kind_; }

  /// n for the n-parameter forms; throws for the (p,q) forms.
  [[nodiscard]] int n() const {
    if (uses_pq()) throw PreconditionViolated("RealForm::n: form is parametrized by (p,q)");
    return a_;
  }
  [[nodiscard]] int p() const {
    if (!uses_pq()) throw PreconditionViolated("RealForm::p: form is parametrized by n");
    return a_;
  }
  [[nodiscard]] int q() const {
    if (!uses_pq()) throw PreconditionViolated("RealForm::q: form is parametrized by n");
    return b_;
  }

  [[nodiscard]] bool uses_pq() const {
    return kind_ == FormKind::SU || kind_ == FormKind::SO || kind_ == FormKind::SpPQ;
  }

  /// True for the five forms whose orbits carry signed diagrams.
  [[nodiscard]] bool is_signed() const {
    return kind_ != FormKind::SlR && kind_ != FormKind::SlH;
  }

  /// Size of the defining matrix representation over field().
  [[nodiscard]] int matrix_size() const {
    switch (kind_) {
      case FormKind::SlR:
      case FormKind::SlH:
      case FormKind::SOStar: return a_;
      case FormKind::SpR: return 2 * a_;
      case FormKind::SU:
      case FormKind::SO:
      case FormKind::SpPQ: return a_ + b_;
    }
    return 0;
  }

  [[nodiscard]] ScalarField field() const {
    switch (kind_) {
      case FormKind::SlR:
      case FormKind::SO:
      case FormKind::SpR: return ScalarField::R;
      case FormKind::SU: return ScalarField::C;
      case FormKind::SlH:
      case FormKind::SOStar:
      case FormKind::SpPQ: return ScalarField::H;
    }
    return ScalarField::R;
  }

  /// +1 for symmetric/Hermitian invariant forms, -1 for symplectic/skew.
  [[nodiscard]] int epsilon() const {
    switch (kind_) {
      case FormKind::SU:
      case FormKind::SO:
      case FormKind::SpPQ: return 1;
      case FormKind::SpR:
      case FormKind::SOStar: return -1;
      default: throw NoFormForThisAlgebra("sl forms have no invariant form");
    }
  }

  [[nodiscard]] std::string name() const {
    switch (kind_) {
      case FormKind::SlR: return "sl(" + std::to_string(a_) + ",R)";
      case FormKind::SlH: return "sl(" + std::to_string(a_) + ",H)";
      case FormKind::SU: return "su(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
      case FormKind::SO: return "so(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
      case FormKind::SOStar: return "so*(" + std::to_string(2 * a_) + ")";
      case FormKind::SpR: return "sp(" + std::to_string(a_) + ",R)";
      case FormKind::SpPQ: return "sp(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
    }
    return "?";
  }

  friend bool operator==(const RealForm&, const RealForm&) = default;

 private:
  RealForm(FormKind kind, int a, int b) : kind_(kind), a_(a), b_(b) {}
  FormKind kind_;
  int a_, b_;
};

/**
 * One nilpotent orbit class: a diagram (bare partition for the sl forms) plus
 * a fiber index when the parametrization map has a fiber of size 2 or 4.
 */
struct OrbitClass {
  RealForm form;
  Partition partition;
  std::optional<SignedDiagram> diagram;
  int fiber_index = 1;
  int fiber_size = 1;
  bool is_zero = false;

  /// Diagram (or partition) text, with ":k" appended when the fiber is nontrivial.
  [[nodiscard]] std::string orbit_text() const {
    std::string out = diagram.has_value() ? diagram->to_text() : partition.to_text();
    if (fiber_size > 1) out += ":" + std::to_string(fiber_index);
    return out;
  }

  friend bool operator==(const OrbitClass&, const OrbitClass&) = default;
};

namespace detail {

[[nodiscard]] inline DiagramSetKind diagram_set_kind(FormKind kind) {
  switch (kind) {
    case FormKind::SU: return DiagramSetKind::Y;
    case FormKind::SO: return DiagramSetKind::Y_even1;
    case FormKind::SpPQ: return DiagramSetKind::Y_even;
    case FormKind::SOStar: return DiagramSetKind::Y_odd;
    case FormKind::SpR: return DiagramSetKind::Y_odd_minus1;
    default: throw PreconditionViolated("diagram_set_kind: sl forms use bare partitions");
  }
}

[[nodiscard]] inline std::vector<SignedDiagram> diagram_set(const RealForm& form) {
  const DiagramSetKind kind = diagram_set_kind(form.kind());
  if (form.uses_pq()) return enumerate_set(kind, form.p(), form.q());
  if (form.kind() == FormKind::SpR) return enumerate_set(kind, 2 * form.n());
  return enumerate_set(kind, form.n());
}

[[nodiscard]] inline int fiber_size_for(const RealForm& form, const Partition& partition,
                                        const std::optional<SignedDiagram>& diagram) {
  switch (form.kind()) {
    case FormKind::SlR: return predicates(partition).is_even ? 2 : 1;
    case FormKind::SO: {
      const PartitionFlags flags = predicates(partition);
      if (flags.is_very_even) return 4;
      if (flags.in_P1 && in_S_prime(*diagram)) return 2;
      return 1;
    }
    default: return 1;
  }
}

}  // namespace detail

/**
 * All orbit classes of the form, ordered by partition (lexicographic), then
 * the diagram's (p_d) tuple, then fiber index. The zero orbit is the class
 * with partition [1^n].
 */
[[nodiscard]] inline std::vector<OrbitClass> enumerate_orbits(const RealForm& form) {
  std::vector<OrbitClass> out;
  auto expand = [&out, &form](const Partition& partition,
                              const std::optional<SignedDiagram>& diagram) {
    const int fibers = detail::fiber_size_for(form, partition, diagram);
    for (int index = 1; index <= fibers; ++index)
      out.push_back(OrbitClass{form, partition, diagram, index, fibers, partition.all_ones()});
  };

  if (!form.is_signed()) {
    for (const Partition& partition : enumerate_partitions(form.n()))
      expand(partition, std::nullopt);
  } else {
    for (const SignedDiagram& diagram : detail::diagram_set(form))
      expand(diagram.partition(), diagram);
  }
  return out;
}

/**
 * Resolves a textual orbit ("<diagram>" for signed forms, "<partition>" for
 * sl forms) plus a fiber index against the form's parameter set.
 */
[[nodiscard]] inline OrbitClass parse_orbit(const RealForm& form, std::string_view text,
                                            int fiber_index = 1) {
  std::optional<SignedDiagram> diagram;
  std::optional<Partition> partition;
  if (form.is_signed()) {
    diagram = SignedDiagram::parse(text);
    partition = diagram->partition();
  } else {
    partition = Partition::parse(text);
  }

  if (form.is_signed()) {
    const int expect = form.matrix_size();
    if (partition->n() != expect)
      throw NotInParamSet("diagram has " + std::to_string(partition->n()) +
                          " boxes, expected " + std::to_string(expect) + " for " + form.name());
    for (const auto& s : diagram->signs()) {
      const bool even = s.d() % 2 == 0;
      switch (form.kind()) {
        case FormKind::SO:
          if (even && s.p() != s.t())
            throw NotInParamSet("even rows must start + for " + form.name());
          if (even && s.t() % 2 != 0)
            throw NotInParamSet("even parts need even multiplicity for " + form.name());
          break;
        case FormKind::SpPQ:
          if (even && s.p() != s.t())
            throw NotInParamSet("even rows must start + for " + form.name());
          break;
        case FormKind::SOStar:
          if (!even && s.p() != s.t())
            throw NotInParamSet("odd rows must start + for " + form.name());
          break;
        case FormKind::SpR:
          if (!even && s.p() != s.t())
            throw NotInParamSet("odd rows must start + for " + form.name());
          if (!even && s.t() % 2 != 0)
            throw NotInParamSet("odd parts need even multiplicity for " + form.name());
          break;
        default: break;
      }
    }
    if (form.uses_pq() && diagram->signature() != std::pair<int, int>(form.p(), form.q()))
      throw NotInParamSet("diagram signature does not match " + form.name());
  } else {
    if (partition->n() != form.n())
      throw NotInParamSet("partition of " + std::to_string(partition->n()) +
                          ", expected n = " + std::to_string(form.n()) + " for " + form.name());
  }

  const int fibers = detail::fiber_size_for(form, *partition, diagram);
  if (fiber_index < 1 || fiber_index > fibers)
    throw BadFiberIndex("fiber index " + std::to_string(fiber_index) + " outside 1.." +
                        std::to_string(fibers));
  return OrbitClass{form, *partition, diagram, fiber_index, fibers, partition->all_ones()};
}

}  // namespace nilorb
