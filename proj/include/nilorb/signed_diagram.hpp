#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilorb/errors.hpp"
#include "nilorb/partition.hpp"

namespace nilorb {

/**
 * Sign matrix of one part: t rows of length d with entries +1/-1. Stored as
 * (d, t, p); the first column has +1 exactly in rows 1..p, every row
 * alternates along the columns, and for d = 3 mod 4 the last column is the
 * negative of the first (the corrected rule) instead of continuing the
 * alternation.
 */
class SignMatrix {
 public:
  SignMatrix(int d, int t, int p) : d_(d), t_(t), p_(p) {
    if (d < 1) throw InvalidInput("SignMatrix: part size must be positive");
    if (t < 1) throw InvalidInput("SignMatrix: multiplicity must be positive");
    if (p < 0 || p > t) throw InvalidInput("SignMatrix: p must satisfy 0 <= p <= t");
  }

  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] int t() const { return t_; }
  [[nodiscard]] int p() const { return p_; }
  [[nodiscard]] int q() const { return t_ - p_; }

  /// Entry m(i,j), 1-based, in {+1,-1}.
  [[nodiscard]] int entry(int i, int j) const {
    if (i < 1 || i > t_ || j < 1 || j > d_) throw IndexOutOfRange("SignMatrix::entry");
    const int lead = i <= p_ ? 1 : -1;
    if (d_ % 4 == 3 && j == d_) return -lead;
    return (j % 2 == 1) ? lead : -lead;
  }

  /**
   * Totals (# of +1, # of -1) by the closed forms: d even gives
   * (t d/2, t d/2); d = 1 mod 4 gives (p(d+1)/2 + q(d-1)/2, p(d-1)/2 + q(d+1)/2);
   * d = 3 mod 4 exchanges the two.
   */
  [[nodiscard]] std::pair<int, int> sign_counts() const {
    if (d_ % 2 == 0) {
      const int half = t_ * d_ / 2;
      return {half, half};
    }
    const int hi = (d_ + 1) / 2, lo = (d_ - 1) / 2;
    const int plus1 = p_ * hi + q() * lo;
    const int minus1 = p_ * lo + q() * hi;
    if (d_ % 4 == 1) return {plus1, minus1};
    return {minus1, plus1};
  }

  /// (# of +1, # of -1) in row i, counted directly.
  [[nodiscard]] std::pair<int, int> row_parities(int i) const {
    if (i < 1 || i > t_) throw IndexOutOfRange("SignMatrix::row_parities");
    int plus = 0;
    for (int j = 1; j <= d_; ++j)
      if (entry(i, j) == 1) ++plus;
    return {plus, d_ - plus};
  }

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  int d_, t_, p_;
};

/**
 * A signed Young diagram: a partition with one SignMatrix per part.
 * Text grammar (parts descending): per part a `d+^p` token when p > 0 and a
 * `d-^q` token when q > 0, comma-joined, e.g. "3+^1,1+^2,1-^1". Zero-count
 * tokens are forbidden. JSON form: {"parts":[{"d":3,"t":1,"p":1},...]}.
 */
class SignedDiagram {
 public:
  SignedDiagram(Partition partition, const std::vector<int>& p_values)
      : partition_(std::move(partition)) {
    const auto& parts = partition_.parts();
    if (p_values.size() != parts.size())
      throw InvalidInput("SignedDiagram: one p value per part required");
    signs_.reserve(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
      signs_.emplace_back(parts[i].d, parts[i].t, p_values[i]);
  }

  [[nodiscard]] const Partition& partition() const { return partition_; }
  [[nodiscard]] const std::vector<SignMatrix>& signs() const { return signs_; }

  [[nodiscard]] const SignMatrix& sign_for(int d) const {
    for (const auto& s : signs_)
      if (s.d() == d) return s;
    throw InvalidInput("SignedDiagram::sign_for: no part of size " + std::to_string(d));
  }

  /// Box totals (# of +1, # of -1) over the whole diagram.
  [[nodiscard]] std::pair<int, int> signature() const {
    int plus = 0, minus = 0;
    for (const auto& s : signs_) {
      const auto [sp, sm] = s.sign_counts();
      plus += sp;
      minus += sm;
    }
    return {plus, minus};
  }

  [[nodiscard]] std::string to_text() const {
    std::string out;
    auto token = [&out](int d, char sign, int count) {
      if (count == 0) return;
      if (!out.empty()) out += ',';
      out += std::to_string(d);
      out += sign;
      out += '^';
      out += std::to_string(count);
    };
    for (auto it = signs_.rbegin(); it != signs_.rend(); ++it) {
      token(it->d(), '+', it->p());
      token(it->d(), '-', it->q());
    }
    return out;
  }

  [[nodiscard]] nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json parts = nlohmann::ordered_json::array();
    for (auto it = signs_.rbegin(); it != signs_.rend(); ++it)
      parts.push_back({{"d", it->d()}, {"t", it->t()}, {"p", it->p()}});
    return nlohmann::ordered_json{{"parts", std::move(parts)}};
  }

  [[nodiscard]] static SignedDiagram parse(std::string_view text);
  [[nodiscard]] static SignedDiagram from_json(const nlohmann::json& j);

  friend bool operator==(const SignedDiagram&, const SignedDiagram&) = default;

 private:
  Partition partition_;
  std::vector<SignMatrix> signs_;
};

inline SignedDiagram SignedDiagram::parse(std::string_view text) {
  struct Counts {
    int d = 0;
    std::optional<int> plus, minus;
  };
  std::vector<Counts> acc;
  for (std::string_view token : detail::split_commas(text)) {
    std::size_t pos = 0;
    const long d = detail::parse_count(token, pos);
    if (pos >= token.size() || (token[pos] != '+' && token[pos] != '-'))
      throw ParseError("expected '+' or '-' in '" + std::string(token) + "'");
    const bool is_plus = token[pos] == '+';
    ++pos;
    if (pos >= token.size() || token[pos] != '^')
      throw ParseError("expected '^count' in '" + std::string(token) + "'");
    ++pos;
    const long count = detail::parse_count(token, pos);
    if (pos != token.size()) throw ParseError("trailing characters in '" + std::string(token) + "'");
    if (count == 0) throw ParseError("zero-count token '" + std::string(token) + "'");

    Counts* slot = nullptr;
    for (auto& c : acc)
      if (c.d == d) slot = &c;
    if (slot == nullptr) {
      acc.push_back({static_cast<int>(d), std::nullopt, std::nullopt});
      slot = &acc.back();
    }
    auto& side = is_plus ? slot->plus : slot->minus;
    if (side.has_value())
      throw ParseError("duplicate token for part " + std::to_string(d) +
                       (is_plus ? "+" : "-"));
    side = static_cast<int>(count);
  }
  if (acc.empty()) throw ParseError("empty diagram");
  std::sort(acc.begin(), acc.end(), [](const Counts& x, const Counts& y) { return x.d < y.d; });

  std::vector<PartMult> parts;
  std::vector<int> p_values;
  for (const auto& c : acc) {
    const int p = c.plus.value_or(0), q = c.minus.value_or(0);
    parts.push_back({c.d, p + q});
    p_values.push_back(p);
  }
  try {
    return SignedDiagram(Partition(std::move(parts)), p_values);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
}

inline SignedDiagram SignedDiagram::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("parts") || !j["parts"].is_array())
    throw ParseError("diagram JSON must be an object with a 'parts' array");
  std::vector<PartMult> parts;
  std::vector<int> p_values;
  for (const auto& part : j["parts"]) {
    if (!part.contains("d") || !part.contains("t") || !part.contains("p"))
      throw ParseError("diagram JSON part needs d, t, p");
    parts.push_back({part["d"].get<int>(), part["t"].get<int>()});
    p_values.push_back(part["p"].get<int>());
  }
  std::vector<std::size_t> order(parts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&parts](std::size_t x, std::size_t y) { return parts[x].d < parts[y].d; });
  std::vector<PartMult> sorted_parts;
  std::vector<int> sorted_p;
  for (std::size_t i : order) {
    sorted_parts.push_back(parts[i]);
    sorted_p.push_back(p_values[i]);
  }
  try {
    return SignedDiagram(Partition(std::move(sorted_parts)), sorted_p);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
}

/// Every even part has all rows starting +1 (p = t).
[[nodiscard]] inline bool in_S_even(const SignedDiagram& diag) {
  for (const auto& s : diag.signs())
    if (s.d() % 2 == 0 && s.p() != s.t()) return false;
  return true;
}

/// Every odd part has all rows starting +1 (p = t).
[[nodiscard]] inline bool in_S_odd(const SignedDiagram& diag) {
  for (const auto& s : diag.signs())
    if (s.d() % 2 == 1 && s.p() != s.t()) return false;
  return true;
}

/**
 * True iff the + counts of every row of every odd part are all even, or the
 * - counts are. Defined only inside S^even; PreconditionViolated otherwise.
 */
[[nodiscard]] inline bool in_S_prime(const SignedDiagram& diag) {
  if (!in_S_even(diag)) throw PreconditionViolated("in_S_prime: diagram not in S^even");
  bool all_plus_even = true, all_minus_even = true;
  for (const auto& s : diag.signs()) {
    if (s.d() % 2 == 0) continue;
    for (int i = 1; i <= s.t(); ++i) {
      const auto [lp, lm] = s.row_parities(i);
      if (lp % 2 != 0) all_plus_even = false;
      if (lm % 2 != 0) all_minus_even = false;
    }
  }
  return all_plus_even || all_minus_even;
}

enum class DiagramSetKind { Y, Y_even, Y_even1, Y_odd, Y_odd_minus1 };

/**
 * Enumerates a named diagram set. Signature kinds take (p, q); size kinds
 * (Y_odd, Y_odd_minus1) take n as the first parameter with the second absent.
 * Order: partitions lexicographic, then the (p_d) tuples lexicographic with
 * the smallest part most significant.
 */
[[nodiscard]] inline std::vector<SignedDiagram> enumerate_set(DiagramSetKind kind, int a,
                                                              std::optional<int> b = {}) {
  const bool signature_kind = kind == DiagramSetKind::Y || kind == DiagramSetKind::Y_even ||
                              kind == DiagramSetKind::Y_even1;
  if (signature_kind && !b.has_value())
    throw InvalidInput("enumerate_set: this set kind takes (p, q)");
  if (!signature_kind && b.has_value())
    throw InvalidInput("enumerate_set: this set kind takes a single size n");
  if (a < 0 || (b.has_value() && *b < 0))
    throw InvalidInput("enumerate_set: parameters must be nonnegative");
  const int n = signature_kind ? a + *b : a;

  std::vector<SignedDiagram> out;
  for (const Partition& partition : enumerate_partitions(n)) {
    const auto& parts = partition.parts();
    const PartitionFlags flags = predicates(partition);
    if (kind == DiagramSetKind::Y_even1 && !flags.in_P1) continue;
    if (kind == DiagramSetKind::Y_odd_minus1 && !flags.in_P_minus1) continue;

    std::vector<int> p_values(parts.size(), 0);
    auto advance = [&]() {
      for (std::size_t idx = parts.size(); idx-- > 0;) {
        if (p_values[idx] < parts[idx].t) {
          ++p_values[idx];
          return true;
        }
        p_values[idx] = 0;
      }
      return false;
    };
    do {
      SignedDiagram diag(partition, p_values);
      bool keep = true;
      if (kind == DiagramSetKind::Y_even || kind == DiagramSetKind::Y_even1)
        keep = in_S_even(diag);
      else if (kind == DiagramSetKind::Y_odd || kind == DiagramSetKind::Y_odd_minus1)
        keep = in_S_odd(diag);
      if (keep && signature_kind) keep = diag.signature() == std::pair<int, int>(a, *b);
      if (keep) out.push_back(std::move(diag));
    } while (advance());
  }
  return out;
}

}  // namespace nilorb
