#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "nilorb/errors.hpp"

namespace nilorb {

/// One distinct part size d with its multiplicity t.
struct PartMult {
  int d = 0;
  int t = 0;
  friend bool operator==(const PartMult&, const PartMult&) = default;
};

/**
 * Partition of n stored as strictly increasing part sizes with multiplicities.
 * Text form: comma-joined `d^t` tokens ascending, e.g. "1^2,3^1".
 */
class Partition {
 public:
  explicit Partition(std::vector<PartMult> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InvalidInput("Partition: no parts");
    int prev = 0;
    for (const auto& pm : parts_) {
      if (pm.d <= prev) throw InvalidInput("Partition: parts must be strictly increasing");
      if (pm.t < 1) throw InvalidInput("Partition: multiplicities must be positive");
      prev = pm.d;
      n_ += pm.d * pm.t;
    }
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const std::vector<PartMult>& parts() const { return parts_; }

  [[nodiscard]] int multiplicity(int d) const {
    for (const auto& pm : parts_)
      if (pm.d == d) return pm.t;
    return 0;
  }
  [[nodiscard]] bool has_part(int d) const { return multiplicity(d) > 0; }

  /// True exactly when the partition is [1^n], the shape of the zero element.
  [[nodiscard]] bool all_ones() const { return parts_.size() == 1 && parts_[0].d == 1; }

  [[nodiscard]] std::string to_text() const {
    std::string out;
    for (const auto& pm : parts_) {
      if (!out.empty()) out += ',';
      out += std::to_string(pm.d) + "^" + std::to_string(pm.t);
    }
    return out;
  }

  /// Parses `d^t` tokens, ascending or not; bare `d` means t = 1.
  [[nodiscard]] static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<PartMult> parts_;
  int n_ = 0;
};

namespace detail {

[[nodiscard]] inline long parse_count(std::string_view token, std::size_t& pos) {
  if (pos >= token.size() || token[pos] < '0' || token[pos] > '9')
    throw ParseError("expected a number in '" + std::string(token) + "'");
  long value = 0;
  while (pos < token.size() && token[pos] >= '0' && token[pos] <= '9') {
    value = value * 10 + (token[pos] - '0');
    if (value > 1000000) throw ParseError("number too large in '" + std::string(token) + "'");
    ++pos;
  }
  return value;
}

[[nodiscard]] inline std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    tokens.push_back(text.substr(start, end - start));
    start = end + 1;
    if (end == text.size()) break;
  }
  return tokens;
}

}  // namespace detail

inline Partition Partition::parse(std::string_view text) {
  std::vector<PartMult> parts;
  for (std::string_view token : detail::split_commas(text)) {
    std::size_t pos = 0;
    const long d = detail::parse_count(token, pos);
    long t = 1;
    if (pos < token.size()) {
      if (token[pos] != '^') throw ParseError("expected '^' in '" + std::string(token) + "'");
      ++pos;
      t = detail::parse_count(token, pos);
      if (pos != token.size()) throw ParseError("trailing characters in '" + std::string(token) + "'");
    }
    if (d < 1) throw ParseError("part sizes must be positive");
    if (t < 1) throw ParseError("multiplicities must be positive");
    for (const auto& pm : parts)
      if (pm.d == d) throw ParseError("duplicate part size " + std::to_string(d));
    parts.push_back({static_cast<int>(d), static_cast<int>(t)});
  }
  std::sort(parts.begin(), parts.end(), [](const PartMult& x, const PartMult& y) { return x.d < y.d; });
  try {
    return Partition(std::move(parts));
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
}

/// The part-size sets: all, even, odd, odd = 1 mod 4, odd = 3 mod 4.
struct PartClasses {
  std::vector<int> N, E, O, O1, O3;
};

[[nodiscard]] inline PartClasses classify(const Partition& p) {
  PartClasses c;
  for (const auto& pm : p.parts()) {
    c.N.push_back(pm.d);
    if (pm.d % 2 == 0) {
      c.E.push_back(pm.d);
    } else {
      c.O.push_back(pm.d);
      (pm.d % 4 == 1 ? c.O1 : c.O3).push_back(pm.d);
    }
  }
  return c;
}

struct PartitionFlags {
  bool is_even = false;
  bool is_very_even = false;
  bool in_P1 = false;
  bool in_P_minus1 = false;
};

/**
 * is_even: all parts even. is_very_even: even with all multiplicities even.
 * in_P1: every even part has even multiplicity. in_P_minus1: every odd part
 * has even multiplicity.
 */
[[nodiscard]] inline PartitionFlags predicates(const Partition& p) {
  PartitionFlags f;
  f.is_even = true;
  f.in_P1 = true;
  f.in_P_minus1 = true;
  bool all_mult_even = true;
  for (const auto& pm : p.parts()) {
    const bool even_part = pm.d % 2 == 0;
    const bool even_mult = pm.t % 2 == 0;
    if (!even_part) f.is_even = false;
    if (!even_mult) all_mult_even = false;
    if (even_part && !even_mult) f.in_P1 = false;
    if (!even_part && !even_mult) f.in_P_minus1 = false;
  }
  f.is_very_even = f.is_even && all_mult_even;
  return f;
}

namespace detail {

inline void extend_partitions(int remaining, int min_part, std::vector<int>& acc,
                              std::vector<Partition>& out) {
  if (remaining == 0) {
    std::vector<PartMult> parts;
    for (int d : acc) {
      if (!parts.empty() && parts.back().d == d)
        ++parts.back().t;
      else
        parts.push_back({d, 1});
    }
    out.emplace_back(std::move(parts));
    return;
  }
  for (int d = min_part; d <= remaining; ++d) {
    acc.push_back(d);
    extend_partitions(remaining - d, d, acc, out);
    acc.pop_back();
  }
}

}  // namespace detail

/**
 * All partitions of n in lexicographic order on the ascending part lists:
 * [1,1,1,1] < [1,1,2] < [1,3] < [2,2] < [4].
 */
[[nodiscard]] inline std::vector<Partition> enumerate_partitions(int n) {
  if (n <= 0) throw InvalidInput("enumerate_partitions: n must be positive");
  std::vector<Partition> out;
  std::vector<int> acc;
  detail::extend_partitions(n, 1, acc, out);
  return out;
}

/// Lexicographic comparison on the expanded ascending part lists.
[[nodiscard]] inline bool partition_less(const Partition& x, const Partition& y) {
  std::vector<int> xs, ys;
  for (const auto& pm : x.parts()) xs.insert(xs.end(), pm.t, pm.d);
  for (const auto& pm : y.parts()) ys.insert(ys.end(), pm.t, pm.d);
  return std::lexicographical_compare(xs.begin(), xs.end(), ys.begin(), ys.end());
}

}  // namespace nilorb
