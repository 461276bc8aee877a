#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "nilorb/errors.hpp"

namespace nilorb {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/** Ground field tag: entries of C are quaternions with c=d=0, of R with b=c=d=0. */
enum class ScalarField { R, C, H };

[[nodiscard]] inline std::string field_name(ScalarField f) {
  switch (f) {
    case ScalarField::R: return "R";
    case ScalarField::C: return "C";
    case ScalarField::H: return "H";
  }
  return "?";
}

/**
 * Quaternion with exact rational coefficients: a + b i + c j + d k,
 * i^2 = j^2 = k^2 = -1 and i j = k. Conjugation negates b, c, d.
 */
struct Quaternion {
  Rational a{0}, b{0}, c{0}, d{0};

  Quaternion() = default;
  Quaternion(Rational ra, Rational rb, Rational rc, Rational rd)
      : a(std::move(ra)), b(std::move(rb)), c(std::move(rc)), d(std::move(rd)) {}
  explicit Quaternion(Rational real) : a(std::move(real)) {}
  explicit Quaternion(long real) : a(real) {}

  [[nodiscard]] static Quaternion unit_i() { return {0, 1, 0, 0}; }
  [[nodiscard]] static Quaternion unit_j() { return {0, 0, 1, 0}; }
  [[nodiscard]] static Quaternion unit_k() { return {0, 0, 0, 1}; }

  [[nodiscard]] bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  [[nodiscard]] bool is_real() const { return b == 0 && c == 0 && d == 0; }

  [[nodiscard]] bool in_field(ScalarField f) const {
    switch (f) {
      case ScalarField::R: return is_real();
      case ScalarField::C: return c == 0 && d == 0;
      case ScalarField::H: return true;
    }
    return false;
  }

  [[nodiscard]] Quaternion conjugate() const { return {a, -b, -c, -d}; }

  /// Reduced norm a^2 + b^2 + c^2 + d^2.
  [[nodiscard]] Rational norm() const { return a * a + b * b + c * c + d * d; }

  [[nodiscard]] Quaternion inverse() const {
    if (is_zero()) throw InvalidInput("Quaternion::inverse: division by zero");
    const Rational n = norm();
    return {a / n, -b / n, -c / n, -d / n};
  }

  friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Quaternion operator-(const Quaternion& x) { return {-x.a, -x.b, -x.c, -x.d}; }

  friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
            x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
            x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
            x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
  }

  Quaternion& operator+=(const Quaternion& y) { return *this = *this + y; }
  Quaternion& operator-=(const Quaternion& y) { return *this = *this - y; }
  Quaternion& operator*=(const Quaternion& y) { return *this = *this * y; }

  friend bool operator==(const Quaternion& x, const Quaternion& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const Quaternion& x, const Quaternion& y) { return !(x == y); }
};

[[nodiscard]] inline std::string to_string(const Rational& r) {
  return r.str();
}

/// Compact display form, e.g. "1", "-i", "2+3j".
[[nodiscard]] inline std::string to_string(const Quaternion& q) {
  if (q.is_zero()) return "0";
  std::string out;
  auto append = [&out](const Rational& coeff, const char* unit) {
    if (coeff == 0) return;
    std::string c = to_string(coeff);
    if (!out.empty() && c[0] != '-') out += '+';
    if (*unit != '\0' && (c == "1" || c == "-1")) c = (c == "1") ? "" : "-";
    out += c;
    out += unit;
  };
  append(q.a, "");
  append(q.b, "i");
  append(q.c, "j");
  append(q.d, "k");
  return out;
}

}  // namespace nilorb
