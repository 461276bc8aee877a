#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "nilorb/errors.hpp"
#include "nilorb/scalar.hpp"

namespace nilorb {

/**
 * Dense matrix of exact quaternions with a field tag. Entries must respect
 * the tag (R: b=c=d=0, C: c=d=0). All arithmetic is exact.
 */
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols, ScalarField field)
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols) {}

  [[nodiscard]] static ExactMatrix identity(std::size_t n, ScalarField field) {
    ExactMatrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = Quaternion(1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] ScalarField field() const { return field_; }

  [[nodiscard]] const Quaternion& at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return data_[i * cols_ + j];
  }

  void set(std::size_t i, std::size_t j, Quaternion value) {
    check_index(i, j);
    if (!value.in_field(field_))
      throw InvalidInput("ExactMatrix::set: entry not in field " + field_name(field_));
    data_[i * cols_ + j] = std::move(value);
  }

  /// Reinterpret under another field tag; every entry must fit.
  [[nodiscard]] ExactMatrix with_field(ScalarField f) const {
    for (const auto& q : data_)
      if (!q.in_field(f))
        throw InvalidInput("ExactMatrix::with_field: entry not in field " + field_name(f));
    ExactMatrix m(rows_, cols_, f);
    m.data_ = data_;
    return m;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& q : data_)
      if (!q.is_zero()) return false;
    return true;
  }

  [[nodiscard]] ExactMatrix transpose() const {
    ExactMatrix m(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.data_[j * rows_ + i] = data_[i * cols_ + j];
    return m;
  }

  /// sigma(M)^t with sigma the field conjugation (identity on R).
  [[nodiscard]] ExactMatrix conjugate_transpose() const {
    ExactMatrix m(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        m.data_[j * rows_ + i] = data_[i * cols_ + j].conjugate();
    return m;
  }

  /// Left scalar multiple q * M.
  [[nodiscard]] ExactMatrix scaled(const Quaternion& q) const {
    if (!q.in_field(field_)) throw InvalidInput("ExactMatrix::scaled: scalar not in field");
    ExactMatrix m(rows_, cols_, field_);
    for (std::size_t idx = 0; idx < data_.size(); ++idx) m.data_[idx] = q * data_[idx];
    return m;
  }

  friend ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y) {
    x.check_same_shape(y);
    ExactMatrix m(x.rows_, x.cols_, x.field_);
    for (std::size_t idx = 0; idx < x.data_.size(); ++idx) m.data_[idx] = x.data_[idx] + y.data_[idx];
    return m;
  }

  friend ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y) {
    x.check_same_shape(y);
    ExactMatrix m(x.rows_, x.cols_, x.field_);
    for (std::size_t idx = 0; idx < x.data_.size(); ++idx) m.data_[idx] = x.data_[idx] - y.data_[idx];
    return m;
  }

  friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.field_ != y.field_)
      throw ShapeMismatch("matrix product: field tags differ");
    if (x.cols_ != y.rows_)
      throw ShapeMismatch("matrix product: inner dimensions differ");
    ExactMatrix m(x.rows_, y.cols_, x.field_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const Quaternion& xik = x.data_[i * x.cols_ + k];
        if (xik.is_zero()) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) {
          const Quaternion& ykj = y.data_[k * y.cols_ + j];
          if (ykj.is_zero()) continue;
          m.data_[i * y.cols_ + j] += xik * ykj;
        }
      }
    return m;
  }

  friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }
  friend bool operator!=(const ExactMatrix& x, const ExactMatrix& y) { return !(x == y); }

 private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw IndexOutOfRange("ExactMatrix: index out of range");
  }
  void check_same_shape(const ExactMatrix& y) const {
    if (rows_ != y.rows_ || cols_ != y.cols_ || field_ != y.field_)
      throw ShapeMismatch("matrix sum: shapes or fields differ");
  }

  std::size_t rows_, cols_;
  ScalarField field_;
  std::vector<Quaternion> data_;
};

/**
 * Exact rank over the scalar field. Rows are eliminated with coefficients on
 * the left, the correct convention for matrices acting on right D-modules;
 * over a division ring left row rank equals right column rank.
 */
[[nodiscard]] inline std::size_t rank(const ExactMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Quaternion>> a(rows, std::vector<Quaternion>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    const Quaternion inv = a[r][col].inverse();
    for (std::size_t j = col; j < cols; ++j) a[r][j] = inv * a[r][j];
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][col].is_zero()) continue;
      const Quaternion f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    ++r;
  }
  return r;
}

/**
 * Dimension of the real solution space of the homogeneous system M x = 0.
 * M must carry the R tag; elimination is fraction-free over integers after
 * clearing denominators row by row. An empty system yields cols().
 */
[[nodiscard]] inline std::size_t nullspace_dim_real(const ExactMatrix& m) {
  if (m.field() != ScalarField::R)
    throw PreconditionViolated("nullspace_dim_real: matrix must be over R");
  const std::size_t rows = m.rows(), cols = m.cols();

  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer lcm_den = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      const Integer den = boost::multiprecision::denominator(m.at(i, j).a);
      lcm_den = boost::multiprecision::lcm(lcm_den, den);
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational& r = m.at(i, j).a;
      a[i][j] = boost::multiprecision::numerator(r) *
                (lcm_den / boost::multiprecision::denominator(r));
    }
  }

  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        a[i][j] = (a[r][col] * a[i][j] - a[i][col] * a[r][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return cols - r;
}

/**
 * Signature (positives, negatives) of a self-adjoint form by exact congruence
 * diagonalization. Deterministic pivoting: first nonzero diagonal entry in
 * index order; if none remains, the first nonzero off-diagonal pair is turned
 * into a diagonal pivot by the basis change e_i <- e_i + e_j u with u the
 * first unit in {1, i, j, k} (restricted to the field) making Re(A[i][j] u)
 * nonzero. Degenerate directions contribute to neither count.
 */
[[nodiscard]] inline std::pair<std::size_t, std::size_t> congruence_signature(
    const ExactMatrix& g) {
  if (g.rows() != g.cols()) throw NotSelfAdjoint("congruence_signature: matrix not square");
  const std::size_t n = g.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.at(i, j) != g.at(j, i).conjugate())
        throw NotSelfAdjoint("congruence_signature: sigma(G)^t != G");

  std::vector<std::vector<Quaternion>> a(n, std::vector<Quaternion>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = g.at(i, j);

  std::vector<Quaternion> units{Quaternion(1)};
  if (g.field() != ScalarField::R) units.push_back(Quaternion::unit_i());
  if (g.field() == ScalarField::H) {
    units.push_back(Quaternion::unit_j());
    units.push_back(Quaternion::unit_k());
  }

  std::vector<bool> done(n, false);
  std::size_t pos = 0, neg = 0;
  for (;;) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && !a[i][i].is_zero()) {
        piv = i;
        break;
      }
    if (piv < n) {
      const Rational dval = a[piv][piv].a;
      (dval > 0 ? pos : neg) += 1;
      const Rational dinv = Rational(1) / dval;
      for (std::size_t r = 0; r < n; ++r) {
        if (done[r] || r == piv || a[r][piv].is_zero()) continue;
        const Quaternion factor = a[r][piv] * Quaternion(dinv);
        for (std::size_t c = 0; c < n; ++c) {
          if (done[c] || c == piv) continue;
          a[r][c] = a[r][c] - factor * a[piv][c];
        }
      }
      for (std::size_t t = 0; t < n; ++t) {
        a[piv][t] = Quaternion();
        a[t][piv] = Quaternion();
      }
      done[piv] = true;
      continue;
    }

    std::size_t oi = n, oj = n;
    for (std::size_t i = 0; i < n && oi == n; ++i) {
      if (done[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (done[j] || j == i || a[i][j].is_zero()) continue;
        oi = i;
        oj = j;
        break;
      }
    }
    if (oi == n) break;

    Quaternion u;
    for (const auto& cand : units) {
      if ((a[oi][oj] * cand).a != 0) {
        u = cand;
        break;
      }
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (done[r]) continue;
      a[r][oi] = a[r][oi] + a[r][oj] * u;
    }
    const Quaternion uc = u.conjugate();
    for (std::size_t c = 0; c < n; ++c) {
      if (done[c]) continue;
      a[oi][c] = a[oi][c] + uc * a[oj][c];
    }
  }
  return {pos, neg};
}

}  // namespace nilorb
