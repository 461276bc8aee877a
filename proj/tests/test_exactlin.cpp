#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "nilorb/matrix.hpp"
#include "nilorb/scalar.hpp"

using namespace nilorb;

namespace {

ExactMatrix from_rows(const std::vector<std::vector<long>>& rows, ScalarField field) {
  ExactMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), field);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, Quaternion(rows[i][j]));
  return m;
}

}  // namespace

TEST_CASE("quaternion multiplication table") {
  const Quaternion i = Quaternion::unit_i();
  const Quaternion j = Quaternion::unit_j();
  const Quaternion k = Quaternion::unit_k();
  CHECK(i * i == -Quaternion(1));
  CHECK(j * j == -Quaternion(1));
  CHECK(k * k == -Quaternion(1));
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(j * k == i);
  CHECK(k * i == j);
}

TEST_CASE("conjugation reverses products and norm is multiplicative") {
  const Quaternion x{1, 2, 3, 4};
  const Quaternion y{-2, 1, 0, 5};
  CHECK((x * y).conjugate() == y.conjugate() * x.conjugate());
  CHECK((x * y).norm() == x.norm() * y.norm());
  CHECK(x * x.inverse() == Quaternion(1));
  CHECK(x.inverse() * x == Quaternion(1));
}

TEST_CASE("field membership") {
  CHECK(Quaternion(3).in_field(ScalarField::R));
  CHECK_FALSE(Quaternion::unit_i().in_field(ScalarField::R));
  CHECK(Quaternion::unit_i().in_field(ScalarField::C));
  CHECK_FALSE(Quaternion::unit_j().in_field(ScalarField::C));
  CHECK(Quaternion::unit_j().in_field(ScalarField::H));
  ExactMatrix m(1, 1, ScalarField::C);
  CHECK_THROWS_AS(m.set(0, 0, Quaternion::unit_j()), InvalidInput);
}

TEST_CASE("rank over the three fields") {
  CHECK(rank(ExactMatrix(3, 3, ScalarField::R)) == 0);
  CHECK(rank(ExactMatrix::identity(4, ScalarField::R)) == 4);
  CHECK(rank(from_rows({{1, 2}, {2, 4}}, ScalarField::R)) == 1);
  CHECK(rank(from_rows({{1, 2}, {2, 5}}, ScalarField::R)) == 2);

  ExactMatrix q(1, 2, ScalarField::H);
  q.set(0, 0, Quaternion::unit_j());
  q.set(0, 1, Quaternion::unit_k());
  CHECK(rank(q) == 1);

  ExactMatrix c(2, 2, ScalarField::C);
  c.set(0, 0, Quaternion(1));
  c.set(0, 1, Quaternion::unit_i());
  c.set(1, 0, Quaternion::unit_i());
  c.set(1, 1, -Quaternion(1));
  CHECK(rank(c) == 1);
}

TEST_CASE("real nullspace dimension") {
  CHECK(nullspace_dim_real(ExactMatrix(3, 3, ScalarField::R)) == 3);
  CHECK(nullspace_dim_real(ExactMatrix::identity(3, ScalarField::R)) == 0);
  CHECK(nullspace_dim_real(from_rows({{1, 1, 1}}, ScalarField::R)) == 2);
  CHECK(nullspace_dim_real(from_rows({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}}, ScalarField::R)) == 1);
  CHECK_THROWS_AS(nullspace_dim_real(ExactMatrix(1, 1, ScalarField::C)), PreconditionViolated);
}

TEST_CASE("rank plus nullity equals the number of columns") {
  const std::vector<ExactMatrix> samples = {
      from_rows({{1, 1, 1}, {1, 2, 4}, {0, 1, 3}}, ScalarField::R),
      from_rows({{2, -1, 0, 3}, {4, -2, 0, 6}}, ScalarField::R),
      from_rows({{0, 0}, {0, 0}, {5, 7}}, ScalarField::R),
  };
  for (const ExactMatrix& m : samples)
    CHECK(rank(m) + nullspace_dim_real(m) == m.cols());
}

TEST_CASE("signature of diagonal and antidiagonal forms") {
  CHECK(congruence_signature(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}, ScalarField::R)) ==
        std::pair<std::size_t, std::size_t>(2, 1));
  CHECK(congruence_signature(from_rows({{0, 1}, {1, 0}}, ScalarField::R)) ==
        std::pair<std::size_t, std::size_t>(1, 1));
  CHECK(congruence_signature(from_rows({{0, 0, 1}, {0, -1, 0}, {1, 0, 0}}, ScalarField::R)) ==
        std::pair<std::size_t, std::size_t>(1, 2));
  CHECK(congruence_signature(from_rows({{0, 0, 0}, {0, 2, 0}, {0, 0, 0}}, ScalarField::R)) ==
        std::pair<std::size_t, std::size_t>(1, 0));
}

TEST_CASE("signature over C and H uses the hermitian part") {
  ExactMatrix c(2, 2, ScalarField::C);
  c.set(0, 1, -Quaternion::unit_i());
  c.set(1, 0, Quaternion::unit_i());
  CHECK(congruence_signature(c) == std::pair<std::size_t, std::size_t>(1, 1));

  ExactMatrix h(2, 2, ScalarField::H);
  h.set(0, 1, Quaternion::unit_j());
  h.set(1, 0, -Quaternion::unit_j());
  CHECK(congruence_signature(h) == std::pair<std::size_t, std::size_t>(1, 1));
}

TEST_CASE("signature rejects non-self-adjoint input") {
  CHECK_THROWS_AS(congruence_signature(from_rows({{0, 1}, {0, 0}}, ScalarField::R)),
                  NotSelfAdjoint);
  CHECK_THROWS_AS(congruence_signature(from_rows({{1, 2, 3}}, ScalarField::R)), NotSelfAdjoint);
}

TEST_CASE("signature is a congruence invariant") {
  const ExactMatrix g = from_rows({{0, 0, 1}, {0, -1, 0}, {1, 0, 0}}, ScalarField::R);
  const std::vector<ExactMatrix> changes = {
      from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}, ScalarField::R),
      from_rows({{1, 0, 2}, {0, 1, 0}, {0, 0, 1}}, ScalarField::R),
      from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, ScalarField::R),
      from_rows({{2, 0, 0}, {3, 1, 0}, {-1, 4, 1}}, ScalarField::R),
  };
  const auto base = congruence_signature(g);
  for (const ExactMatrix& p : changes)
    CHECK(congruence_signature(p.conjugate_transpose() * g * p) == base);
}

TEST_CASE("matrix algebra basics") {
  const ExactMatrix a = from_rows({{1, 2}, {3, 4}}, ScalarField::R);
  const ExactMatrix b = from_rows({{0, 1}, {1, 0}}, ScalarField::R);
  CHECK(a * b == from_rows({{2, 1}, {4, 3}}, ScalarField::R));
  CHECK(a + b - a == b);
  CHECK(a.transpose() == from_rows({{1, 3}, {2, 4}}, ScalarField::R));
  CHECK((a - a).is_zero());
  CHECK_THROWS_AS(a * from_rows({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}, ScalarField::R),
                  ShapeMismatch);

  ExactMatrix j(1, 1, ScalarField::H);
  j.set(0, 0, Quaternion::unit_j());
  CHECK(j.conjugate_transpose() * j == ExactMatrix::identity(1, ScalarField::H));
  CHECK_THROWS_AS(j.with_field(ScalarField::C), InvalidInput);
  CHECK_THROWS_AS(a.scaled(Quaternion::unit_i()), InvalidInput);
}

TEST_CASE("quaternion scaling stays in the declared field") {
  ExactMatrix h(1, 1, ScalarField::H);
  h.set(0, 0, Quaternion(2));
  const ExactMatrix scaled = h.scaled(Quaternion::unit_k());
  CHECK(scaled.at(0, 0) == Quaternion{0, 0, 0, 2});
}
