#include <catch2/catch_amalgamated.hpp>

#include <utility>

#include "nilorb/orbit_enum.hpp"
#include "nilorb/realize.hpp"
#include "nilorb/structure.hpp"

using namespace nilorb;

namespace {

Quaternion rat(long num) { return Quaternion(num); }

}  // namespace

TEST_CASE("triple for a single part of size 2") {
  const MatrixRealization r = build_triple(ScalarField::R, Partition::parse("2"));
  REQUIRE(r.n == 2);
  REQUIRE(r.basis.size() == 2);
  CHECK(r.basis[0] == BasisLabel{2, 1, 0});
  CHECK(r.basis[1] == BasisLabel{2, 1, 1});

  CHECK(r.X.at(1, 0) == rat(1));
  CHECK(r.X.at(0, 1) == rat(0));
  CHECK(r.H.at(0, 0) == rat(-1));
  CHECK(r.H.at(1, 1) == rat(1));
  CHECK(r.Y.at(0, 1) == rat(1));
  CHECK(r.Y.at(1, 0) == rat(0));
}

TEST_CASE("lowering coefficients grow quadratically") {
  const MatrixRealization r = build_triple(ScalarField::R, Partition::parse("3"));
  CHECK(r.Y.at(0, 1) == rat(2));
  CHECK(r.Y.at(1, 2) == rat(2));
  CHECK(r.H.at(0, 0) == rat(-2));
  CHECK(r.H.at(1, 1) == rat(0));
  CHECK(r.H.at(2, 2) == rat(2));
}

TEST_CASE("basis blocks are ordered by part size") {
  const MatrixRealization r = build_triple(ScalarField::R, Partition::parse("1^2,2^1"));
  REQUIRE(r.n == 4);
  CHECK(r.basis[0] == BasisLabel{1, 1, 0});
  CHECK(r.basis[1] == BasisLabel{1, 2, 0});
  CHECK(r.basis[2] == BasisLabel{2, 1, 0});
  CHECK(r.basis[3] == BasisLabel{2, 1, 1});
  for (int i = 0; i < 4; ++i) {
    const int expect[] = {0, 0, -1, 1};
    CHECK(r.H.at(i, i) == rat(expect[i]));
  }
}

TEST_CASE("bracket relations hold for every field") {
  for (const ScalarField field : {ScalarField::R, ScalarField::C, ScalarField::H}) {
    const MatrixRealization r = build_triple(field, Partition::parse("1^1,2^1,3^1"));
    const ExactMatrix two_x = r.X.scaled(rat(2));
    const ExactMatrix two_y = r.Y.scaled(rat(2));
    CHECK(r.H * r.X - r.X * r.H == two_x);
    CHECK(r.H * r.Y - r.Y * r.H == ExactMatrix(6, 6, field) - two_y);
    CHECK(r.X * r.Y - r.Y * r.X == r.H);
  }
}

TEST_CASE("powers of x have the predicted ranks") {
  const MatrixRealization r = build_triple(ScalarField::R, Partition::parse("2^2,4^1"));
  ExactMatrix power = ExactMatrix::identity(8, ScalarField::R);
  const int expected[] = {8, 5, 2, 1, 0};
  for (int k = 0; k <= 4; ++k) {
    CHECK(rank(power) == static_cast<std::size_t>(expected[k]));
    power = power * r.X;
  }
}

TEST_CASE("invariant form for an odd orthogonal part") {
  const OrbitClass orbit = parse_orbit(RealForm::so(1, 2), "3+^1");
  const MatrixRealization r = realize_orbit(orbit);
  REQUIRE(r.G.has_value());
  const ExactMatrix& g = *r.G;
  CHECK(g.at(0, 2) == rat(1));
  CHECK(g.at(1, 1) == rat(-1));
  CHECK(g.at(2, 0) == rat(1));
  CHECK(g.at(0, 0) == rat(0));
  CHECK(congruence_signature(g) == std::pair<std::size_t, std::size_t>(1, 2));
}

TEST_CASE("invariant form for an even unitary part") {
  const MatrixRealization r = realize_orbit(parse_orbit(RealForm::su(1, 1), "2+^1"));
  REQUIRE(r.G.has_value());
  CHECK(r.G->at(0, 1) == -Quaternion::unit_i());
  CHECK(r.G->at(1, 0) == Quaternion::unit_i());
  CHECK(congruence_signature(*r.G) == std::pair<std::size_t, std::size_t>(1, 1));
}

TEST_CASE("invariant form for an even symplectic part") {
  const MatrixRealization r = realize_orbit(parse_orbit(RealForm::sp_r(1), "2+^1"));
  REQUIRE(r.G.has_value());
  CHECK(r.G->at(0, 1) == rat(1));
  CHECK(r.G->at(1, 0) == rat(-1));
  CHECK((r.G->conjugate_transpose() + *r.G).is_zero());
}

TEST_CASE("form symmetry and invariance across the signed families") {
  for (const RealForm& form : {RealForm::so(3, 2), RealForm::su(2, 1), RealForm::sp_pq(1, 1),
                               RealForm::so_star(3), RealForm::sp_r(2)}) {
    for (const OrbitClass& orbit : enumerate_orbits(form)) {
      if (orbit.fiber_index != 1) continue;
      const MatrixRealization r = realize_orbit(orbit);
      REQUIRE(r.G.has_value());
      const ExactMatrix& g = *r.G;
      const int eps = form.epsilon();
      const ExactMatrix sigma_gt = g.conjugate_transpose();
      CHECK(sigma_gt == (eps == 1 ? g : g.scaled(rat(-1))));
      for (const ExactMatrix* m : {&r.X, &r.H, &r.Y})
        CHECK((m->conjugate_transpose() * g + g * *m).is_zero());
    }
  }
}

TEST_CASE("signature of the form matches the signed boxes") {
  for (const RealForm& form : {RealForm::so(4, 3), RealForm::su(2, 2), RealForm::sp_pq(2, 1)}) {
    for (const OrbitClass& orbit : enumerate_orbits(form)) {
      if (orbit.fiber_index != 1) continue;
      const MatrixRealization r = realize_orbit(orbit);
      CHECK(congruence_signature(*r.G) ==
            std::pair<std::size_t, std::size_t>(form.p(), form.q()));
    }
  }
}

TEST_CASE("gram matrix preconditions") {
  CHECK_THROWS_AS(gram_matrix(ScalarField::R, 2, SignedDiagram::parse("3+^1")),
                  InvalidInput);
  CHECK_THROWS_AS(gram_matrix(ScalarField::C, -1, SignedDiagram::parse("2+^1")),
                  InvalidInput);
  CHECK_THROWS_AS(gram_matrix(ScalarField::R, 1, SignedDiagram::parse("2+^1,2-^1")),
                  PreconditionViolated);
  CHECK_THROWS_AS(gram_matrix(ScalarField::R, -1, SignedDiagram::parse("3+^1,1+^1")),
                  PreconditionViolated);
}

TEST_CASE("sl realizations carry no form") {
  const MatrixRealization r = realize_orbit(parse_orbit(RealForm::sl_r(3), "3^1"));
  CHECK_FALSE(r.G.has_value());
  CHECK_FALSE(r.diagram.has_value());
  REQUIRE(r.form.has_value());
  CHECK(r.form->name() == "sl(3,R)");
  CHECK(r.field == ScalarField::R);

  const MatrixRealization h = realize_orbit(parse_orbit(RealForm::sl_h(2), "2^1"));
  CHECK(h.field == ScalarField::H);
  CHECK_FALSE(h.G.has_value());
}

TEST_CASE("centralizer dimension agrees with the factor tables") {
  CHECK(centralizer_dim(realize_orbit(parse_orbit(RealForm::sl_r(3), "3^1"))) == 0);
  CHECK(centralizer_dim(realize_orbit(parse_orbit(RealForm::su(1, 1), "2+^1"))) == 0);
  CHECK(centralizer_dim(realize_orbit(parse_orbit(RealForm::so(3, 2), "2+^2,1+^1"))) == 3);
  CHECK(centralizer_dim(realize_orbit(parse_orbit(RealForm::sp_pq(1, 1), "2+^1"))) == 1);
  CHECK(centralizer_dim(realize_orbit(parse_orbit(RealForm::sl_h(3), "1^1,2^1"))) == 7);
  CHECK(centralizer_dim(realize_orbit(parse_orbit(RealForm::so_star(3), "2+^1,1+^1"))) == 4);

  for (const RealForm& form : {RealForm::sp_r(2), RealForm::su(2, 1)})
    for (const OrbitClass& orbit : enumerate_orbits(form)) {
      if (orbit.fiber_index != 1) continue;
      CHECK(centralizer_dim(realize_orbit(orbit)) == centralizer_structure(orbit).dim);
    }
}

TEST_CASE("verification report") {
  MatrixRealization good = realize_orbit(parse_orbit(RealForm::so(2, 1), "3-^1"));
  const CheckReport report = verify_realization(good);
  CHECK(report.ok());
  CHECK(report.items.size() >= 7);
  for (const CheckItem& item : report.items) CHECK(item.pass);

  MatrixRealization bad = std::move(good);
  bad.H.set(0, 0, rat(5));
  CHECK_FALSE(verify_realization(bad).ok());
}

TEST_CASE("json export shape") {
  const MatrixRealization r = realize_orbit(parse_orbit(RealForm::su(1, 1), "2+^1"));
  const auto j = r.to_json();
  CHECK(j["field"] == "C");
  CHECK(j["n"] == 2);
  CHECK(j["basis"].size() == 2);
  CHECK(j["basis"][0]["d"] == 2);
  CHECK(j["basis"][0]["l"] == 0);
  CHECK(j["X"].size() == 2);
  CHECK(j["X"][1][0] == nlohmann::ordered_json::array({"1", "0", "0", "0"}));
  CHECK(j.contains("G"));
  CHECK(j["G"][0][1] == nlohmann::ordered_json::array({"0", "-1", "0", "0"}));
  CHECK(j["diagram"]["parts"][0]["d"] == 2);
  CHECK(j["form"] == "su(1,1)");

  const auto sl = realize_orbit(parse_orbit(RealForm::sl_r(2), "2")).to_json();
  CHECK_FALSE(sl.contains("G"));
  CHECK_FALSE(sl.contains("diagram"));
}
