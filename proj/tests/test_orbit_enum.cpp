#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "nilorb/orbit_enum.hpp"

using namespace nilorb;

namespace {

std::vector<std::string> orbit_texts(const RealForm& form) {
  std::vector<std::string> out;
  for (const OrbitClass& orbit : enumerate_orbits(form)) out.push_back(orbit.orbit_text());
  return out;
}

}  // namespace

TEST_CASE("form construction and validation") {
  CHECK(RealForm::sl_r(3).name() == "sl(3,R)");
  CHECK(RealForm::sl_h(2).name() == "sl(2,H)");
  CHECK(RealForm::su(2, 1).name() == "su(2,1)");
  CHECK(RealForm::so(3, 2).name() == "so(3,2)");
  CHECK(RealForm::so_star(4).name() == "so*(8)");
  CHECK(RealForm::sp_r(2).name() == "sp(2,R)");
  CHECK(RealForm::sp_pq(1, 1).name() == "sp(1,1)");

  CHECK_THROWS_AS(RealForm::sl_r(1), InvalidForm);
  CHECK_THROWS_AS(RealForm::sl_h(1), InvalidForm);
  CHECK_THROWS_AS(RealForm::su(0, 2), InvalidForm);
  CHECK_THROWS_AS(RealForm::so(1, 1), InvalidForm);
  CHECK_THROWS_AS(RealForm::so(2, 2), InvalidForm);
  CHECK_THROWS_AS(RealForm::so_star(2), InvalidForm);
  CHECK_THROWS_AS(RealForm::sp_r(0), InvalidForm);
  CHECK_THROWS_AS(RealForm::sp_pq(1, 0), InvalidForm);
}

TEST_CASE("form attributes") {
  CHECK(RealForm::sl_r(3).matrix_size() == 3);
  CHECK(RealForm::sp_r(2).matrix_size() == 4);
  CHECK(RealForm::su(2, 1).matrix_size() == 3);
  CHECK(RealForm::so_star(5).matrix_size() == 5);

  CHECK(RealForm::so(3, 2).field() == ScalarField::R);
  CHECK(RealForm::su(1, 1).field() == ScalarField::C);
  CHECK(RealForm::sp_pq(1, 1).field() == ScalarField::H);

  CHECK(RealForm::so(3, 2).epsilon() == 1);
  CHECK(RealForm::sp_r(2).epsilon() == -1);
  CHECK(RealForm::so_star(3).epsilon() == -1);
  CHECK_THROWS_AS(RealForm::sl_r(2).epsilon(), NoFormForThisAlgebra);

  CHECK(RealForm::su(2, 1).uses_pq());
  CHECK_FALSE(RealForm::sp_r(2).uses_pq());
  CHECK_FALSE(RealForm::sl_r(2).is_signed());
  CHECK(RealForm::sp_r(2).is_signed());
  CHECK_THROWS_AS(RealForm::su(2, 1).n(), PreconditionViolated);
  CHECK_THROWS_AS(RealForm::sl_r(2).p(), PreconditionViolated);
}

TEST_CASE("orbit counts for small forms") {
  CHECK(orbit_texts(RealForm::sl_r(2)) ==
        std::vector<std::string>{"1^2", "2^1:1", "2^1:2"});
  CHECK(orbit_texts(RealForm::sl_r(3)).size() == 3);
  CHECK(orbit_texts(RealForm::sl_h(3)).size() == 3);
  CHECK(orbit_texts(RealForm::so(2, 1)) ==
        std::vector<std::string>{"1+^2,1-^1", "3-^1:1", "3-^1:2"});
  CHECK(orbit_texts(RealForm::so(3, 2)).size() == 8);
  CHECK(orbit_texts(RealForm::sp_r(2)).size() == 8);
  CHECK(orbit_texts(RealForm::su(1, 1)).size() == 3);
  CHECK(orbit_texts(RealForm::sp_pq(1, 1)).size() == 2);
  CHECK(orbit_texts(RealForm::so_star(3)).size() == 4);
}

TEST_CASE("orbit classes expand the parameter set by fiber size") {
  for (const RealForm& form :
       {RealForm::sp_r(3), RealForm::so(3, 2), RealForm::so(3, 3), RealForm::su(2, 2),
        RealForm::so_star(4), RealForm::sl_r(4), RealForm::sp_pq(2, 1)}) {
    const auto orbits = enumerate_orbits(form);
    int zero_count = 0;
    for (const OrbitClass& orbit : orbits) {
      CHECK(orbit.partition.n() == form.matrix_size());
      CHECK(orbit.fiber_index >= 1);
      CHECK(orbit.fiber_index <= orbit.fiber_size);
      CHECK(orbit.diagram.has_value() == form.is_signed());
      if (orbit.is_zero) {
        ++zero_count;
        CHECK(orbit.partition.all_ones());
        CHECK(orbit.fiber_size == 1);
      }
    }
    CHECK(zero_count == 1);

    std::vector<std::string> texts;
    for (const OrbitClass& orbit : orbits) texts.push_back(orbit.orbit_text());
    std::sort(texts.begin(), texts.end());
    CHECK(std::adjacent_find(texts.begin(), texts.end()) == texts.end());
  }
}

TEST_CASE("very even partitions give four so orbits") {
  const auto orbits = enumerate_orbits(RealForm::so(4, 4));
  int very_even_classes = 0;
  for (const OrbitClass& orbit : orbits)
    if (orbit.diagram->to_text() == "2+^4") {
      ++very_even_classes;
      CHECK(orbit.fiber_size == 4);
    }
  CHECK(very_even_classes == 4);
}

TEST_CASE("parse orbit accepts what enumerate produced") {
  for (const RealForm& form :
       {RealForm::sl_r(3), RealForm::su(2, 1), RealForm::so(3, 2), RealForm::sp_r(2),
        RealForm::so_star(3), RealForm::sp_pq(1, 2), RealForm::sl_h(2)}) {
    for (const OrbitClass& orbit : enumerate_orbits(form)) {
      const std::string text =
          form.is_signed() ? orbit.diagram->to_text() : orbit.partition.to_text();
      const OrbitClass parsed = parse_orbit(form, text, orbit.fiber_index);
      CHECK(parsed.orbit_text() == orbit.orbit_text());
      CHECK(parsed.fiber_size == orbit.fiber_size);
      CHECK(parsed.is_zero == orbit.is_zero);
    }
  }
}

TEST_CASE("parse orbit rejects diagrams outside the parameter set") {
  CHECK_THROWS_AS(parse_orbit(RealForm::su(2, 2), "2+^1"), NotInParamSet);
  CHECK_THROWS_AS(parse_orbit(RealForm::su(2, 2), "3+^1,1-^1"), NotInParamSet);
  CHECK_THROWS_AS(parse_orbit(RealForm::sp_pq(1, 1), "2-^1"), NotInParamSet);
  CHECK_THROWS_AS(parse_orbit(RealForm::so(3, 2), "2+^1,2-^1,1+^1"), NotInParamSet);
  CHECK_THROWS_AS(parse_orbit(RealForm::sp_r(2), "1+^3,1-^1"), NotInParamSet);
  CHECK_THROWS_AS(parse_orbit(RealForm::so_star(3), "1+^2,1-^1"), NotInParamSet);
  CHECK_THROWS_AS(parse_orbit(RealForm::sl_r(3), "2^2"), NotInParamSet);
}

TEST_CASE("parse orbit checks the fiber index") {
  CHECK(parse_orbit(RealForm::sl_r(2), "2", 2).fiber_index == 2);
  CHECK_THROWS_AS(parse_orbit(RealForm::sl_r(2), "2", 3), BadFiberIndex);
  CHECK_THROWS_AS(parse_orbit(RealForm::sl_r(2), "2", 0), BadFiberIndex);
  CHECK_THROWS_AS(parse_orbit(RealForm::sl_r(2), "1^2", 2), BadFiberIndex);
  CHECK_THROWS_AS(parse_orbit(RealForm::so(2, 1), "3-^1", 3), BadFiberIndex);
}

TEST_CASE("signed forms take diagram text, sl forms take partitions") {
  const OrbitClass so_orbit = parse_orbit(RealForm::so(2, 1), "3-^1", 2);
  CHECK(so_orbit.diagram->to_text() == "3-^1");
  CHECK(so_orbit.orbit_text() == "3-^1:2");

  const OrbitClass sl_orbit = parse_orbit(RealForm::sl_h(3), "1^1,2^1");
  CHECK_FALSE(sl_orbit.diagram.has_value());
  CHECK(sl_orbit.orbit_text() == "1^1,2^1");
  CHECK_THROWS_AS(parse_orbit(RealForm::sl_r(3), "2+^1,1-^1"), ParseError);
}
