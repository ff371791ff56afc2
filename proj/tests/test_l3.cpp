#include <doctest.h>

#include "tamecoh/error.hpp"
#include "tamecoh/l3.hpp"

using namespace tamecoh;

TEST_CASE("valuation and input checks") {
  CHECK(l_adic_valuation(6, 3) == 1);
  CHECK(l_adic_valuation(8, 2) == 3);
  CHECK(l_adic_valuation(5, 3) == 0);
  CHECK_THROWS_WITH_AS(classify_l3(LocalField::make(4), 4), "l is not prime", InputError);
  CHECK_THROWS_WITH_AS(classify_l3(LocalField::make(9), 3), "l equals p", InputError);
}

TEST_CASE("degree 27") {
  for (Nat q : {4, 7}) {
    const auto r = classify_l3(LocalField::make(q), 3);
    CHECK(r.v_l_q_minus_1 == 1);
    REQUIRE(r.feasible);
    REQUIRE(r.shape);
    CHECK(*r.shape == std::pair<Nat, Nat>{9, 3});
    CHECK(r.line_count == 9);
    CHECK(r.orbit_count == 5);
    REQUIRE(r.extensions.size() == 3);
    for (Nat k = 0; k < 3; ++k) {
      const auto& ext = r.extensions[k];
      CHECK(ext.x == 3 * k);
      CHECK(ext.order == 27);
      CHECK(ext.exponent == 9);
      CHECK(ext.group == "twisted-l²⋊l");
      CHECK(ext.class_order == 1);
      CHECK(ext.split_degree == 1);
    }
    CHECK(r.closures.size() == 2);
  }
}

TEST_CASE("degree 8") {
  for (Nat q : {3, 7, 11}) {
    const auto r = classify_l3(LocalField::make(q), 2);
    REQUIRE(r.feasible);
    REQUIRE(r.extensions.size() == 2);
    CHECK(r.extensions[0].group == "dihedral-8");
    CHECK(r.extensions[0].involution_count == 5);
    CHECK(r.extensions[1].group == "quaternion-8");
    CHECK(r.extensions[1].involution_count == 1);
    CHECK(r.extensions[1].split_degree == 2);

    REQUIRE(r.closures.size() == 1);
    const auto& note = r.closures[0];
    CHECK(note.orbit == std::vector<Nat>{1, 3});
    CHECK(note.closure_degree == 2);
    CHECK(note.closure_level == 4);
    CHECK(note.closure_line == 2);
    CHECK(note.closure_class_order == 2);
    CHECK(note.split_level == 8);
  }
}

TEST_CASE("infeasible fields") {
  const auto r = classify_l3(LocalField::make(5), 2);
  CHECK(r.v_l_q_minus_1 == 2);
  CHECK_FALSE(r.feasible);
  CHECK(r.extensions.empty());
  CHECK_FALSE(r.shape);

  const auto r2 = classify_l3(LocalField::make(2), 3);
  CHECK(r2.v_l_q_minus_1 == 0);
  CHECK_FALSE(r2.feasible);
}

TEST_CASE("abelian shapes") {
  const auto r = classify_l3(LocalField::make(4), 3, true);
  REQUIRE(r.abelian_shapes.size() == 4);
  CHECK(r.abelian_shapes[0].e == 1);
  CHECK(r.abelian_shapes[0].f == 27);
  CHECK(r.abelian_shapes[0].galoisian_count == 1);
  CHECK(r.abelian_shapes[0].abelian_count == 1);
  CHECK(r.abelian_shapes[1].e == 3);
  CHECK(r.abelian_shapes[1].f == 9);
  CHECK(r.abelian_shapes[3].e == 27);
  CHECK(r.abelian_shapes[3].galoisian_count == 0);
  for (const auto& shape : r.abelian_shapes) CHECK(shape.abelian_count <= shape.galoisian_count);
  CHECK(classify_l3(LocalField::make(4), 3).abelian_shapes.empty());
}
