#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <tuple>

#include "tamecoh/error.hpp"
#include "tamecoh/report.hpp"

using namespace tamecoh;
using nlohmann::json;

namespace {

TameShape shape(Nat q, Nat e, Nat f) { return TameShape::make(LocalField::make(q), e, f); }

}  // namespace

TEST_CASE("prime powers") {
  CHECK(prime_powers_up_to(9) == std::vector<Nat>{2, 3, 4, 5, 7, 8, 9});
  CHECK(prime_powers_up_to(1).empty());
  CHECK(prime_powers_up_to(49).size() == 23);
}

TEST_CASE("classify report") {
  const auto r = classify(shape(3, 4, 2));
  CHECK(r.g == 2);
  CHECK(r.g_f == 4);
  CHECK_FALSE(r.abelian);
  REQUIRE(r.orbits.size() == 3);
  CHECK(r.galoisian_count() == 2);
  CHECK(r.orbits[0].group == "dihedral-8");
  CHECK(r.orbits[1].members == std::vector<Nat>{1, 3});
  CHECK_FALSE(r.orbits[1].group);
  CHECK(r.orbits[1].closure_degree == 2);
  CHECK(r.orbits[2].group == "quaternion-8");
  CHECK(r.orbits[2].split_degree == 2);

  CHECK(classify(shape(5, 4, 1)).abelian);
  CHECK(classify(shape(3, 4, 1)).galoisian_count() == 0);
}

TEST_CASE("classify json") {
  const auto doc = json::parse(to_json(classify(shape(7, 4, 2))));
  CHECK(doc["q"] == 7);
  CHECK(doc["line_count"] == 4);
  CHECK(doc["orbit_count"] == 3);
  CHECK(doc["galoisian_count"] == 2);
  CHECK(doc["orbits"][1]["group"].is_null());
  CHECK(doc["orbits"][1]["split_degree"].is_null());
  CHECK(doc["orbits"][2]["s"] == 2);
  CHECK(doc["orbits"][2]["class_order"] == 2);
}

TEST_CASE("group names above the enumeration bound") {
  CHECK(group_name(MetacyclicPresentation::make(101, 101, 1, 1)) == "cyclic");
  CHECK(group_name(MetacyclicPresentation::make(101, 101, 1, 0)) == "abelian(101|101)");
  CHECK(group_name(MetacyclicPresentation::make(4, 2, 3, 2)) == "quaternion-8");
}

TEST_CASE("atlas csv") {
  const auto rows = atlas(9, 12, 4);
  std::ostringstream first, second;
  write_atlas_csv(first, rows);
  write_atlas_csv(second, atlas(9, 12, 4));
  CHECK(first.str() == second.str());
  const std::string text = first.str();
  CHECK(text.rfind("q,e,f,g,g_f,orbit_count,galoisian_count,abelian,orbits\n", 0) == 0);
  CHECK(text.find('\r') == std::string::npos);
  CHECK(text.find("\n3,4,2,2,4,3,2,false,0:1:1:1:dihedral-8;1:2:2:-:-;2:1:1:2:quaternion-8\n") !=
        std::string::npos);

  Nat expected = 0;
  for (Nat q : prime_powers_up_to(9)) {
    const Nat p = factor_prime_power(q)->p;
    for (Nat e = 1; e <= 12; ++e) expected += gcd(e, p) == 1 ? 4 : 0;
  }
  CHECK(rows.size() == expected);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const auto key = [](const ClassifyReport& r) { return std::tuple(r.q, r.e, r.f); };
    CHECK(key(rows[k - 1]) < key(rows[k]));
  }
}

TEST_CASE("cohomology json") {
  const auto doc = json::parse(cohomology_json(CyclicAction::make(4, 2, 1)));
  CHECK(doc["h1_order"] == 2);
  CHECK(doc["h2_order"] == 2);
  CHECK(doc["h2_order_bruteforce"] == 2);
  CHECK(doc["classes"][1]["splitting_multiplier"] == 4);

  const auto big = json::parse(cohomology_json(CyclicAction::make(1000, 7, 1)));
  CHECK(big["h2_order_bruteforce"].is_null());
  CHECK(big["h2_order"] == 1);
}

TEST_CASE("mass and l3 json") {
  const auto mass = json::parse(to_json(tame_mass(LocalField::make(3), 4), Rational(1, 3)));
  CHECK(mass["subfield_count_sum"] == "4/1");
  CHECK(mass["wild_reduction"] == "4/3");
  const auto l3 = json::parse(to_json(classify_l3(LocalField::make(4), 3)));
  CHECK(l3["feasible"] == true);
  CHECK(l3["extensions"].size() == 3);
}
