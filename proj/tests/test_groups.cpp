#include <doctest.h>

#include <set>

#include "tamecoh/error.hpp"
#include "tamecoh/groups.hpp"

using namespace tamecoh;

namespace {

template <typename Fn>
void for_each_presentation(Nat m_max, Nat n_max, Fn fn) {
  for (Nat m = 1; m <= m_max; ++m) {
    for (Nat n = 1; n <= n_max; ++n) {
      for (Nat a = 1; a <= m; ++a) {
        if (gcd(a, m) != 1 || pow_mod(a, n, m) != 1 % m) continue;
        for (Nat s = 0; s < m; ++s) {
          if ((a - 1) * s % m != 0) continue;
          fn(MetacyclicPresentation::make(m, n, a, s));
        }
      }
    }
  }
}

}  // namespace

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(MetacyclicPresentation::make(4, 2, 2, 0), InputError);
  CHECK_THROWS_AS(MetacyclicPresentation::make(4, 2, 3, 1), InputError);
  CHECK_THROWS_AS(MetacyclicPresentation::make(7, 2, 2, 0), InputError);
  CHECK_THROWS_AS(MetacyclicPresentation::make(0, 2, 1, 0), InputError);
  CHECK(MetacyclicPresentation::make(4, 2, 3, 6).s() == 2);
}

TEST_CASE("normal form products") {
  const auto d8 = MetacyclicPresentation::make(4, 2, 3, 0);
  const auto h8 = MetacyclicPresentation::make(4, 2, 3, 2);
  CHECK(multiply(d8, {0, 1}, {1, 0}) == GroupElement{3, 1});
  CHECK(multiply(h8, {0, 1}, {0, 1}) == GroupElement{2, 0});
  CHECK(multiply(d8, {0, 1}, {0, 1}) == GroupElement{0, 0});
  CHECK(power(h8, {1, 1}, 4) == GroupElement{0, 0});
  CHECK(element_order(h8, {1, 1}) == 4);
  CHECK(element_order(d8, {1, 1}) == 2);

  SUBCASE("group axioms and defining relations") {
    for_each_presentation(20, 20, [](const MetacyclicPresentation& p) {
      if (p.order() > 48) return;
      const auto els = elements(p);
      REQUIRE(els.size() == p.order());
      const GroupElement one{0, 0};
      const GroupElement tau{1 % p.m(), 0};
      // For n = 1 the normal form identifies sigma~ with tau^s.
      const GroupElement sig = p.n() == 1 ? GroupElement{p.s(), 0} : GroupElement{0, 1};
      CHECK(power(p, tau, p.m()) == one);
      CHECK(power(p, sig, p.n()) == power(p, tau, p.s()));
      CHECK(multiply(p, multiply(p, sig, tau), inverse(p, sig)) == power(p, tau, p.a()));
      for (const auto& g : els) {
        CHECK(multiply(p, g, inverse(p, g)) == one);
        CHECK(multiply(p, one, g) == g);
        for (const auto& h : els) {
          const auto gh = multiply(p, g, h);
          for (const auto& k : els) {
            if (multiply(p, gh, k) != multiply(p, g, multiply(p, h, k))) {
              FAIL("associativity fails for m=" << p.m() << " n=" << p.n() << " a=" << p.a()
                                                << " s=" << p.s());
            }
          }
        }
      }
    });
  }
}

TEST_CASE("order 8 census") {
  const auto d8 = structure_report(MetacyclicPresentation::make(4, 2, 3, 0));
  CHECK(d8.name == "dihedral-8");
  CHECK(d8.involution_count == 5);
  CHECK(d8.center_order == 2);
  CHECK_FALSE(d8.is_abelian);

  const auto h8 = structure_report(MetacyclicPresentation::make(4, 2, 3, 2));
  CHECK(h8.name == "quaternion-8");
  CHECK(h8.involution_count == 1);
  CHECK(h8.exponent == 4);

  const auto c8 = structure_report(MetacyclicPresentation::make(4, 2, 1, 1));
  CHECK(c8.name == "cyclic");
  CHECK(c8.exponent == 8);

  const auto c4c2 = structure_report(MetacyclicPresentation::make(4, 2, 1, 0));
  CHECK(c4c2.name == "abelian(2|4)");
  CHECK(c4c2.involution_count == 3);

  CHECK(is_isomorphic(MetacyclicPresentation::make(2, 4, 1, 0),
                      MetacyclicPresentation::make(4, 2, 1, 0)));
  CHECK(is_isomorphic(MetacyclicPresentation::make(2, 4, 1, 1),
                      MetacyclicPresentation::make(4, 2, 1, 1)));
  CHECK_FALSE(is_isomorphic(MetacyclicPresentation::make(4, 2, 3, 0),
                            MetacyclicPresentation::make(4, 2, 3, 2)));
}

TEST_CASE("twisted groups of order l^3") {
  const auto g = structure_report(MetacyclicPresentation::make(9, 3, 4, 0));
  CHECK(g.order == 27);
  CHECK(g.exponent == 9);
  CHECK(g.name == "twisted-l²⋊l");
  CHECK(is_isomorphic(MetacyclicPresentation::make(9, 3, 4, 0),
                      MetacyclicPresentation::make(9, 3, 4, 3)));
  CHECK(is_isomorphic(MetacyclicPresentation::make(9, 3, 4, 0),
                      MetacyclicPresentation::make(9, 3, 7, 6)));
}

TEST_CASE("structure criteria against enumeration") {
  for_each_presentation(12, 12, [](const MetacyclicPresentation& p) {
    const auto r = structure_report(p);
    const auto els = elements(p);
    bool commutative = true;
    Nat exponent = 1;
    Nat max_order = 1;
    for (const auto& g : els) {
      const Nat o = element_order(p, g);
      exponent = lcm(exponent, o);
      max_order = std::max(max_order, o);
      for (const auto& h : els) {
        if (multiply(p, g, h) != multiply(p, h, g)) commutative = false;
      }
    }
    CHECK(r.is_abelian == commutative);
    CHECK(r.is_cyclic == (max_order == p.order()));
    CHECK(r.exponent == exponent);
  });
}

TEST_CASE("bounds") {
  CHECK_THROWS_WITH_AS(structure_report(MetacyclicPresentation::make(101, 100, 1, 0)),
                       "enumeration bound exceeded", InputError);
  CHECK_THROWS_AS(is_isomorphic(MetacyclicPresentation::make(32, 32, 1, 0),
                                MetacyclicPresentation::make(32, 32, 1, 0)),
                  InputError);
}

TEST_CASE("pullback splitting") {
  CHECK_FALSE(pullback_splits(MetacyclicPresentation::make(4, 2, 3, 2), 1));
  CHECK(pullback_splits(MetacyclicPresentation::make(4, 2, 3, 2), 2));
  CHECK(pullback_splits(MetacyclicPresentation::make(4, 2, 3, 0), 1));
  CHECK_FALSE(pullback_splits(MetacyclicPresentation::make(4, 2, 1, 1), 2));
  CHECK(pullback_splits(MetacyclicPresentation::make(4, 2, 1, 1), 4));
  CHECK_THROWS_AS(pullback_splits(MetacyclicPresentation::make(4, 2, 1, 1), 0), InputError);
}
