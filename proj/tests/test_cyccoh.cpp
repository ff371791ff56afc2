#include <doctest.h>

#include "tamecoh/cyccoh.hpp"
#include "tamecoh/error.hpp"
#include "tamecoh/groups.hpp"

using namespace tamecoh;

namespace {

template <typename Fn>
void for_each_action(Nat m_max, Nat n_max, Fn fn) {
  for (Nat m = 1; m <= m_max; ++m) {
    for (Nat n = 1; n <= n_max; ++n) {
      for (Nat a = 1; a <= m; ++a) {
        if (gcd(a, m) != 1 || pow_mod(a, n, m) != 1 % m) continue;
        fn(CyclicAction::make(m, n, a));
      }
    }
  }
}

// |Ker(a-1)| / |Im S| by direct enumeration of Z/m.
Nat h2_by_counting(const CyclicAction& act) {
  const Nat m = act.m();
  Nat ker = 0;
  std::vector<char> image(m, 0);
  Nat s = 0;
  for (Nat k = 0, pw = 1 % m; k < act.n(); ++k, pw = pw * act.a() % m) s = (s + pw) % m;
  for (Nat x = 0; x < m; ++x) {
    if ((act.a() - 1) * x % m == 0) ++ker;
    image[s * x % m] = 1;
  }
  Nat im = 0;
  for (char c : image) im += c;
  return ker / im;
}

}  // namespace

TEST_CASE("action validation") {
  CHECK_THROWS_AS(CyclicAction::make(0, 2, 1), InputError);
  CHECK_THROWS_AS(CyclicAction::make(4, 0, 1), InputError);
  CHECK_THROWS_AS(CyclicAction::make(4, 2, 2), InputError);  // not a unit
  CHECK_THROWS_AS(CyclicAction::make(7, 2, 3), InputError);  // 3^2 != 1 mod 7
  CHECK(CyclicAction::make(4, 2, 7).a() == 3);
  CHECK(CyclicAction::make(1, 5, 0).a() == 1);
}

TEST_CASE("norm_sum") {
  CHECK(norm_sum(CyclicAction::make(4, 2, 3)) == 0);
  CHECK(norm_sum(CyclicAction::make(9, 3, 4)) == 3);
  CHECK(norm_sum(CyclicAction::make(5, 1, 1)) == 1);
}

TEST_CASE("h1 and h2 orders") {
  CHECK(h1_order(CyclicAction::make(8, 2, 3)) == 1);
  CHECK(h1_order(CyclicAction::make(4, 2, 1)) == 2);
  CHECK(h1_order(CyclicAction::make(1, 5, 1)) == 1);

  CHECK(h2_order(CyclicAction::make(4, 2, 3)) == 2);
  CHECK(h2_order(CyclicAction::make(9, 3, 4)) == 1);
  CHECK(h2_order(CyclicAction::make(8, 2, 3)) == 1);

  SUBCASE("h1 = h2 and both match direct counting") {
    for_each_action(30, 30, [](const CyclicAction& act) {
      CHECK(h1_order(act) == h2_order(act));
      CHECK(h2_order(act) == h2_by_counting(act));
    });
  }
}

TEST_CASE("cocycle brute force") {
  CHECK(h2_order_bruteforce(CyclicAction::make(4, 2, 3)) == 2);
  CHECK(h2_order_bruteforce(CyclicAction::make(3, 3, 1)) == 3);
  CHECK(h2_order_bruteforce(CyclicAction::make(2, 2, 1)) == 2);
  CHECK_THROWS_WITH_AS(h2_order_bruteforce(CyclicAction::make(3, 4, 1)), "oracle too large",
                       InputError);
}

TEST_CASE("classes") {
  const auto d8 = CyclicAction::make(4, 2, 3);
  const auto c2 = make_class(d8, 2);
  CHECK(c2.rep == 2);
  CHECK(class_order(c2) == 2);
  CHECK(make_class(d8, 0).is_trivial());
  CHECK(class_order(make_class(d8, 0)) == 1);
  CHECK_THROWS_WITH_AS(make_class(d8, 1), "not a cocycle representative", InputError);

  const auto l3 = CyclicAction::make(9, 3, 4);
  CHECK(make_class(l3, 3).is_trivial());
  CHECK(class_order(make_class(l3, 3)) == 1);

  SUBCASE("well defined on cosets of Im S; order divides |H2|") {
    for_each_action(24, 12, [](const CyclicAction& act) {
      const Nat m = act.m();
      const Nat s = norm_sum(act);
      for (Nat x = 0; x < m; ++x) {
        if ((act.a() - 1) * x % m != 0) continue;
        const auto c = make_class(act, x);
        CHECK(h2_order(act) % class_order(c) == 0);
        for (Nat t = 0; t < m; ++t) CHECK(make_class(act, (x + s * t) % m) == c);
      }
    });
  }
}

TEST_CASE("inflation") {
  const auto c = make_class(CyclicAction::make(4, 2, 3), 2);
  const auto up = inflate(c, 2);
  CHECK(up.action == CyclicAction::make(4, 4, 3));
  CHECK(up.is_trivial());

  const auto c44 = make_class(CyclicAction::make(4, 4, 3), 2);
  const auto up2 = inflate(c44, 2);
  CHECK(up2.action == CyclicAction::make(4, 8, 3));
  CHECK(up2.is_trivial());

  CHECK(inflate(make_class(CyclicAction::make(9, 3, 4), 0), 5).is_trivial());
  CHECK_THROWS_AS(inflate(c, 0), InputError);

  SUBCASE("class order kills the class when Im S = 0") {
    for_each_action(24, 12, [](const CyclicAction& act) {
      if (norm_image_generator(act) != act.m()) return;
      for (Nat x = 0; x < act.m(); ++x) {
        if ((act.a() - 1) * x % act.m() != 0) continue;
        const auto c = make_class(act, x);
        CHECK(inflate(c, class_order(c)).is_trivial());
        CHECK(inflate(c, h2_order(act)).is_trivial());
        CHECK(splitting_multiplier(c) == class_order(c));
      }
    });
  }

  SUBCASE("class order need not kill the class when Im S != 0") {
    // Z/2 acting trivially on Z/4: the class of 1 has order 2, but its
    // inflation to Z/4 is the class of 2 in Z/4 / 4Z = Z/4.
    const auto act = CyclicAction::make(4, 2, 1);
    const auto c = make_class(act, 1);
    CHECK(class_order(c) == 2);
    CHECK(h2_order(act) == 2);
    CHECK(inflate(c, 2).rep == 2);
    CHECK_FALSE(inflate(c, 2).is_trivial());
    CHECK(splitting_multiplier(c) == 4);
  }

  SUBCASE("splitting multiplier matches the pulled-back group extension") {
    for_each_action(16, 8, [](const CyclicAction& act) {
      for (Nat x = 0; x < act.m(); ++x) {
        if ((act.a() - 1) * x % act.m() != 0) continue;
        const auto c = make_class(act, x);
        const Nat split = splitting_multiplier(c);
        CHECK(split % class_order(c) == 0);
        CHECK(inflate(c, split).is_trivial());
        const auto pres = MetacyclicPresentation::make(act.m(), act.n(), act.a(), x);
        CHECK(pullback_splits(pres, split));
        for (Nat smaller = 1; smaller < split; ++smaller) {
          CHECK_FALSE(inflate(c, smaller).is_trivial());
          CHECK_FALSE(pullback_splits(pres, smaller));
        }
      }
    });
  }
}
