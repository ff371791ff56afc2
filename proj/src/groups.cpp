#include "tamecoh/groups.hpp"

#include <algorithm>
#include <map>

#include "tamecoh/error.hpp"

namespace tamecoh {

namespace {

std::string prime_cube_root(Nat order) {
  // Returns the prime l with l^3 = order, as a string, or "" if none.
  for (Nat l = 2; l * l * l <= order; ++l) {
    if (l * l * l == order && is_prime(l)) return std::to_string(l);
  }
  return {};
}

std::map<Nat, Nat> order_histogram(const MetacyclicPresentation& pres) {
  std::map<Nat, Nat> hist;
  for (const auto& g : elements(pres)) ++hist[element_order(pres, g)];
  return hist;
}

}  // namespace

MetacyclicPresentation MetacyclicPresentation::make(Nat m, Nat n, Nat a, Nat s) {
  if (m == 0 || n == 0) throw InputError("presentation needs m >= 1 and n >= 1");
  const Nat ra = a % m == 0 ? m : a % m;
  if (gcd(ra, m) != 1) throw InputError("presentation multiplier a must be prime to m");
  if (pow_mod(ra, n, m) != 1 % m) throw InputError("presentation needs a^n = 1 mod m");
  const Nat rs = s % m;
  if (mul_mod((ra + m - 1) % m, rs, m) != 0) {
    throw InputError("presentation needs (a - 1) s = 0 mod m");
  }
  checked_mul(m, n);
  return MetacyclicPresentation(m, n, ra, rs);
}

GroupElement multiply(const MetacyclicPresentation& pres, GroupElement g1,
                      GroupElement g2) {
  const Nat m = pres.m();
  const Nat n = pres.n();
  // sigma~^j1 tau^i2 = tau^(a^j1 i2) sigma~^j1, and sigma~^n = tau^s is central.
  const Nat twisted = mul_mod(pow_mod(pres.a(), g1.j, m), g2.i, m);
  const Nat wrap = (g1.j + g2.j) / n;
  const Nat i = (g1.i + twisted + mul_mod(pres.s(), wrap, m)) % m;
  return GroupElement{i, (g1.j + g2.j) % n};
}

GroupElement power(const MetacyclicPresentation& pres, GroupElement g, Nat k) {
  GroupElement result{};
  while (k > 0) {
    if (k & 1) result = multiply(pres, result, g);
    g = multiply(pres, g, g);
    k >>= 1;
  }
  return result;
}

GroupElement inverse(const MetacyclicPresentation& pres, GroupElement g) {
  return power(pres, g, element_order(pres, g) - 1);
}

Nat element_order(const MetacyclicPresentation& pres, GroupElement g) {
  const GroupElement identity{};
  GroupElement acc = g;
  Nat t = 1;
  while (acc != identity) {
    acc = multiply(pres, acc, g);
    ++t;
  }
  return t;
}

std::vector<GroupElement> elements(const MetacyclicPresentation& pres) {
  std::vector<GroupElement> out;
  out.reserve(pres.order());
  for (Nat j = 0; j < pres.n(); ++j) {
    for (Nat i = 0; i < pres.m(); ++i) out.push_back({i, j});
  }
  return out;
}

StructureReport structure_report(const MetacyclicPresentation& pres) {
  if (pres.order() > kEnumerationBound) throw InputError("enumeration bound exceeded");
  const Nat m = pres.m();
  const Nat n = pres.n();

  StructureReport rep;
  rep.order = pres.order();
  rep.is_abelian = pres.a() % m == 1 % m;
  rep.is_cyclic = rep.is_abelian && gcd(pres.s(), gcd(m, n)) == 1;

  const GroupElement tau{1 % m, 0};
  const GroupElement sigma{0, 1 % n};
  rep.exponent = 1;
  for (const auto& g : elements(pres)) {
    const Nat ord = element_order(pres, g);
    rep.exponent = lcm(rep.exponent, ord);
    if (ord == 2) ++rep.involution_count;
    if (multiply(pres, g, tau) == multiply(pres, tau, g) &&
        multiply(pres, g, sigma) == multiply(pres, sigma, g)) {
      ++rep.center_order;
    }
  }

  if (rep.is_abelian) {
    // Z^2 / <(m, 0), (-s, n)> has invariant factors d1 | d2 with
    // d1 = gcd(m, n, s).
    const Nat d1 = gcd(gcd(m, n), pres.s());
    rep.name = rep.is_cyclic ? "cyclic"
                             : "abelian(" + std::to_string(d1) + "|" +
                                   std::to_string(rep.order / d1) + ")";
  } else if (rep.order == 8 && rep.involution_count == 5) {
    rep.name = "dihedral-8";
  } else if (rep.order == 8 && rep.involution_count == 1) {
    rep.name = "quaternion-8";
  } else if (const auto l = prime_cube_root(rep.order);
             !l.empty() && rep.exponent * std::stoull(l) == rep.order) {
    rep.name = "twisted-l²⋊l";
  } else {
    rep.name = "metacyclic-generic";
  }
  return rep;
}

bool is_isomorphic(const MetacyclicPresentation& p1, const MetacyclicPresentation& p2) {
  if (p1.order() > kIsomorphismBound || p2.order() > kIsomorphismBound) {
    throw InputError("isomorphism order bound exceeded");
  }
  if (p1.order() != p2.order()) return false;
  if (order_histogram(p1) != order_histogram(p2)) return false;

  // A map tau -> t, sigma~ -> u extends to a homomorphism p1 -> p2 iff the
  // defining relations of p1 hold for (t, u). It is an isomorphism iff the
  // normal-form images t^i u^j are pairwise distinct.
  const Nat tau_order = p1.m();
  const Nat sigma_order = element_order(p1, GroupElement{0, 1 % p1.n()});
  const auto all = elements(p2);
  std::vector<GroupElement> tau_images;
  std::vector<GroupElement> sigma_images;
  for (const auto& g : all) {
    const Nat ord = element_order(p2, g);
    if (ord == tau_order) tau_images.push_back(g);
    if (ord == sigma_order) sigma_images.push_back(g);
  }

  std::vector<char> seen(p2.order());
  for (const auto& t : tau_images) {
    const GroupElement t_s = power(p2, t, p1.s());
    const GroupElement t_a = power(p2, t, p1.a());
    for (const auto& u : sigma_images) {
      if (power(p2, u, p1.n()) != t_s) continue;
      if (multiply(p2, u, t) != multiply(p2, t_a, u)) continue;
      std::fill(seen.begin(), seen.end(), 0);
      bool injective = true;
      GroupElement uj{};
      for (Nat j = 0; j < p1.n() && injective; ++j) {
        GroupElement tij = uj;
        for (Nat i = 0; i < p1.m(); ++i) {
          auto& slot = seen[tij.j * p2.m() + tij.i];
          if (slot) {
            injective = false;
            break;
          }
          slot = 1;
          tij = multiply(p2, t, tij);
        }
        uj = multiply(p2, uj, u);
      }
      if (injective) return true;
    }
  }
  return false;
}

bool pullback_splits(const MetacyclicPresentation& pres, Nat cmult) {
  if (cmult == 0) throw InputError("pullback multiplier must be at least 1");
  const Nat exponent = checked_mul(cmult, pres.n());
  for (Nat i = 0; i < pres.m(); ++i) {
    const GroupElement lift{i, 1 % pres.n()};
    // For n = 1 the lift of the generator is tau^i itself.
    if (power(pres, lift, exponent) == GroupElement{}) return true;
  }
  return false;
}

}  // namespace tamecoh
