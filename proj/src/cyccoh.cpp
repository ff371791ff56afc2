#include "tamecoh/cyccoh.hpp"

#include <unordered_set>
#include <vector>

#include "tamecoh/error.hpp"

namespace tamecoh {

namespace {

Nat minus_one_mod(Nat a, Nat m) { return (a % m + m - 1) % m; }

}  // namespace

CyclicAction CyclicAction::make(Nat m, Nat n, Nat a) {
  if (m == 0) throw InputError("module order m must be at least 1");
  if (n == 0) throw InputError("group order n must be at least 1");
  const Nat reduced = a % m == 0 ? m : a % m;
  if (gcd(reduced, m) != 1) throw InputError("action multiplier a must be prime to m");
  if (pow_mod(reduced, n, m) != 1 % m) {
    throw InputError("action multiplier a must satisfy a^n = 1 mod m");
  }
  return CyclicAction(m, n, reduced);
}

Nat norm_sum(const CyclicAction& action) {
  return geometric_sum_mod(action.a(), action.n(), action.m());
}

Nat norm_image_generator(const CyclicAction& action) {
  return gcd(norm_sum(action), action.m());
}

Nat h1_order(const CyclicAction& action) {
  const Nat m = action.m();
  // |Ker S| * |Ker(a-1)| / m
  return gcd(m, norm_sum(action)) * gcd(m, minus_one_mod(action.a(), m)) / m;
}

Nat h2_order(const CyclicAction& action) {
  const Nat m = action.m();
  // |Ker(a-1)| / |Im S|
  return gcd(m, minus_one_mod(action.a(), m)) / (m / gcd(m, norm_sum(action)));
}

H2Class make_class(const CyclicAction& action, Nat x) {
  const Nat m = action.m();
  if (mul_mod(minus_one_mod(action.a(), m), x, m) != 0) {
    throw InputError("not a cocycle representative");
  }
  // Im(S) = <h>, and h itself lies in Ker(a-1) since (a-1)S = a^n - 1 = 0.
  const Nat h = norm_image_generator(action);
  return H2Class{action, (x % m) % h};
}

Nat class_order(const H2Class& c) {
  const Nat h = norm_image_generator(c.action);
  return h / gcd(c.rep, h);
}

H2Class inflate(const H2Class& c, Nat cmult) {
  if (cmult == 0) throw InputError("inflation multiplier must be at least 1");
  const auto& act = c.action;
  const auto target = CyclicAction::make(act.m(), checked_mul(cmult, act.n()), act.a());
  return make_class(target, mul_mod(cmult, c.rep, act.m()));
}

Nat splitting_multiplier(const H2Class& c) {
  // Candidates are multiples of the class order, and the additive order of
  // rep always works since it kills rep outright.
  const Nat step = class_order(c);
  const Nat last = additive_order(c.rep, c.action.m());
  for (Nat cmult = step; cmult <= last; cmult += step) {
    if (inflate(c, cmult).is_trivial()) return cmult;
  }
  throw OracleMismatch("no splitting multiplier below the additive order");
}

Nat h2_order_bruteforce(const CyclicAction& action) {
  const Nat m = action.m();
  const Nat n = action.n();
  const Nat cells = checked_mul(n, n);
  Nat total = 1;
  for (Nat i = 0; i < cells; ++i) {
    total = checked_mul(total, m);
    if (total > kCocycleOracleBound) throw InputError("oracle too large");
  }

  // acts[g] = a^g mod m, the action of sigma^g.
  std::vector<Nat> acts(n);
  for (Nat g = 0; g < n; ++g) acts[g] = pow_mod(action.a(), g, m);

  auto encode = [m](const std::vector<Nat>& f) {
    Nat code = 0;
    for (Nat v : f) code = code * m + v;
    return code;
  };

  // 2-cocycles: f(g,h) + f(gh,k) = g.f(h,k) + f(g,hk) for all g, h, k.
  std::vector<Nat> f(cells, 0);
  auto is_cocycle = [&] {
    for (Nat g = 0; g < n; ++g) {
      for (Nat h = 0; h < n; ++h) {
        const Nat gh = (g + h) % n;
        for (Nat k = 0; k < n; ++k) {
          const Nat lhs = (f[g * n + h] + f[gh * n + k]) % m;
          const Nat rhs = (acts[g] * f[h * n + k] + f[g * n + (h + k) % n]) % m;
          if (lhs != rhs) return false;
        }
      }
    }
    return true;
  };

  Nat cocycles = 0;
  for (Nat iter = 0; iter < total; ++iter) {
    if (is_cocycle()) ++cocycles;
    for (Nat pos = 0; pos < cells; ++pos) {  // odometer increment
      if (++f[pos] < m) break;
      f[pos] = 0;
    }
  }

  // Coboundaries: (d phi)(g,h) = g.phi(h) - phi(gh) + phi(g).
  std::unordered_set<Nat> coboundaries;
  std::vector<Nat> phi(n, 0);
  std::vector<Nat> dphi(cells);
  const Nat functions = checked_pow(m, n);
  for (Nat iter = 0; iter < functions; ++iter) {
    for (Nat g = 0; g < n; ++g) {
      for (Nat h = 0; h < n; ++h) {
        dphi[g * n + h] = (acts[g] * phi[h] + m - phi[(g + h) % n] + phi[g]) % m;
      }
    }
    coboundaries.insert(encode(dphi));
    for (Nat pos = 0; pos < n; ++pos) {
      if (++phi[pos] < m) break;
      phi[pos] = 0;
    }
  }
  return cocycles / coboundaries.size();
}

}  // namespace tamecoh
