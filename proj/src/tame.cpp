#include "tamecoh/tame.hpp"

#include <algorithm>
#include <set>

#include "tamecoh/error.hpp"

namespace tamecoh {

namespace {

void require_stable(const LineParam& line) {
  if (!is_stable(line)) throw InputError("line not Frobenius-stable");
}

void require_galois_regime(const TameShape& shape) {
  if (!shape.galois_regime()) throw InputError("e does not divide q^f - 1");
}

void require_tame(const LocalField& field, Nat e) {
  if (e == 0) throw InputError("e must be at least 1");
  if (gcd(e, field.p()) != 1) throw InputError("gcd(e,p) != 1");
}

}  // namespace

LocalField LocalField::make(Nat q) {
  if (q < 2) throw InputError("q is not a prime power");
  const auto pp = factor_prime_power(q);
  if (!pp) throw InputError("q is not a prime power");
  return LocalField(*pp);
}

TameShape TameShape::make(const LocalField& field, Nat e, Nat f) {
  require_tame(field, e);
  if (f == 0) throw InputError("f must be at least 1");
  const Nat q = field.q();
  const Nat g = gcd((q - 1) % e, e);
  const Nat g_f = gcd((pow_mod(q, f, e) + e - 1) % e, e);
  return TameShape(field, e, f, g, g_f);
}

Nat TameShape::units_order() const { return checked_pow(q(), f_) - 1; }

Nat TameShape::norm_exponent_mod(Nat modulus) const {
  return geometric_sum_mod(q(), f_, modulus);
}

LineParam make_line(const TameShape& shape, Nat x) {
  if (x >= shape.g_f()) throw InputError("line parameter must be below g_f");
  return LineParam{shape, x};
}


std::vector<std::pair<Nat, Nat>> KummerSubgroup::elements() const {
  const Nat e = shape.e();
  if (e > kKummerBound) throw InputError("Kummer enumeration bound exceeded");
  std::set<std::pair<Nat, Nat>> found{{0, 0}};
  std::vector<std::pair<Nat, Nat>> frontier{{0, 0}};
  while (!frontier.empty()) {
    const auto [u, v] = frontier.back();
    frontier.pop_back();
    for (const auto& [gu, gv] : generators) {
      const std::pair<Nat, Nat> next{(u + gu) % e, (v + gv) % e};
      if (found.insert(next).second) frontier.push_back(next);
    }
  }
  return {found.begin(), found.end()};
}

std::vector<LineParam> lines(const TameShape& shape) {
  std::vector<LineParam> out;
  out.reserve(shape.g_f());
  for (Nat x = 0; x < shape.g_f(); ++x) out.push_back(LineParam{shape, x});
  return out;
}

LineParam frobenius(const LineParam& line) {
  return LineParam{line.shape, mul_mod(line.shape.q(), line.x, line.shape.g_f())};
}

std::vector<ExtensionClass> orbits(const TameShape& shape) {
  const Nat gf = shape.g_f();
  std::vector<char> visited(gf, 0);
  std::vector<ExtensionClass> out;
  for (Nat x = 0; x < gf; ++x) {
    if (visited[x]) continue;
    ExtensionClass cls{shape, {}};
    LineParam cur{shape, x};
    while (!visited[cur.x]) {
      visited[cur.x] = 1;
      cls.orbit.push_back(cur.x);
      cur = frobenius(cur);
    }
    std::sort(cls.orbit.begin(), cls.orbit.end());
    out.push_back(std::move(cls));
  }
  // x ascends, so each orbit is first met at its minimum and out is already
  // sorted by representative.
  return out;
}

bool is_stable(const LineParam& line) {
  const Nat gf = line.shape.g_f();
  return mul_mod(line.shape.q() - 1, line.x, gf) == 0;
}

bool is_galoisian(const ExtensionClass& cls) {
  return cls.orbit.size() == 1 && cls.shape.galois_regime();
}

bool is_abelian(const ExtensionClass& cls) { return (cls.shape.q() - 1) % cls.shape.e() == 0; }

H2Class class_via_quotient(const LineParam& line) {
  require_stable(line);
  const auto& shape = line.shape;
  const auto action = CyclicAction::make(shape.g_f(), shape.f(), shape.q());
  return make_class(action, line.x);
}

H2Class class_via_norm(const LineParam& line) {
  require_stable(line);
  const auto& shape = line.shape;
  require_galois_regime(shape);
  const Nat e = shape.e();
  const Nat units = shape.units_order();  // |k_f^x|
  const Nat root_step = units / e;        // mu_e = <omega^root_step>
  const Nat norm_exp = shape.norm_exponent_mod(units);
  const auto action = CyclicAction::make(e, shape.f(), shape.q());

  // xi = omega^x; xi^(q-1) = alpha^e  <=>  (q-1) x = e * alpha_exp mod |k_f^x|.
  const auto solutions =
      solve_linear_congruence(e, mul_mod(shape.q() - 1, line.x, units), units);
  if (!solutions) throw OracleMismatch("xi^(q-1) is not an e-th power for a stable line");

  auto class_of = [&](Nat alpha_exp) {
    const Nat zeta_exp = mul_mod(alpha_exp, norm_exp, units);
    if (zeta_exp % root_step != 0) throw OracleMismatch("norm of alpha is not in mu_e");
    return make_class(action, zeta_exp / root_step);
  };

  const H2Class first = class_of(solutions->nth(0));
  if (solutions->count() > 1) {
    const H2Class second = class_of(solutions->nth(1));
    if (!(second == first)) throw OracleMismatch("norm class depends on the choice of alpha");
  }
  return first;
}

Nat closure_degree(const LineParam& line) {
  const Nat gf = line.shape.g_f();
  return additive_order(mul_mod(line.shape.q() - 1, line.x, gf), gf);
}

Nat split_degree(const LineParam& line) {
  require_stable(line);
  require_galois_regime(line.shape);
  return splitting_multiplier(class_via_quotient(line));
}

LineParam base_change(const LineParam& line, Nat f_target) {
  const auto& shape = line.shape;
  if (f_target == 0 || f_target % shape.f() != 0) {
    throw InputError("target degree must be a multiple of f");
  }
  const auto target = TameShape::make(shape.field(), shape.e(), f_target);
  const Nat gf = target.g_f();
  // (q^f' - 1)/(q^f - 1) = sum_{i < f'/f} (q^f)^i
  const Nat qf = pow_mod(shape.q(), shape.f(), gf);
  const Nat multiplier = geometric_sum_mod(qf, f_target / shape.f(), gf);
  return LineParam{target, mul_mod(line.x, multiplier, gf)};
}

MetacyclicPresentation galois_group(const ExtensionClass& cls) {
  if (!is_galoisian(cls)) throw InputError("not galoisian over K");
  const H2Class c = class_via_norm(cls.line());
  return MetacyclicPresentation::make(cls.shape.e(), cls.shape.f(), cls.shape.q(), c.rep);
}

bool is_cyclic_class(const ExtensionClass& cls) {
  const auto pres = galois_group(cls);
  const bool abelian = pres.a() % pres.m() == 1 % pres.m();
  return abelian && gcd(pres.s(), gcd(pres.m(), pres.n())) == 1;
}

Nat aut_order_totally_ramified(const LocalField& field, Nat e) {
  require_tame(field, e);
  return gcd(field.q() - 1, e);
}

KummerSubgroup unramified_part(const KummerSubgroup& d) {
  const auto& shape = d.shape;
  if (shape.f() != 1 || (shape.q() - 1) % shape.e() != 0) {
    throw InputError("unramified part needs f = 1 and e | q - 1");
  }
  // D0 lies in the cyclic group Z/e x {0}; it is generated by gcd of its
  // first coordinates.
  Nat generator = shape.e();
  for (const auto& [u, v] : d.elements()) {
    if (v == 0) generator = gcd(generator, u);
  }
  KummerSubgroup out{shape, {}};
  if (generator != shape.e()) out.generators.push_back({generator, 0});
  return out;
}

}  // namespace tamecoh
