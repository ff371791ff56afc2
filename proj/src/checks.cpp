#include "tamecoh/checks.hpp"

#include <functional>
#include <sstream>

#include "tamecoh/cyccoh.hpp"
#include "tamecoh/groups.hpp"
#include "tamecoh/mass.hpp"
#include "tamecoh/report.hpp"
#include "tamecoh/tame.hpp"

namespace tamecoh {

namespace {

void record(CheckResult& result, bool ok, const std::function<std::string()>& describe) {
  ++result.cases;
  if (ok) return;
  if (result.mismatches++ == 0) result.first_mismatch = describe();
}

std::string where(const TameShape& shape, Nat x) {
  std::ostringstream out;
  out << "q=" << shape.q() << " e=" << shape.e() << " f=" << shape.f() << " x=" << x;
  return out.str();
}

// Calls fn for every valid shape of the grid.
void for_each_shape(const GridBounds& grid, const std::function<void(const TameShape&)>& fn) {
  for (Nat q : prime_powers_up_to(grid.q_max)) {
    const auto field = LocalField::make(q);
    for (Nat e = 1; e <= grid.e_max; ++e) {
      if (gcd(e, field.p()) != 1) continue;
      for (Nat f = 1; f <= grid.f_max; ++f) fn(TameShape::make(field, e, f));
    }
  }
}

}  // namespace

CheckResult check_class_equivalence(const GridBounds& grid) {
  CheckResult result{"class equivalence", 0, 0, {}};
  for_each_shape(grid, [&](const TameShape& shape) {
    if (!shape.galois_regime()) return;
    for (const auto& line : lines(shape)) {
      if (!is_stable(line)) continue;
      const H2Class quotient = class_via_quotient(line);
      const H2Class norm = class_via_norm(line);
      record(result, quotient == norm && class_order(quotient) == class_order(norm),
             [&] { return where(shape, line.x); });
    }
  });
  return result;
}

CheckResult check_vanishing(const GridBounds& grid) {
  CheckResult result{"finite field vanishing", 0, 0, {}};
  for (Nat q : prime_powers_up_to(grid.q_max)) {
    for (Nat f = 1; f <= grid.f_max; ++f) {
      const auto action = CyclicAction::make(checked_pow(q, f) - 1, f, q);
      record(result, h1_order(action) == 1 && h2_order(action) == 1, [&] {
        return "q=" + std::to_string(q) + " f=" + std::to_string(f);
      });
    }
  }
  return result;
}

CheckResult check_base_change_diagram(const GridBounds& grid, Nat level_max) {
  CheckResult result{"base change diagram", 0, 0, {}};
  for_each_shape(grid, [&](const TameShape& shape) {
    if (!shape.galois_regime()) return;
    for (const auto& line : lines(shape)) {
      if (!is_stable(line)) continue;
      const H2Class cls = class_via_quotient(line);
      for (Nat c = 1; c * shape.f() <= level_max; ++c) {
        const LineParam moved = base_change(line, c * shape.f());
        record(result, is_stable(moved) && class_via_quotient(moved) == inflate(cls, c),
               [&] { return where(shape, line.x) + " c=" + std::to_string(c); });
      }
    }
  });
  return result;
}

CheckResult check_counts(const GridBounds& grid) {
  CheckResult result{"line and orbit counts", 0, 0, {}};
  for_each_shape(grid, [&](const TameShape& shape) {
    const auto all = lines(shape);
    Nat stable = 0;
    for (const auto& line : all) stable += is_stable(line) ? 1 : 0;
    const Nat q = shape.q();
    bool ok = all.size() == gcd(checked_pow(q, shape.f()) - 1, shape.e()) &&
              stable == gcd(q - 1, shape.e());
    if (shape.f() == 1) ok = ok && orbits(shape).size() == gcd(q - 1, shape.e());
    record(result, ok, [&] { return where(shape, 0); });
  });
  return result;
}

CheckResult check_closure(const GridBounds& grid) {
  CheckResult result{"galoisian closure", 0, 0, {}};
  for_each_shape(grid, [&](const TameShape& shape) {
    // Outside e | q^f - 1 the line module Z/g_f grows under base change and
    // the order of (q - 1) x no longer predicts stability higher up.
    if (!shape.galois_regime()) return;
    for (const auto& line : lines(shape)) {
      const Nat d = closure_degree(line);
      bool ok = is_stable(base_change(line, d * shape.f()));
      for (Nat smaller = 1; smaller < d && ok; ++smaller) {
        ok = !is_stable(base_change(line, smaller * shape.f()));
      }
      record(result, ok, [&] { return where(shape, line.x); });
    }
  });
  return result;
}

CheckResult check_splitting(const GridBounds& grid) {
  CheckResult result{"splitting degree", 0, 0, {}};
  for_each_shape(grid, [&](const TameShape& shape) {
    if (!shape.galois_regime()) return;
    for (const auto& cls : orbits(shape)) {
      if (!is_galoisian(cls)) continue;
      const auto pres = galois_group(cls);
      const Nat c = split_degree(cls.line());
      bool ok = pullback_splits(pres, c);
      for (Nat smaller = 1; smaller < c && ok; ++smaller) ok = !pullback_splits(pres, smaller);
      record(result, ok, [&] { return where(shape, cls.rep()); });
    }
  });
  return result;
}

CheckResult check_cocycle_oracle(Nat m_max, Nat n_max) {
  CheckResult result{"cocycle oracle", 0, 0, {}};
  for (Nat m = 1; m <= m_max; ++m) {
    for (Nat n = 1; n <= n_max; ++n) {
      Nat cells_bound = 1;
      bool feasible = true;
      for (Nat i = 0; i < n * n && feasible; ++i) {
        cells_bound *= m;
        feasible = cells_bound <= kCocycleOracleBound;
      }
      if (!feasible) continue;
      for (Nat a = 1; a <= m; ++a) {
        if (gcd(a, m) != 1 || pow_mod(a, n, m) != 1 % m) continue;
        const auto action = CyclicAction::make(m, n, a);
        record(result, h2_order(action) == h2_order_bruteforce(action), [&] {
          return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " a=" + std::to_string(a);
        });
      }
    }
  }
  return result;
}

CheckResult check_group_criteria(Nat m_max, Nat n_max) {
  CheckResult result{"abelian and cyclic criteria", 0, 0, {}};
  for (Nat m = 1; m <= m_max; ++m) {
    for (Nat n = 1; n <= n_max; ++n) {
      for (Nat a = 1; a <= m; ++a) {
        if (gcd(a, m) != 1 || pow_mod(a, n, m) != 1 % m) continue;
        for (Nat s = 0; s < m; ++s) {
          if (mul_mod(a - 1, s, m) != 0) continue;
          const auto pres = MetacyclicPresentation::make(m, n, a, s);
          const auto rep = structure_report(pres);
          bool has_generator = false;
          for (const auto& g : elements(pres)) {
            if (element_order(pres, g) == pres.order()) {
              has_generator = true;
              break;
            }
          }
          const bool ok = rep.is_cyclic == has_generator &&
                          rep.is_abelian == (rep.center_order == rep.order);
          record(result, ok, [&] {
            std::ostringstream out;
            out << "m=" << m << " n=" << n << " a=" << a << " s=" << s;
            return out.str();
          });
        }
      }
    }
  }
  return result;
}

CheckResult check_mass(Nat q_max, Nat e_max) {
  CheckResult result{"tame mass formula", 0, 0, {}};
  for (Nat q : prime_powers_up_to(q_max)) {
    const auto field = LocalField::make(q);
    for (Nat e = 1; e <= e_max; ++e) {
      if (gcd(e, field.p()) != 1) continue;
      const auto report = tame_mass(field, e);
      record(result,
             report.subfield_count_sum == Rational(e) && report.per_class_weighted_sum == 1 &&
                 report.class_count == gcd(q - 1, e),
             [&] { return "q=" + std::to_string(q) + " e=" + std::to_string(e); });
    }
  }
  return result;
}

std::vector<CheckResult> run_all_checks(const GridBounds& grid) {
  return {
      check_class_equivalence(grid),
      check_vanishing(grid),
      check_base_change_diagram(grid),
      check_counts(grid),
      check_closure(grid),
      check_splitting(grid),
      check_cocycle_oracle(),
      check_group_criteria(),
      check_mass(grid.q_max),
  };
}

}  // namespace tamecoh
