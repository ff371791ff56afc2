#include "tamecoh/l3.hpp"

#include "tamecoh/error.hpp"

namespace tamecoh {

unsigned l_adic_valuation(Nat x, Nat l) {
  if (x == 0) throw InputError("valuation of zero is undefined");
  if (!is_prime(l)) throw InputError("l is not prime");
  return valuation(x, l);
}

L3Report classify_l3(const LocalField& field, Nat l, bool include_abelian) {
  if (!is_prime(l)) throw InputError("l is not prime");
  if (l == field.p()) throw InputError("l equals p");

  L3Report report;
  report.q = field.cardinality();
  report.l = l;
  report.v_l_q_minus_1 = l_adic_valuation(field.q() - 1, l);
  report.feasible = report.v_l_q_minus_1 == 1;

  const Nat l2 = checked_mul(l, l);
  if (include_abelian) {
    const Nat l3 = checked_mul(l2, l);
    for (Nat e = 1; e <= l3; e *= l) {
      const auto shape = TameShape::make(field, e, l3 / e);
      AbelianShapeCount count{e, l3 / e};
      for (const auto& cls : orbits(shape)) {
        ++count.orbit_count;
        if (!is_galoisian(cls)) continue;
        ++count.galoisian_count;
        if (is_abelian(cls)) ++count.abelian_count;
      }
      report.abelian_shapes.push_back(count);
    }
  }
  if (!report.feasible) return report;

  const auto shape = TameShape::make(field, l2, l);
  report.shape = {{l2, l}};
  report.line_count = shape.g_f();
  const auto classes = orbits(shape);
  report.orbit_count = classes.size();

  for (const auto& cls : classes) {
    const LineParam line = cls.line();
    if (is_galoisian(cls)) {
      const auto pres = galois_group(cls);
      const auto structure = structure_report(pres);
      report.extensions.push_back(L3Extension{
          .x = line.x,
          .group = structure.name,
          .s = pres.s(),
          .order = structure.order,
          .exponent = structure.exponent,
          .involution_count = structure.involution_count,
          .class_order = class_order(class_via_quotient(line)),
          .split_degree = split_degree(line),
      });
      continue;
    }
    L3ClosureNote note;
    note.orbit = cls.orbit;
    note.closure_degree = closure_degree(line);
    note.closure_level = note.closure_degree * shape.f();
    const LineParam closed = base_change(line, note.closure_level);
    for (Nat member : cls.orbit) {
      if (base_change(make_line(shape, member), note.closure_level).x != closed.x) {
        throw OracleMismatch("orbit members have different galoisian closures");
      }
    }
    note.closure_line = closed.x;
    note.closure_class_order = class_order(class_via_quotient(closed));
    note.split_level = split_degree(closed) * note.closure_level;
    report.closures.push_back(std::move(note));
  }
  return report;
}

}  // namespace tamecoh
