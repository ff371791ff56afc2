#include "tamecoh/mass.hpp"

#include "tamecoh/error.hpp"

namespace tamecoh {

std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

MassReport tame_mass(const LocalField& field, Nat e) {
  const auto shape = TameShape::make(field, e, 1);
  const auto classes = orbits(shape);

  MassReport report{field, 0, 0, 0, 0, {}, {}};
  report.degree = e;
  report.class_count = classes.size();
  report.aut_order = aut_order_totally_ramified(field, e);
  if (e % report.aut_order != 0) throw OracleMismatch("|Aut| does not divide the degree");
  report.subfields_per_class = e / report.aut_order;

  const Rational weight = 1;  // q^(-c_K(L)) with c_K(L) = 0
  for (std::size_t i = 0; i < classes.size(); ++i) {
    report.subfield_count_sum += Rational(report.subfields_per_class) * weight;
    report.per_class_weighted_sum += weight / Rational(report.aut_order);
  }
  return report;
}

Rational tame_wild_reduction(const LocalField& field, Nat e, const Rational& wild_mass_axiom) {
  // c_K(E) = c_L(E), so the degree-ep sum splits as one inner degree-p sum
  // for each of the degree-e subfields L.
  const auto tame = tame_mass(field, e);
  return tame.subfield_count_sum * wild_mass_axiom;
}

}  // namespace tamecoh
