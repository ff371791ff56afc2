#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "tamecoh/arith.hpp"
#include "tamecoh/tame.hpp"

namespace tamecoh {

using Rational = boost::multiprecision::cpp_rational;

/// "n/d" with d >= 1, always written with a denominator.
std::string to_fraction_string(const Rational& r);

/// Tame mass data in degree e. Every totally tamely ramified extension has
/// discriminant excess c_K(L) = 0, so each weight q^(-c) equals 1.
struct MassReport {
  LocalField field;
  Nat degree = 0;
  Nat class_count = 0;          // |T_{e,1}(K)|
  Nat aut_order = 0;            // |Aut_K(L)|, the same for every class
  Nat subfields_per_class = 0;  // conjugate copies of L inside a closure
  Rational subfield_count_sum;  // sum over subfields E of q^(-c_K(E))
  Rational per_class_weighted_sum;  // sum over classes of q^(-c_K(L)) / |Aut_K(L)|
};

MassReport tame_mass(const LocalField& field, Nat e);

/// Mass in degree e*p from the tame part and a caller-supplied value for
/// the inner sum over degree-p extensions E of each L.
Rational tame_wild_reduction(const LocalField& field, Nat e, const Rational& wild_mass_axiom);

}  // namespace tamecoh
