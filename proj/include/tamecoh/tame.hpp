#pragma once

// Tamely ramified extensions of a local field K with residue cardinality q.
//
// Extensions with ramification index e and residual degree f correspond to
// Frobenius orbits of ramified lines in K_f^x / K_f^{xe}. After fixing a
// uniformiser of K and a generator of k_f^x, the lines are the residues
// x mod g_f (g_f = gcd(q^f - 1, e)), the line x being generated by the image
// of omega^x * pi, and Frobenius acts by x -> q x. None of the constructions
// below depend on those choices, so neither is ever represented.

#include <utility>
#include <vector>

#include "tamecoh/arith.hpp"
#include "tamecoh/cyccoh.hpp"
#include "tamecoh/groups.hpp"

namespace tamecoh {

class LocalField {
 public:
  /// Throws InputError("q is not a prime power").
  static LocalField make(Nat q);

  Nat q() const { return cardinality_.q; }
  Nat p() const { return cardinality_.p; }
  unsigned r() const { return cardinality_.r; }
  const PrimePower& cardinality() const { return cardinality_; }

  friend bool operator==(const LocalField&, const LocalField&) = default;

 private:
  explicit LocalField(PrimePower q) : cardinality_(q) {}

  PrimePower cardinality_;
};

class TameShape {
 public:
  /// Throws InputError("gcd(e,p) != 1") for wild e, and for e or f zero.
  static TameShape make(const LocalField& field, Nat e, Nat f);

  const LocalField& field() const { return field_; }
  Nat q() const { return field_.q(); }
  Nat e() const { return e_; }
  Nat f() const { return f_; }
  /// gcd(q - 1, e): the number of Frobenius-stable lines.
  Nat g() const { return g_; }
  /// gcd(q^f - 1, e): the number of lines.
  Nat g_f() const { return g_f_; }
  /// e | q^f - 1, the regime in which galoisian extensions exist.
  bool galois_regime() const { return g_f_ == e_; }
  /// q^f - 1, checked for overflow.
  Nat units_order() const;
  /// (1 + q + ... + q^(f-1)) mod modulus.
  Nat norm_exponent_mod(Nat modulus) const;

  friend bool operator==(const TameShape&, const TameShape&) = default;

 private:
  TameShape(LocalField field, Nat e, Nat f, Nat g, Nat g_f)
      : field_(field), e_(e), f_(f), g_(g), g_f_(g_f) {}

  LocalField field_;
  Nat e_;
  Nat f_;
  Nat g_;
  Nat g_f_;
};

struct LineParam {
  TameShape shape;
  Nat x;

  friend bool operator==(const LineParam&, const LineParam&) = default;
};

/// Throws InputError unless 0 <= x < g_f.
LineParam make_line(const TameShape& shape, Nat x);

/// One K-isomorphism class: a Frobenius orbit of line parameters, sorted.
struct ExtensionClass {
  TameShape shape;
  std::vector<Nat> orbit;

  Nat rep() const { return orbit.front(); }
  LineParam line() const { return LineParam{shape, rep()}; }
};

/// Subgroup of K^x / K^{xe} in the split model (Z/e) x (Z/e) given by a
/// uniformiser; the first coordinate is the unit part k^x / k^{xe}.
struct KummerSubgroup {
  TameShape shape;
  std::vector<std::pair<Nat, Nat>> generators;

  /// Sorted list of every element; e <= 100.
  std::vector<std::pair<Nat, Nat>> elements() const;
};

inline constexpr Nat kKummerBound = 100;

std::vector<LineParam> lines(const TameShape& shape);
LineParam frobenius(const LineParam& line);
std::vector<ExtensionClass> orbits(const TameShape& shape);

bool is_stable(const LineParam& line);
bool is_galoisian(const ExtensionClass& cls);
bool is_abelian(const ExtensionClass& cls);

/// Class of a stable line in H^2(G_f, k_f^x / k_f^{xe}) = H^2 over the
/// action (g_f, f, q).
H2Class class_via_quotient(const LineParam& line);

/// Class of a stable line through the norm construction: write
/// xi^(q-1) = alpha^e in k_f^x, take zeta = N(alpha) in mu_e and read it in
/// Z/e via mu_e = <omega^((q^f-1)/e)>. Requires e | q^f - 1. The class is
/// computed from two different choices of alpha and they must agree.
H2Class class_via_norm(const LineParam& line);

/// Order of (q-1) x in Z/g_f: the galoisian closure lives over K_{d f}.
Nat closure_degree(const LineParam& line);

/// Least c such that the extension becomes split over K_{c f}. Requires a
/// stable line and e | q^f - 1.
Nat split_degree(const LineParam& line);

/// Image of the line under R_e(K_f) -> R_e(K_{f_target}).
LineParam base_change(const LineParam& line, Nat f_target);

/// Galois group of a galoisian class as <tau, sigma~ | tau^e, sigma~^f = tau^s,
/// sigma~ tau sigma~^-1 = tau^q>.
MetacyclicPresentation galois_group(const ExtensionClass& cls);
bool is_cyclic_class(const ExtensionClass& cls);

/// |Aut_K(L)| = gcd(q - 1, e) for totally ramified L of degree e.
Nat aut_order_totally_ramified(const LocalField& field, Nat e);

/// D intersected with the unit part. Requires f = 1 and e | q - 1.
KummerSubgroup unramified_part(const KummerSubgroup& d);

}  // namespace tamecoh
