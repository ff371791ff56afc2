#pragma once

// Cohomology of a cyclic group G = <sigma> of order n acting on the cyclic
// module Z/m through sigma -> multiplication by a.
//
// The module is written additively: sigma - 1 is multiplication by a - 1 and
// the norm element 1 + sigma + ... + sigma^(n-1) is multiplication by
//   S = 1 + a + ... + a^(n-1)  (mod m).
// Then H^1 = Ker(S)/Im(a-1) and H^2 = Ker(a-1)/Im(S), and every quantity
// below reduces to gcd arithmetic.

#include "tamecoh/arith.hpp"

namespace tamecoh {

class CyclicAction {
 public:
  /// Validates gcd(a, m) = 1 and a^n = 1 (mod m). The multiplier is stored
  /// reduced into [1, m].
  static CyclicAction make(Nat m, Nat n, Nat a);

  Nat m() const { return m_; }
  Nat n() const { return n_; }
  Nat a() const { return a_; }

  friend bool operator==(const CyclicAction&, const CyclicAction&) = default;

 private:
  CyclicAction(Nat m, Nat n, Nat a) : m_(m), n_(n), a_(a) {}

  Nat m_;
  Nat n_;
  Nat a_;
};

/// A class in Ker(a-1)/Im(S), held by its least non-negative representative.
struct H2Class {
  CyclicAction action;
  Nat rep;

  bool is_trivial() const { return rep == 0; }

  friend bool operator==(const H2Class&, const H2Class&) = default;
};

/// S = (1 + a + ... + a^(n-1)) mod m.
Nat norm_sum(const CyclicAction& action);

/// gcd(S mod m, m): the generator of Im(S) inside Z/m.
Nat norm_image_generator(const CyclicAction& action);

Nat h1_order(const CyclicAction& action);
Nat h2_order(const CyclicAction& action);

/// Throws InputError("not a cocycle representative") unless (a-1)*x = 0 mod m.
H2Class make_class(const CyclicAction& action, Nat x);

/// Least t >= 1 with t * rep in Im(S).
Nat class_order(const H2Class& c);

/// Inflation along Z/(cmult*n) -> Z/n. On representatives this is
/// multiplication by cmult; the target action is (m, cmult*n, a).
H2Class inflate(const H2Class& c, Nat cmult);

/// Least c >= 1 whose inflation inflate(c, c) is trivial.
///
/// This is always a multiple of class_order(c) and coincides with it when
/// Im(S) = 0, but can be strictly larger: for (m, n, a) = (4, 2, 1) the class
/// of 1 has order 2 while its inflation to Z/4 is the class of 2 in
/// Z/4 / Im(4) = Z/4, so the smallest splitting multiplier is 4.
Nat splitting_multiplier(const H2Class& c);

/// Brute-force |H^2| from 2-cocycles f : G x G -> Z/m modulo coboundaries.
/// Throws InputError("oracle too large") when m^(n^2) exceeds 10^7.
Nat h2_order_bruteforce(const CyclicAction& action);

inline constexpr Nat kCocycleOracleBound = 10'000'000;

}  // namespace tamecoh
