#pragma once

// The metacyclic group
//   < tau, sigma~ | tau^m = 1, sigma~^n = tau^s, sigma~ tau sigma~^-1 = tau^a >
// of order m*n, with elements held in the normal form tau^i sigma~^j.

#include <string>
#include <vector>

#include "tamecoh/arith.hpp"

namespace tamecoh {

class MetacyclicPresentation {
 public:
  /// Validates gcd(a, m) = 1, a^n = 1 (mod m) and (a - 1) s = 0 (mod m).
  /// a is stored reduced into [1, m] and s into [0, m).
  static MetacyclicPresentation make(Nat m, Nat n, Nat a, Nat s);

  Nat m() const { return m_; }
  Nat n() const { return n_; }
  Nat a() const { return a_; }
  Nat s() const { return s_; }
  Nat order() const { return m_ * n_; }

  friend bool operator==(const MetacyclicPresentation&,
                         const MetacyclicPresentation&) = default;

 private:
  MetacyclicPresentation(Nat m, Nat n, Nat a, Nat s) : m_(m), n_(n), a_(a), s_(s) {}

  Nat m_;
  Nat n_;
  Nat a_;
  Nat s_;
};

/// tau^i sigma~^j with 0 <= i < m, 0 <= j < n.
struct GroupElement {
  Nat i = 0;
  Nat j = 0;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

GroupElement multiply(const MetacyclicPresentation& pres, GroupElement g1,
                      GroupElement g2);
GroupElement power(const MetacyclicPresentation& pres, GroupElement g, Nat k);
GroupElement inverse(const MetacyclicPresentation& pres, GroupElement g);

/// Least t >= 1 with g^t = 1, by repeated multiplication.
Nat element_order(const MetacyclicPresentation& pres, GroupElement g);

/// All m*n elements in (j, i) lexicographic order.
std::vector<GroupElement> elements(const MetacyclicPresentation& pres);

struct StructureReport {
  Nat order = 0;
  bool is_abelian = false;  // a = 1 mod m
  bool is_cyclic = false;   // abelian and gcd(s, gcd(m, n)) = 1
  Nat exponent = 0;
  Nat involution_count = 0;
  Nat center_order = 0;
  std::string name;
};

inline constexpr Nat kEnumerationBound = 10'000;
inline constexpr Nat kIsomorphismBound = 512;

/// Throws InputError("enumeration bound exceeded") when m*n > 10^4.
StructureReport structure_report(const MetacyclicPresentation& pres);

/// Brute-force search over images of (tau, sigma~). Both orders must agree
/// and be at most 512.
bool is_isomorphic(const MetacyclicPresentation& p1, const MetacyclicPresentation& p2);

/// Whether the extension obtained by pulling pres back along
/// Z/(cmult*n) -> Z/n splits, i.e. some lift tau^i sigma~ of the generator
/// satisfies (tau^i sigma~)^(cmult*n) = 1.
bool pullback_splits(const MetacyclicPresentation& pres, Nat cmult);

}  // namespace tamecoh
