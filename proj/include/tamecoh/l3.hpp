#pragma once

// Galoisian extensions of degree l^3 (l a prime different from p).
//
// A nonabelian one forces (e, f) = (l^2, l) and v_l(q - 1) = 1, so only that
// shape is scanned; the remaining abelian shapes are counted on request.

#include <optional>
#include <string>
#include <vector>

#include "tamecoh/arith.hpp"
#include "tamecoh/tame.hpp"

namespace tamecoh {

unsigned l_adic_valuation(Nat x, Nat l);

struct L3Extension {
  Nat x = 0;
  std::string group;
  Nat s = 0;
  Nat order = 0;
  Nat exponent = 0;
  Nat involution_count = 0;
  Nat class_order = 0;
  Nat split_degree = 0;
};

/// Closure data for a non-galoisian orbit: it becomes galoisian over
/// K_{closure_level}, where all its lines land on closure_line, and that
/// closure splits over K_{split_level}.
struct L3ClosureNote {
  std::vector<Nat> orbit;
  Nat closure_degree = 0;
  Nat closure_level = 0;
  Nat closure_line = 0;
  Nat closure_class_order = 0;
  Nat split_level = 0;
};

struct AbelianShapeCount {
  Nat e = 0;
  Nat f = 0;
  Nat orbit_count = 0;
  Nat galoisian_count = 0;
  Nat abelian_count = 0;
};

struct L3Report {
  PrimePower q;
  Nat l = 0;
  unsigned v_l_q_minus_1 = 0;
  bool feasible = false;
  std::optional<std::pair<Nat, Nat>> shape;  // (e, f) = (l^2, l)
  Nat line_count = 0;
  Nat orbit_count = 0;
  std::vector<L3Extension> extensions;
  std::vector<L3ClosureNote> closures;
  std::vector<AbelianShapeCount> abelian_shapes;  // only with include_abelian
};

/// Throws InputError("l is not prime") or InputError("l equals p").
L3Report classify_l3(const LocalField& field, Nat l, bool include_abelian = false);

}  // namespace tamecoh
