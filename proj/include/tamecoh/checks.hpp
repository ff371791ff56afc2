#pragma once

// Property sweeps that compare two independent routes to the same quantity.
// The CLI `oracle` command runs these and fails on any mismatch.

#include <string>
#include <vector>

#include "tamecoh/arith.hpp"

namespace tamecoh {

struct GridBounds {
  Nat q_max = 49;
  Nat e_max = 36;
  Nat f_max = 6;
};

struct CheckResult {
  std::string name;
  Nat cases = 0;
  Nat mismatches = 0;
  std::string first_mismatch;

  bool ok() const { return mismatches == 0; }
};

/// Quotient and norm classes agree on every stable line with e | q^f - 1.
CheckResult check_class_equivalence(const GridBounds& grid);
/// |H^1| = |H^2| = 1 for the action of G_f on k_f^x.
CheckResult check_vanishing(const GridBounds& grid);
/// Base change then class equals class then inflation, for c f <= level_max.
CheckResult check_base_change_diagram(const GridBounds& grid, Nat level_max = 12);
/// Line count g_f, stable count g and f = 1 orbit count g.
CheckResult check_counts(const GridBounds& grid);
/// closure_degree is the least d making the base-changed line stable, for
/// shapes with e | q^f - 1.
CheckResult check_closure(const GridBounds& grid);
/// split_degree agrees with splitting of the pulled-back Galois group.
CheckResult check_splitting(const GridBounds& grid);
/// h2_order against the cocycle enumeration, m, n <= the bounds.
CheckResult check_cocycle_oracle(Nat m_max = 6, Nat n_max = 6);
/// Abelian and cyclic criteria against full element enumeration.
CheckResult check_group_criteria(Nat m_max = 12, Nat n_max = 12);
/// Exact tame mass identities for q <= q_max, e <= e_max.
CheckResult check_mass(Nat q_max = 49, Nat e_max = 48);

std::vector<CheckResult> run_all_checks(const GridBounds& grid);

}  // namespace tamecoh
