#pragma once

// Machine-readable views of the library results: JSON documents for the
// CLI and the Python module, and the CSV atlas.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tamecoh/arith.hpp"
#include "tamecoh/cyccoh.hpp"
#include "tamecoh/l3.hpp"
#include "tamecoh/mass.hpp"
#include "tamecoh/tame.hpp"

namespace tamecoh {

struct OrbitSummary {
  Nat rep = 0;
  std::vector<Nat> members;
  bool stable = false;
  bool galoisian = false;
  std::optional<std::string> group;
  std::optional<Nat> s;
  Nat closure_degree = 0;
  std::optional<Nat> split_degree;
  std::optional<Nat> class_order;
};

struct ClassifyReport {
  Nat q = 0;
  Nat e = 0;
  Nat f = 0;
  Nat g = 0;
  Nat g_f = 0;
  bool abelian = false;
  std::vector<OrbitSummary> orbits;

  Nat galoisian_count() const;
};

ClassifyReport classify(const TameShape& shape);

/// Structure name of a presentation; above the enumeration bound only the
/// abelian names are decided and everything else is metacyclic-generic.
std::string group_name(const MetacyclicPresentation& pres);

std::string to_json(const ClassifyReport& report);
std::string to_text(const ClassifyReport& report);

std::string to_json(const MassReport& report, const std::optional<Rational>& wild_axiom);
std::string to_text(const MassReport& report, const std::optional<Rational>& wild_axiom);

std::string to_json(const L3Report& report);
std::string to_text(const L3Report& report);

/// Cohomology summary of one action: orders, every H^2 class with its order
/// and splitting multiplier, and the brute-force order when feasible.
std::string cohomology_json(const CyclicAction& action);
std::string cohomology_text(const CyclicAction& action);

/// Prime powers 2 <= q <= q_max in increasing order.
std::vector<Nat> prime_powers_up_to(Nat q_max);

/// One row per (q, e, f) with q a prime power <= q_max, e <= e_max tame and
/// f <= f_max, in lexicographic order.
std::vector<ClassifyReport> atlas(Nat q_max, Nat e_max, Nat f_max);

/// Columns q,e,f,g,g_f,orbit_count,galoisian_count,abelian,orbits. The
/// orbits column lists rep:size:closure_degree:split_degree:group per orbit,
/// separated by ';', with '-' for fields that only exist for galoisian
/// orbits. LF line endings.
void write_atlas_csv(std::ostream& out, const std::vector<ClassifyReport>& rows);

}  // namespace tamecoh
