#pragma once

// Exact integer primitives shared by every other module.
//
// Integers are 64-bit unsigned words. Every operation that could exceed the
// word is checked and throws InputError("arithmetic overflow") instead of
// wrapping; modular products go through 128-bit intermediates.

#include <cstdint>
#include <optional>

namespace tamecoh {

using Nat = std::uint64_t;

struct PrimePower {
  Nat q = 0;
  Nat p = 0;
  unsigned r = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// gcd(0, 0) = 0.
Nat gcd(Nat a, Nat b);
Nat lcm(Nat a, Nat b);

Nat checked_add(Nat a, Nat b);
Nat checked_mul(Nat a, Nat b);
Nat checked_pow(Nat base, Nat exp);

/// (a * b) mod m for m >= 1.
Nat mul_mod(Nat a, Nat b, Nat m);
/// base^exp mod m for m >= 1; pow_mod(x, 0, 1) = 0.
Nat pow_mod(Nat base, Nat exp, Nat m);
/// (1 + b + b^2 + ... + b^(terms-1)) mod m, in O(log terms) steps.
Nat geometric_sum_mod(Nat b, Nat terms, Nat m);

/// Order of x in the additive group Z/m, i.e. m / gcd(x mod m, m).
Nat additive_order(Nat x, Nat m);

/// Solution set {x0 + k*step : 0 <= k < count()} of a congruence a*x = b mod m.
struct CongruenceSolutions {
  Nat x0 = 0;
  Nat step = 1;
  Nat modulus = 1;

  Nat count() const { return modulus / step; }
  Nat nth(Nat k) const { return (x0 + (k % count()) * step) % modulus; }

  friend bool operator==(const CongruenceSolutions&,
                         const CongruenceSolutions&) = default;
};

/// Solves a*x = b (mod m). Returns std::nullopt when gcd(a, m) does not
/// divide b; otherwise the least solution x0 in [0, m) and the step
/// m / gcd(a, m) between consecutive solutions.
std::optional<CongruenceSolutions> solve_linear_congruence(Nat a, Nat b, Nat m);

/// Deterministic trial division.
bool is_prime(Nat n);

/// Returns (p, r) with q = p^r, or std::nullopt when q is not a prime power.
/// Throws InputError("invalid cardinality") for q <= 1.
std::optional<PrimePower> factor_prime_power(Nat q);

/// Largest t with l^t | x. Requires x >= 1 and l >= 2.
unsigned valuation(Nat x, Nat l);

}  // namespace tamecoh
