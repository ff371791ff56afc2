#include "tamecoh/arith.hpp"

#include <numeric>

#include "tamecoh/error.hpp"

namespace tamecoh {

namespace {

__extension__ using Wide = unsigned __int128;
__extension__ using SignedWide = __int128;

[[noreturn]] void overflow() { throw InputError("arithmetic overflow"); }

void require_modulus(Nat m) {
  if (m == 0) throw InputError("zero modulus");
}

// Inverse of a modulo m, assuming gcd(a, m) = 1 and m >= 1.
Nat inverse_mod(Nat a, Nat m) {
  if (m == 1) return 0;
  SignedWide old_r = static_cast<SignedWide>(a % m), r = m;
  SignedWide old_s = 1, s = 0;
  while (r != 0) {
    const SignedWide quot = old_r / r;
    SignedWide tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  SignedWide inv = old_s % static_cast<SignedWide>(m);
  if (inv < 0) inv += m;
  return static_cast<Nat>(inv);
}

}  // namespace

Nat gcd(Nat a, Nat b) { return std::gcd(a, b); }

Nat lcm(Nat a, Nat b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd(a, b), b);
}

Nat checked_add(Nat a, Nat b) {
  Nat out = 0;
  if (__builtin_add_overflow(a, b, &out)) overflow();
  return out;
}

Nat checked_mul(Nat a, Nat b) {
  Nat out = 0;
  if (__builtin_mul_overflow(a, b, &out)) overflow();
  return out;
}

Nat checked_pow(Nat base, Nat exp) {
  Nat result = 1;
  for (Nat i = 0; i < exp; ++i) {
    result = checked_mul(result, base);
    if (result == 0 || result == 1) break;
  }
  return result;
}

Nat mul_mod(Nat a, Nat b, Nat m) {
  require_modulus(m);
  return static_cast<Nat>((static_cast<Wide>(a) * b) % m);
}

Nat pow_mod(Nat base, Nat exp, Nat m) {
  require_modulus(m);
  Nat result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

Nat geometric_sum_mod(Nat b, Nat terms, Nat m) {
  require_modulus(m);
  if (terms == 0) return 0;
  if (terms % 2 == 1) {
    // 1 + b * (1 + ... + b^(terms-2))
    return (1 % m + mul_mod(b, geometric_sum_mod(b, terms - 1, m), m)) % m;
  }
  const Nat half = geometric_sum_mod(b, terms / 2, m);
  return mul_mod(half, (1 + pow_mod(b, terms / 2, m)) % m, m);
}

Nat additive_order(Nat x, Nat m) {
  require_modulus(m);
  return m / gcd(x % m, m);
}

std::optional<CongruenceSolutions> solve_linear_congruence(Nat a, Nat b, Nat m) {
  require_modulus(m);
  a %= m;
  b %= m;
  const Nat g = gcd(a, m);  // g = m when a = 0
  if (b % g != 0) return std::nullopt;
  const Nat reduced = m / g;
  const Nat x0 = mul_mod(b / g, inverse_mod(a / g, reduced), reduced);
  return CongruenceSolutions{x0, reduced, m};
}

bool is_prime(Nat n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Nat d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> factor_prime_power(Nat q) {
  if (q <= 1) throw InputError("invalid cardinality");
  Nat p = q;
  for (Nat d = 2; d <= q / d; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned r = 0;
  Nat rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++r;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{q, p, r};
}

unsigned valuation(Nat x, Nat l) {
  if (x == 0) throw InputError("valuation of zero is undefined");
  if (l < 2) throw InputError("valuation base must be at least 2");
  unsigned t = 0;
  while (x % l == 0) {
    x /= l;
    ++t;
  }
  return t;
}

}  // namespace tamecoh
