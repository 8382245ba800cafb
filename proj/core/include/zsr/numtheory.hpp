#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace zsr {

using Int = std::int64_t;

/// Prime factorization by trial division, as (prime, exponent) pairs in
/// increasing prime order. factorize(1) is empty.
std::vector<std::pair<Int, int>> factorize(Int n);

/// All positive divisors of n in increasing order.
std::vector<Int> divisors(Int n);

int mobius(Int n);

bool is_prime(Int n);

/// 2-adic valuation. Throws PreconditionError for m <= 0.
int v2(Int m);

Int gcd3(Int a, Int b, Int c);

/// a^e with overflow detection (throws PreconditionError on overflow).
Int checked_pow(Int a, int e);

Int checked_mul(Int a, Int b);

/// Multiplicative inverse of a modulo m, m >= 1, gcd(a, m) = 1.
Int mod_inverse(Int a, Int m);

inline Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace zsr
