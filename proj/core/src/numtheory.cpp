#include "zsr/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "zsr/error.hpp"

namespace zsr {

std::vector<std::pair<Int, int>> factorize(Int n) {
  require(n >= 1, "factorize: n must be positive, got " + std::to_string(n));
  std::vector<std::pair<Int, int>> out;
  for (Int p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<Int> divisors(Int n) {
  std::vector<Int> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    Int pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(Int n) {
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int p = 2; p <= n / p; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

int v2(Int m) {
  require(m >= 1, "v2: argument must be positive, got " + std::to_string(m));
  int t = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++t;
  }
  return t;
}

Int gcd3(Int a, Int b, Int c) { return std::gcd(std::gcd(a, b), c); }

Int checked_mul(Int a, Int b) {
  Int r = 0;
  require(!__builtin_mul_overflow(a, b, &r), "integer overflow in product");
  return r;
}

Int checked_pow(Int a, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, a);
  return r;
}

Int mod_inverse(Int a, Int m) {
  if (m == 1) return 0;
  // extended Euclid on (a mod m, m)
  Int old_r = mod(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    const Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  ensure(old_r == 1, "mod_inverse: arguments not coprime");
  return mod(old_s, m);
}

}  // namespace zsr
