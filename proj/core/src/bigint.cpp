#include "zsr/bigint.hpp"

#include "zsr/error.hpp"

namespace zsr {

Count binomial(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Count r = 1;
  // r stays integral: after step i it equals C(n - k + i, i)
  for (Int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

Count multinomial(std::span<const Int> parts) {
  Count r = 1;
  Int total = 0;
  for (Int part : parts) {
    require(part >= 0, "multinomial: negative part");
    total += part;
    r *= binomial(total, part);
  }
  return r;
}

Count exact_div(const Count& numerator, const Count& denominator, const char* context) {
  ensure(denominator != 0, std::string(context) + ": division by zero");
  Count q, rem;
  boost::multiprecision::divide_qr(numerator, denominator, q, rem);
  ensure(rem == 0, std::string(context) + ": divisor sum " + numerator.str() +
                       " is not divisible by " + denominator.str());
  return q;
}

std::string to_decimal(const Count& c) { return c.str(); }

}  // namespace zsr
