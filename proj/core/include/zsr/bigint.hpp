#pragma once

#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "zsr/numtheory.hpp"

namespace zsr {

/// Exact non-negative count. Every closed form in this library divides
/// evenly; exact_div checks that at runtime.
using Count = boost::multiprecision::cpp_int;

/// C(n, k); zero when k < 0 or k > n.
Count binomial(Int n, Int k);

/// (sum of parts)! / prod(part!) computed as a product of binomials.
Count multinomial(std::span<const Int> parts);

/// numerator / denominator, throwing InternalError (with `context`) when
/// the division leaves a remainder.
Count exact_div(const Count& numerator, const Count& denominator, const char* context);

std::string to_decimal(const Count& c);

}  // namespace zsr
