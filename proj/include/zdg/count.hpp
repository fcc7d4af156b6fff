#ifndef ZDG_COUNT_HPP
#define ZDG_COUNT_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace zdg {

/// Exact arbitrary-precision integer. All cardinalities computed by this
/// library are Counts; intermediates may be negative but every exposed
/// result is nonnegative.
using Count = mpz_class;

/// base^exp as a Count.
Count ipow(std::uint64_t base, std::uint64_t exp);
Count ipow(const Count& base, std::uint64_t exp);

/// Exact quotient num/den. Throws internal_error if den == 0 or the
/// division leaves a remainder; truncation is never silent.
Count exact_div(const Count& num, const Count& den);

/// v/2 with an evenness assertion (internal_error when v is odd).
Count halve_even(const Count& v);

/// Decimal rendering (used for reports and JSON, which carry counts as strings).
std::string to_decimal(const Count& v);

} // namespace zdg

#endif // ZDG_COUNT_HPP
