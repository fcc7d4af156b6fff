#ifndef ZDG_FFIELD_HPP
#define ZDG_FFIELD_HPP

#include <cstdint>
#include <vector>

namespace zdg {

/// Element of a finite field, encoded as an integer in [0, q). The code is
/// read base p as the coefficient vector of the polynomial residue, lowest
/// degree first. Code 0 is the additive identity, code 1 the multiplicative
/// identity.
using FieldElem = std::uint32_t;

/// Fields with order at most this get dense add/mul/inv lookup tables.
inline constexpr std::uint64_t kFieldTableLimit = 256;

/// Largest constructible field order.
inline constexpr std::uint64_t kFieldOrderLimit = std::uint64_t(1) << 24;

/// A constructed finite field GF(p^m). Immutable after field_build; safe to
/// share across threads. Construction is deterministic: the same (p, m)
/// always yields the same modulus and tables.
struct FieldSpec {
    std::uint32_t p = 0;  ///< characteristic (prime)
    unsigned m = 0;       ///< extension degree
    std::uint64_t q = 0;  ///< order p^m

    /// Monic irreducible modulus, m+1 coefficients in [0, p) lowest degree
    /// first; empty when m == 1. Chosen as the lexicographically smallest
    /// irreducible, comparing coefficient tuples low degree first.
    std::vector<std::uint32_t> modulus;

    // Lookup tables, present iff q <= kFieldTableLimit.
    std::vector<FieldElem> add_table; ///< q*q entries, a*q + b
    std::vector<FieldElem> mul_table; ///< q*q entries
    std::vector<FieldElem> neg_table; ///< q entries
    std::vector<FieldElem> inv_table; ///< q entries; slot 0 unused

    bool has_tables() const noexcept { return !mul_table.empty(); }

    bool operator==(const FieldSpec&) const = default;
};

/// Construct GF(p^m). Throws invalid_parameter if p is not prime or m < 1,
/// resource_limit if p^m exceeds kFieldOrderLimit.
FieldSpec field_build(std::uint64_t p, unsigned m);

FieldElem field_add(FieldElem a, FieldElem b, const FieldSpec& f);
FieldElem field_neg(FieldElem a, const FieldSpec& f);
FieldElem field_sub(FieldElem a, FieldElem b, const FieldSpec& f);
FieldElem field_mul(FieldElem a, FieldElem b, const FieldSpec& f);

/// a^e by square-and-multiply; 0^0 = 1.
FieldElem field_pow(FieldElem a, std::uint64_t e, const FieldSpec& f);

/// Multiplicative inverse. Throws divide_by_zero when a == 0.
FieldElem field_inv(FieldElem a, const FieldSpec& f);

/// True iff n is prime (deterministic trial division; n < 2^32).
bool is_prime(std::uint64_t n);

/// Decompose q = p^m with p prime; returns false if q is not a prime power
/// or q < 2.
bool prime_power(std::uint64_t q, std::uint64_t& p, unsigned& m);

} // namespace zdg

#endif // ZDG_FFIELD_HPP
