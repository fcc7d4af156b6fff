#ifndef ZDG_QCOUNT_HPP
#define ZDG_QCOUNT_HPP

#include <cstdint>

#include "zdg/count.hpp"

namespace zdg {

// Exact q-combinatorial counting over matrices M_n(GF(q)). Every function
// accepts any integer q >= 2: the values are polynomial in q, so evaluation
// at non-prime-power points is legitimate (polynomial reconstruction relies
// on it). Prime-power validation happens once, at ring-spec parse time.
// Empty products evaluate to 1, empty sums to 0. All divisions are exact;
// a nonzero remainder raises internal_error.

/// Number of k-dimensional subspaces of GF(q)^n.
Count gaussian_binomial(unsigned n, unsigned k, std::uint64_t q);

/// Number of rank-k matrices in M_n(GF(q)).
Count rank_count(unsigned n, std::uint64_t q, unsigned k);

/// |GL_n(GF(q))|, the number of invertible matrices.
Count gl_order(unsigned n, std::uint64_t q);

/// |Z(M_n(GF(q)))| = q^(n^2) - |GL_n|, zero divisors including 0.
Count zero_divisor_count(unsigned n, std::uint64_t q);

/// Number of rank-k matrices A in M_n(GF(q)) with A^2 = 0.
/// Zero when 2k > n; 1 when k = 0 (the zero matrix).
Count squarezero_rank_count(unsigned n, std::uint64_t q, unsigned k);

} // namespace zdg

#endif // ZDG_QCOUNT_HPP
