#ifndef ZDG_FORMULAS_HPP
#define ZDG_FORMULAS_HPP

#include <cstdint>

#include "zdg/count.hpp"
#include "zdg/matring.hpp"

namespace zdg {

/// Closed-form Wiener data for a product ring, assembled with the
/// distance-1/3 pair counts it is built from. Construction verifies
/// 2*wiener == d1 + 2*d2 + 3*d3 internally.
struct WienerResult {
    Count wiener;
    Count zero_divisors; ///< |Z(R)|, including 0
    Count d1;            ///< ordered vertex pairs at distance 1
    Count d2;            ///< ordered vertex pairs at distance 2
    Count d3;            ///< ordered vertex pairs at distance 3
    Count n2;            ///< nonzero square-zero elements
    Count t_value;
};

/// |Ann(A)| = 2q^(n(n-k)) - q^((n-k)^2) for a rank-k matrix, k >= 1.
Count ann_size_simple(unsigned n, std::uint64_t q, unsigned k);

/// Left/right/two-sided annihilator sizes of a rank-k matrix, 0 <= k <= n.
AnnCensus annihilator_sizes(unsigned n, std::uint64_t q, unsigned k);

/// Degree of any vertex in class c; 0 for a unit class.
Count degree_formula(const RingSpec& r, const VertexClass& c);

/// Wiener index of the zero-divisor graph of M_n(GF(q)), n >= 2. Accepts
/// any integer q >= 2 (the value is polynomial in q).
Count wiener_simple(unsigned n, std::uint64_t q);

/// Number of distinct transmissions in the M_n case: 2(n-1), for n >= 2.
Count wiener_complexity_simple(unsigned n);

/// Transmission of any vertex of rank k (1 <= k <= n-1) with the given
/// square-zero flag: 2(|Z|-2) - degree.
Count transmission_simple(unsigned n, std::uint64_t q, unsigned k, bool squarezero);

/// T(R): sum over index subsets of size >= 2 weighting zero-divisor counts
/// on the subset and unit counts off it. Zero for a single factor.
Count t_value(const RingSpec& r);

/// Ordered vertex pairs at distance 3: (T(R) - 2^l + 2) * prod |R_i^*|.
Count d3_pair_count(const RingSpec& r);

/// |N_2(R)|: nonzero elements with square zero.
Count n2_count(const RingSpec& r);

/// prod (n_i + 1) - prod n_i: rank tuples containing some full-rank slot.
Count s_value(const RingSpec& r);

/// Exact Wiener index of the zero-divisor graph of a product ring, with the
/// pair counts used to assemble it.
WienerResult wiener_semisimple(const RingSpec& r);

/// Upper bound for the number of distinct transmissions:
/// prod n_i + prod (n_i + 1) - 3.
Count complexity_upper_bound(const RingSpec& r);

/// Vertex count of class c predicted by the rank and square-zero counts
/// (product over factors; 0 for classes that cannot occur).
Count class_size_formula(const RingSpec& r, const VertexClass& c);

} // namespace zdg

#endif // ZDG_FORMULAS_HPP
