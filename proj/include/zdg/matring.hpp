#ifndef ZDG_MATRING_HPP
#define ZDG_MATRING_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zdg/count.hpp"
#include "zdg/ffield.hpp"

namespace zdg {

/// Enumeration and graph-building limits. Exceeding one raises
/// resource_limit; there is no silent truncation.
struct Budget {
    std::uint64_t max_ring_order = std::uint64_t(1) << 24;
    std::uint64_t max_vertices = 200000;
    /// Adjacency is stored as a dense bit matrix up to this many vertices;
    /// above it distances are computed per source without materializing it.
    std::uint64_t dense_threshold = 65536;
};

/// Square matrix over a finite field; entries row-major as element codes.
struct Matrix {
    unsigned n = 0;
    std::vector<FieldElem> entries; // n*n codes

    FieldElem at(unsigned i, unsigned j) const { return entries[std::size_t(i) * n + j]; }
    FieldElem& at(unsigned i, unsigned j) { return entries[std::size_t(i) * n + j]; }

    bool is_zero() const;
    bool operator==(const Matrix&) const = default;
};

Matrix mat_zero(unsigned n);
Matrix mat_identity(unsigned n);
/// E_ij: 1 at (i, j), zeros elsewhere (0-based indices).
Matrix mat_unit(unsigned n, unsigned i, unsigned j);

Matrix mat_mul(const Matrix& a, const Matrix& b, const FieldSpec& f);
/// Rank by exact Gaussian elimination over GF(q).
unsigned mat_rank(const Matrix& a, const FieldSpec& f);
/// True iff a*a == 0 (early exit; no full product materialized).
bool mat_square_is_zero(const Matrix& a, const FieldSpec& f);

/// One factor M_n(GF(q)) of a product ring.
struct RingFactor {
    unsigned n = 0;
    FieldSpec field;
};

/// R = M_{n1}(GF(q1)) x ... x M_{nl}(GF(ql)), the unit of input for
/// everything else in the library.
struct RingSpec {
    std::vector<RingFactor> factors;

    std::size_t factor_count() const { return factors.size(); }

    Count order() const;              ///< prod q_i^(n_i^2)
    Count unit_count() const;         ///< prod |GL_{n_i}(q_i)|
    Count zero_divisor_count() const; ///< order - units, includes 0
    Count vertex_count() const;       ///< zero divisors excluding 0

    /// Ring order as u64 if within the budget; throws resource_limit otherwise.
    std::uint64_t order_within(const Budget& budget) const;

    /// Canonical text form, round-trips through parse_ring_spec.
    std::string to_string() const;
    /// Same with factors sorted by (n, q); used as the report key.
    std::string canonical_key() const;
};

/// Parse "M2(2)xM1(3)" style ring specs. Grammar:
///   ring = factor ("x" factor)* ; factor = "M" SIZE "(" ORDER ")" ;
///   ORDER = INT | INT "^" INT
/// Whitespace-free and case-sensitive. Throws parse_error with position for
/// malformed text, invalid_parameter naming the factor when an order is not
/// a prime power.
RingSpec parse_ring_spec(std::string_view text);

/// Element of the product ring: one matrix per factor.
struct RingElem {
    std::vector<Matrix> parts;

    bool operator==(const RingElem&) const = default;
};

bool ring_is_zero(const RingElem& x);
RingElem ring_zero(const RingSpec& r);
RingElem ring_mul(const RingElem& x, const RingElem& y, const RingSpec& r);
/// True iff x*y == 0, with early exit on the first nonzero product entry.
bool ring_product_is_zero(const RingElem& x, const RingElem& y, const RingSpec& r);

enum class ElementKind { zero, unit, zero_divisor };

ElementKind classify_element(const RingElem& x, const RingSpec& r);

/// Rank profile plus square-zero flag; determines degree and transmission.
struct VertexClass {
    std::vector<unsigned> ks;
    bool squarezero = false;

    bool operator==(const VertexClass&) const = default;
    auto operator<=>(const VertexClass&) const = default;

    /// "k1,...,kl|sq" or "k1,...,kl|nsq".
    std::string to_string() const;
};

VertexClass rank_profile(const RingElem& x, const RingSpec& r);

/// Deterministic element codec: factor-major, then row-major entries, each
/// entry one base-q digit, first entry least significant. Index 0 is the
/// zero element.
RingElem element_from_index(std::uint64_t i, const RingSpec& r);
std::uint64_t element_index(const RingElem& x, const RingSpec& r);

/// Exhaustive annihilator counts for x, by full ring enumeration.
struct AnnCensus {
    Count left;     ///< |{y : yx = 0}|
    Count right;    ///< |{y : xy = 0}|
    Count twosided; ///< |{y : yx = 0 and xy = 0}|

    bool operator==(const AnnCensus&) const = default;
};

AnnCensus annihilator_census(const RingElem& x, const RingSpec& r, const Budget& budget = {});

/// Walks all ring elements in codec order without re-decoding each index.
class ElementEnumerator {
public:
    ElementEnumerator(const RingSpec& r, const Budget& budget = {});

    bool valid() const { return index_ < order_; }
    void next();
    const RingElem& current() const { return elem_; }
    std::uint64_t index() const { return index_; }

private:
    const RingSpec& ring_;
    std::uint64_t order_;
    std::uint64_t index_ = 0;
    RingElem elem_;
};

} // namespace zdg

#endif // ZDG_MATRING_HPP
