#ifndef ZDG_ZDGRAPH_HPP
#define ZDG_ZDGRAPH_HPP

#include <cstdint>
#include <vector>

#include "zdg/count.hpp"
#include "zdg/matring.hpp"

namespace zdg {

/// Ordered vertex pairs grouped by distance. unreachable is 0 on every
/// product-of-matrix-rings input.
struct DistanceSummary {
    Count d1, d2, d3;
    Count unreachable;
};

/// Per-vertex transmissions plus the multiset of distinct values.
struct TransmissionTable {
    std::vector<Count> per_vertex;
    /// (value, multiplicity), ascending by value.
    std::vector<std::pair<Count, std::uint64_t>> distinct;
};

/// The explicit zero-divisor graph of a ring: vertices are the nonzero zero
/// divisors in ascending element-index order, an edge joins x and y when
/// xy = 0 or yx = 0. Built entirely by direct ring multiplication; no
/// closed-form shortcut is ever consulted. Immutable after construction.
class ZDGraph {
public:
    ZDGraph(RingSpec ring, const Budget& budget, unsigned workers);

    const RingSpec& ring() const { return ring_; }
    std::size_t vertex_count() const { return elems_.size(); }
    std::uint64_t element_of(std::size_t v) const { return indices_[v]; }
    const RingElem& element(std::size_t v) const { return elems_[v]; }
    const VertexClass& class_of(std::size_t v) const { return classes_[v]; }

    bool dense() const { return !adj_.empty(); }
    std::size_t words_per_row() const { return words_; }

    bool adjacent(std::size_t u, std::size_t v) const;
    std::size_t degree(std::size_t v) const;

    /// Adjacency row of u as a bitset; for the dense representation this is
    /// a view, otherwise the row is recomputed by ring products.
    void fill_row(std::size_t u, std::uint64_t* row) const;
    const std::uint64_t* dense_row(std::size_t u) const { return adj_.data() + u * words_; }

private:
    RingSpec ring_;
    std::vector<std::uint64_t> indices_;
    std::vector<RingElem> elems_;
    std::vector<VertexClass> classes_;
    std::vector<std::uint32_t> degrees_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> adj_; // dense rows, empty above the threshold
};

ZDGraph build_graph(const RingSpec& r, const Budget& budget = {}, unsigned workers = 0);

/// Everything one sweep over the sources yields. Wiener and the histogram
/// come from the same per-source distance counts.
struct OracleSummary {
    std::vector<std::uint64_t> transmission; ///< per vertex
    std::vector<std::uint64_t> d3_from;      ///< per vertex: targets at distance 3
    DistanceSummary histogram;
    Count wiener;
};

/// Distance layers per source via bit-parallel neighborhood unions
/// (distance 2 as a union of neighbor rows, distance 3 by testing the
/// leftover set). Throws internal_error on any vertex beyond distance 3.
OracleSummary oracle_summary(const ZDGraph& g, unsigned workers = 0);

/// Plain breadth-first search from v; the reference distance path. Throws
/// internal_error if any vertex is unreachable or beyond distance 3.
std::vector<unsigned> distances_from(const ZDGraph& g, std::size_t v);

Count wiener_oracle(const ZDGraph& g, unsigned workers = 0);
TransmissionTable transmission_table(const ZDGraph& g, unsigned workers = 0);
Count wiener_complexity_oracle(const ZDGraph& g, unsigned workers = 0);
DistanceSummary distance_histogram(const ZDGraph& g, unsigned workers = 0);

/// Structural distance between two vertices, no search: 1 when a product
/// vanishes; 3 when every slot holds a unit on one side and some slot is
/// nonzero on both; 2 otherwise.
unsigned classify_distance(const RingSpec& r, const RingElem& a, const RingElem& b);

} // namespace zdg

#endif // ZDG_ZDGRAPH_HPP
