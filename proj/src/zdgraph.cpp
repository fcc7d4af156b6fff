#include "zdg/zdgraph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

#include "zdg/errors.hpp"
#include "zdg/parallel.hpp"

namespace zdg {

namespace {

constexpr std::size_t kWordBits = 64;

inline void set_bit(std::uint64_t* row, std::size_t i) {
    row[i / kWordBits] |= std::uint64_t(1) << (i % kWordBits);
}

inline bool test_bit(const std::uint64_t* row, std::size_t i) {
    return (row[i / kWordBits] >> (i % kWordBits)) & 1;
}

template <typename Fn>
void for_each_bit(const std::uint64_t* row, std::size_t words, Fn&& fn) {
    for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
            unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
            fn(w * kWordBits + b);
            bits &= bits - 1;
        }
    }
}

} // namespace

ZDGraph::ZDGraph(RingSpec ring, const Budget& budget, unsigned workers) : ring_(std::move(ring)) {
    // Reject over-budget graphs before any enumeration.
    Count expected = ring_.vertex_count();
    if (expected > Count(budget.max_vertices)) {
        throw resource_limit("graph for " + ring_.to_string() + " would have " +
                             expected.get_str() + " vertices, budget is " +
                             std::to_string(budget.max_vertices));
    }
    (void)ring_.order_within(budget);

    for (ElementEnumerator it(ring_, budget); it.valid(); it.next()) {
        VertexClass c = rank_profile(it.current(), ring_);
        bool all_zero = true, all_full = true;
        for (std::size_t i = 0; i < c.ks.size(); ++i) {
            if (c.ks[i] != 0) all_zero = false;
            if (c.ks[i] != ring_.factors[i].n) all_full = false;
        }
        if (all_zero || all_full) continue; // zero element or unit
        indices_.push_back(it.index());
        elems_.push_back(it.current());
        classes_.push_back(std::move(c));
    }
    if (Count(indices_.size()) != expected) {
        throw internal_error("vertex scan found " + std::to_string(indices_.size()) +
                             " vertices, counting predicts " + expected.get_str());
    }

    const std::size_t v = elems_.size();
    words_ = (v + kWordBits - 1) / kWordBits;
    degrees_.assign(v, 0);
    if (v == 0) return;

    if (v <= budget.dense_threshold) {
        adj_.assign(v * words_, 0);
        // Each worker fills complete rows for its source range; the pair
        // (u, w) is tested from both sides, which keeps writes row-local.
        parallel_chunks(v, workers, [&](unsigned, std::size_t begin, std::size_t end) {
            for (std::size_t u = begin; u < end; ++u) {
                std::uint64_t* row = adj_.data() + u * words_;
                std::uint32_t deg = 0;
                for (std::size_t w = 0; w < v; ++w) {
                    if (w == u) continue;
                    if (ring_product_is_zero(elems_[u], elems_[w], ring_) ||
                        ring_product_is_zero(elems_[w], elems_[u], ring_)) {
                        set_bit(row, w);
                        ++deg;
                    }
                }
                degrees_[u] = deg;
            }
        });
    } else {
        parallel_chunks(v, workers, [&](unsigned, std::size_t begin, std::size_t end) {
            for (std::size_t u = begin; u < end; ++u) {
                std::uint32_t deg = 0;
                for (std::size_t w = 0; w < v; ++w) {
                    if (w != u && adjacent(u, w)) ++deg;
                }
                degrees_[u] = deg;
            }
        });
    }
}

bool ZDGraph::adjacent(std::size_t u, std::size_t v) const {
    if (u == v) return false;
    if (dense()) return test_bit(dense_row(u), v);
    return ring_product_is_zero(elems_[u], elems_[v], ring_) ||
           ring_product_is_zero(elems_[v], elems_[u], ring_);
}

std::size_t ZDGraph::degree(std::size_t v) const {
    if (v >= degrees_.size()) {
        throw invalid_parameter("degree: vertex id out of range");
    }
    return degrees_[v];
}

void ZDGraph::fill_row(std::size_t u, std::uint64_t* row) const {
    const std::size_t v = vertex_count();
    std::fill(row, row + words_, 0);
    if (dense()) {
        const std::uint64_t* src = dense_row(u);
        std::copy(src, src + words_, row);
        return;
    }
    for (std::size_t w = 0; w < v; ++w) {
        if (w != u && adjacent(u, w)) set_bit(row, w);
    }
}

ZDGraph build_graph(const RingSpec& r, const Budget& budget, unsigned workers) {
    return ZDGraph(r, budget, workers);
}

OracleSummary oracle_summary(const ZDGraph& g, unsigned workers) {
    const std::size_t v = g.vertex_count();
    const std::size_t words = g.words_per_row();
    OracleSummary s;
    s.transmission.assign(v, 0);
    s.d3_from.assign(v, 0);
    s.histogram = DistanceSummary{0, 0, 0, 0};
    s.wiener = 0;
    if (v == 0) return s;

    unsigned nworkers = resolve_workers(workers, v);
    std::vector<std::uint64_t> part_d1(nworkers, 0), part_d2(nworkers, 0), part_d3(nworkers, 0);
    std::vector<std::string> failure(nworkers);

    parallel_chunks(v, nworkers, [&](unsigned worker, std::size_t begin, std::size_t end) {
        std::vector<std::uint64_t> row(words), two(words), seen(words), nbr(words);
        for (std::size_t u = begin; u < end; ++u) {
            g.fill_row(u, row.data());
            // seen = {u} + neighbors
            std::copy(row.begin(), row.end(), seen.begin());
            set_bit(seen.data(), u);
            std::fill(two.begin(), two.end(), 0);
            std::uint64_t c1 = 0;
            for_each_bit(row.data(), words, [&](std::size_t w) {
                ++c1;
                if (g.dense()) {
                    const std::uint64_t* wrow = g.dense_row(w);
                    for (std::size_t i = 0; i < words; ++i) two[i] |= wrow[i];
                } else {
                    g.fill_row(w, nbr.data());
                    for (std::size_t i = 0; i < words; ++i) two[i] |= nbr[i];
                }
            });
            std::uint64_t c2 = 0;
            for (std::size_t i = 0; i < words; ++i) {
                two[i] &= ~seen[i];
                c2 += static_cast<std::uint64_t>(__builtin_popcountll(two[i]));
                seen[i] |= two[i];
            }
            // Whatever is left must be adjacent to a distance-2 vertex.
            std::uint64_t c3 = 0;
            bool bad = false;
            for (std::size_t i = 0; i < words && !bad; ++i) {
                std::uint64_t rest =
                    ~seen[i] & (i + 1 < words || v % kWordBits == 0
                                    ? ~std::uint64_t(0)
                                    : (std::uint64_t(1) << (v % kWordBits)) - 1);
                std::uint64_t bits = rest;
                while (bits) {
                    unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
                    bits &= bits - 1;
                    std::size_t t = i * kWordBits + b;
                    bool hit = false;
                    if (g.dense()) {
                        const std::uint64_t* trow = g.dense_row(t);
                        for (std::size_t j = 0; j < words; ++j) {
                            if (trow[j] & two[j]) {
                                hit = true;
                                break;
                            }
                        }
                    } else {
                        for_each_bit(two.data(), words, [&](std::size_t w) {
                            if (!hit && g.adjacent(t, w)) hit = true;
                        });
                    }
                    if (!hit) {
                        failure[worker] = "vertex " + std::to_string(t) +
                                          " is beyond distance 3 from vertex " + std::to_string(u);
                        bad = true;
                        break;
                    }
                    ++c3;
                }
            }
            if (bad) return;
            s.transmission[u] = c1 + 2 * c2 + 3 * c3;
            s.d3_from[u] = c3;
            part_d1[worker] += c1;
            part_d2[worker] += c2;
            part_d3[worker] += c3;
        }
    });

    for (const auto& msg : failure) {
        if (!msg.empty()) throw internal_error("oracle_summary: " + msg);
    }
    std::uint64_t d1 = 0, d2 = 0, d3 = 0;
    for (unsigned t = 0; t < nworkers; ++t) {
        d1 += part_d1[t];
        d2 += part_d2[t];
        d3 += part_d3[t];
    }
    s.histogram.d1 = Count(d1);
    s.histogram.d2 = Count(d2);
    s.histogram.d3 = Count(d3);
    s.histogram.unreachable = 0;
    if (Count(d1) + d2 + d3 != Count(v) * (v - 1)) {
        throw internal_error("oracle_summary: distance histogram does not cover all pairs");
    }
    Count doubled = 0;
    for (std::uint64_t t : s.transmission) doubled += t;
    s.wiener = halve_even(doubled);
    return s;
}

std::vector<unsigned> distances_from(const ZDGraph& g, std::size_t v) {
    const std::size_t n = g.vertex_count();
    if (v >= n) {
        throw invalid_parameter("distances_from: vertex id out of range");
    }
    constexpr unsigned kUnset = ~0u;
    std::vector<unsigned> dist(n, kUnset);
    dist[v] = 0;
    std::queue<std::size_t> queue;
    queue.push(v);
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop();
        for (std::size_t w = 0; w < n; ++w) {
            if (dist[w] == kUnset && g.adjacent(u, w)) {
                dist[w] = dist[u] + 1;
                queue.push(w);
            }
        }
    }
    for (std::size_t w = 0; w < n; ++w) {
        if (dist[w] == kUnset) {
            throw internal_error("distances_from: vertex " + std::to_string(w) +
                                 " unreachable from " + std::to_string(v));
        }
        if (dist[w] > 3) {
            throw internal_error("distances_from: distance " + std::to_string(dist[w]) +
                                 " exceeds diameter bound 3");
        }
    }
    return dist;
}

Count wiener_oracle(const ZDGraph& g, unsigned workers) {
    return oracle_summary(g, workers).wiener;
}

TransmissionTable transmission_table(const ZDGraph& g, unsigned workers) {
    OracleSummary s = oracle_summary(g, workers);
    TransmissionTable table;
    table.per_vertex.reserve(s.transmission.size());
    std::map<std::uint64_t, std::uint64_t> multi;
    for (std::uint64_t t : s.transmission) {
        table.per_vertex.emplace_back(t);
        ++multi[t];
    }
    table.distinct.reserve(multi.size());
    for (const auto& [value, count] : multi) {
        table.distinct.emplace_back(Count(value), count);
    }
    return table;
}

Count wiener_complexity_oracle(const ZDGraph& g, unsigned workers) {
    return Count(transmission_table(g, workers).distinct.size());
}

DistanceSummary distance_histogram(const ZDGraph& g, unsigned workers) {
    return oracle_summary(g, workers).histogram;
}

unsigned classify_distance(const RingSpec& r, const RingElem& a, const RingElem& b) {
    if (classify_element(a, r) != ElementKind::zero_divisor ||
        classify_element(b, r) != ElementKind::zero_divisor) {
        throw invalid_parameter("classify_distance: inputs must be nonzero zero divisors");
    }
    if (a == b) {
        throw invalid_parameter("classify_distance: inputs must be distinct");
    }
    if (ring_product_is_zero(a, b, r) || ring_product_is_zero(b, a, r)) {
        return 1;
    }
    bool unit_in_every_slot = true;
    bool shared_nonzero_slot = false;
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
        const FieldSpec& f = r.factors[i].field;
        const unsigned n = r.factors[i].n;
        bool a_unit = mat_rank(a.parts[i], f) == n;
        bool b_unit = mat_rank(b.parts[i], f) == n;
        if (!a_unit && !b_unit) unit_in_every_slot = false;
        if (!a.parts[i].is_zero() && !b.parts[i].is_zero()) shared_nonzero_slot = true;
    }
    if (unit_in_every_slot && shared_nonzero_slot) return 3;
    return 2;
}

} // namespace zdg
