#ifndef ZDG_VERIFY_HPP
#define ZDG_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "zdg/matring.hpp"
#include "zdg/zdgraph.hpp"

namespace zdg {

/// One formula-versus-oracle comparison.
struct QuantityRecord {
    std::string name;
    std::string formula;
    std::string oracle;
    bool match = false;
};

/// Structured result of cross-checking every closed form against the graph
/// oracle for one ring.
struct VerifyReport {
    std::string ring; ///< canonical spec string (factors sorted by (n, q))
    Count vertices;
    std::vector<QuantityRecord> quantities;
    std::vector<std::string> formula_mismatch; ///< names of failed records
    bool pass = false;
    double parse_ms = 0, formula_ms = 0, graph_ms = 0, oracle_ms = 0, total_ms = 0;

    nlohmann::ordered_json to_json() const;
};

/// Compare wiener, the distance histogram, n2, per-class sizes, degrees and
/// transmissions, and the complexity (exact for one factor, bound otherwise)
/// between the closed forms and the brute-force graph.
VerifyReport run_verify(const RingSpec& r, const Budget& budget = {}, unsigned workers = 0);

/// All ring specs (canonical factor order, bare fields excluded since their
/// graphs are empty) whose vertex count is at most max_vertices, in
/// deterministic enumeration order.
std::vector<RingSpec> enumerate_rings(std::uint64_t max_vertices);

/// One sweep table row, extracted from a verify report.
struct SweepRow {
    std::string ring;
    std::string vertices;
    std::string wiener_formula;
    std::string wiener_oracle;
    std::string complexity_oracle;
    std::string complexity_bound;
    std::string d3;
    std::string n2;
    bool pass = false;
    std::uint64_t ms = 0;
};

SweepRow sweep_row(const VerifyReport& report);
void write_sweep_header(std::ostream& out);
void write_sweep_row(std::ostream& out, const SweepRow& row);

/// CSV sweep over enumerate_rings: one verified row per ring. Returns the
/// number of rings whose verification failed.
std::size_t run_sweep(std::ostream& out, std::uint64_t max_vertices, const Budget& budget = {},
                      unsigned workers = 0);

} // namespace zdg

#endif // ZDG_VERIFY_HPP
