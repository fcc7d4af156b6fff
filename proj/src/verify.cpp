#include "zdg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <set>

#include "zdg/errors.hpp"
#include "zdg/formulas.hpp"
#include "zdg/qcount.hpp"

namespace zdg {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct ClassStats {
    std::uint64_t size = 0;
    std::set<std::uint64_t> degrees;
    std::set<std::uint64_t> transmissions;
    std::set<std::uint64_t> d3_counts;
};

std::string value_or_mixed(const std::set<std::uint64_t>& values) {
    if (values.size() == 1) return std::to_string(*values.begin());
    std::string s = "mixed{";
    bool first = true;
    for (auto v : values) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

void add_record(VerifyReport& report, std::string name, std::string formula, std::string oracle,
                bool match) {
    if (!match) report.formula_mismatch.push_back(name);
    report.quantities.push_back({std::move(name), std::move(formula), std::move(oracle), match});
}

void add_record(VerifyReport& report, std::string name, const Count& formula,
                const Count& oracle) {
    add_record(report, std::move(name), formula.get_str(), oracle.get_str(), formula == oracle);
}

} // namespace

VerifyReport run_verify(const RingSpec& r, const Budget& budget, unsigned workers) {
    const auto t_total = Clock::now();
    VerifyReport report;
    report.ring = r.canonical_key();

    const auto t_formula = Clock::now();
    WienerResult wr = wiener_semisimple(r);
    const Count bound = complexity_upper_bound(r);

    // Expected classes with their predicted sizes: every rank tuple except
    // all-zero and all-full, split by the square-zero flag where possible.
    std::map<VertexClass, Count> expected_classes;
    {
        const std::size_t l = r.factors.size();
        std::vector<unsigned> ks(l, 0);
        while (true) {
            bool all_zero = true, all_full = true;
            for (std::size_t i = 0; i < l; ++i) {
                if (ks[i] != 0) all_zero = false;
                if (ks[i] != r.factors[i].n) all_full = false;
            }
            if (!all_zero && !all_full) {
                for (bool sq : {false, true}) {
                    VertexClass c{ks, sq};
                    Count size = class_size_formula(r, c);
                    if (size > 0) expected_classes.emplace(std::move(c), std::move(size));
                }
            }
            std::size_t i = 0;
            while (i < l && ++ks[i] > r.factors[i].n) ks[i++] = 0;
            if (i == l) break;
        }
    }
    report.formula_ms = ms_since(t_formula);

    const auto t_graph = Clock::now();
    ZDGraph graph = build_graph(r, budget, workers);
    report.graph_ms = ms_since(t_graph);

    const auto t_oracle = Clock::now();
    OracleSummary summary = oracle_summary(graph, workers);
    report.oracle_ms = ms_since(t_oracle);

    const std::size_t v = graph.vertex_count();
    report.vertices = Count(v);

    std::map<VertexClass, ClassStats> observed;
    std::uint64_t n2_observed = 0;
    for (std::size_t u = 0; u < v; ++u) {
        ClassStats& stats = observed[graph.class_of(u)];
        ++stats.size;
        stats.degrees.insert(graph.degree(u));
        stats.transmissions.insert(summary.transmission[u]);
        stats.d3_counts.insert(summary.d3_from[u]);
        if (graph.class_of(u).squarezero) ++n2_observed;
    }

    add_record(report, "vertices", r.vertex_count(), Count(v));
    add_record(report, "wiener", wr.wiener, summary.wiener);
    add_record(report, "d1", wr.d1, summary.histogram.d1);
    add_record(report, "d2", wr.d2, summary.histogram.d2);
    add_record(report, "d3", wr.d3, summary.histogram.d3);
    add_record(report, "n2", wr.n2, Count(n2_observed));

    // Per-class records, over expected and observed classes together so a
    // class missing on either side shows up as a size mismatch.
    std::set<VertexClass> all_classes;
    for (const auto& [c, size] : expected_classes) all_classes.insert(c);
    for (const auto& [c, stats] : observed) all_classes.insert(c);
    const Count z = r.zero_divisor_count();
    for (const auto& c : all_classes) {
        const std::string tag = "[" + c.to_string() + "]";
        auto exp_it = expected_classes.find(c);
        Count expected_size = exp_it == expected_classes.end() ? Count(0) : exp_it->second;
        auto obs_it = observed.find(c);
        if (obs_it == observed.end()) {
            add_record(report, "size" + tag, expected_size, Count(0));
            continue;
        }
        const ClassStats& stats = obs_it->second;
        add_record(report, "size" + tag, expected_size, Count(stats.size));

        Count deg = degree_formula(r, c);
        bool deg_match = stats.degrees.size() == 1 && Count(*stats.degrees.begin()) == deg;
        add_record(report, "degree" + tag, deg.get_str(), value_or_mixed(stats.degrees),
                   deg_match);

        // Transmission: 2(|Z|-2) - degree + (distance-3 targets). The last
        // term has no closed form for products; it is read off the oracle,
        // which must at least agree on it within the class.
        if (stats.d3_counts.size() != 1 || stats.transmissions.size() != 1) {
            add_record(report, "transmission" + tag, "class not uniform",
                       value_or_mixed(stats.transmissions), false);
        } else {
            Count tr_formula = 2 * (z - 2) - deg + Count(*stats.d3_counts.begin());
            if (r.factors.size() == 1) {
                tr_formula = transmission_simple(r.factors[0].n, r.factors[0].field.q, c.ks[0],
                                                 c.squarezero);
            }
            add_record(report, "transmission" + tag, tr_formula,
                       Count(*stats.transmissions.begin()));
        }
    }

    // Complexity: exact in the single-factor case, upper bound otherwise.
    std::set<std::uint64_t> distinct(summary.transmission.begin(), summary.transmission.end());
    Count complexity(distinct.size());
    if (r.factors.size() == 1 && r.factors[0].n >= 2) {
        add_record(report, "wiener_complexity", wiener_complexity_simple(r.factors[0].n),
                   complexity);
    }
    add_record(report, "complexity_bound", bound.get_str(), complexity.get_str(),
               complexity <= bound);

    report.pass = report.formula_mismatch.empty();
    report.total_ms = ms_since(t_total);
    return report;
}

nlohmann::ordered_json VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["ring"] = ring;
    j["vertices"] = vertices.get_str();
    auto records = nlohmann::ordered_json::array();
    for (const auto& q : quantities) {
        records.push_back({{"name", q.name},
                           {"formula", q.formula},
                           {"oracle", q.oracle},
                           {"match", q.match}});
    }
    j["quantities"] = std::move(records);
    j["formula_mismatch"] = formula_mismatch;
    j["verdict"] = pass ? "pass" : "fail";
    j["timings"] = {{"parse_ms", parse_ms},
                    {"formula_ms", formula_ms},
                    {"graph_ms", graph_ms},
                    {"oracle_ms", oracle_ms},
                    {"total_ms", total_ms}};
    return j;
}

namespace {

// Candidate factors for the sweep, ordered by (n, q).
std::vector<std::pair<unsigned, std::uint64_t>> sweep_factor_pool(std::uint64_t max_vertices) {
    std::vector<std::pair<unsigned, std::uint64_t>> pool;
    for (unsigned n = 1;; ++n) {
        // Smallest graph containing an M_n(GF(2)) factor: the factor alone
        // for n >= 2, or paired with another M_1(GF(2)) for n == 1.
        Count smallest = n == 1 ? Count(2)
                                : ipow(2, std::uint64_t(n) * n) - gl_order(n, 2) - 1;
        if (smallest > Count(max_vertices)) break;
        for (std::uint64_t q = 2;; ++q) {
            std::uint64_t p;
            unsigned m;
            if (!prime_power(q, p, m)) continue;
            // Cheapest completion of a ring containing M_n(GF(q)): alone for
            // n >= 2, with an extra M_1(GF(2)) factor for n == 1 (vertex
            // count q in that case).
            Count cheapest = n == 1 ? Count(q)
                                    : ipow(q, std::uint64_t(n) * n) - gl_order(n, q) - 1;
            if (cheapest > Count(max_vertices)) break;
            pool.emplace_back(n, q);
        }
    }
    std::sort(pool.begin(), pool.end());
    return pool;
}

void extend_ring(const std::vector<std::pair<unsigned, std::uint64_t>>& pool,
                 std::vector<std::pair<unsigned, std::uint64_t>>& current, std::size_t min_index,
                 std::uint64_t max_vertices, std::vector<std::vector<std::pair<unsigned, std::uint64_t>>>& out) {
    for (std::size_t i = min_index; i < pool.size(); ++i) {
        current.push_back(pool[i]);
        Count order = 1, units = 1;
        for (const auto& [n, q] : current) {
            order *= ipow(q, std::uint64_t(n) * n);
            units *= gl_order(n, q);
        }
        Count vertices = order - units - 1;
        // Appending factors never shrinks the vertex count, so an over-budget
        // prefix is not extended. Iteration over later pool entries continues:
        // vertex count is not monotone in (n, q) order across different n.
        if (vertices <= Count(max_vertices)) {
            bool bare_field = current.size() == 1 && current[0].first == 1;
            if (!bare_field) out.push_back(current);
            extend_ring(pool, current, i, max_vertices, out);
        }
        current.pop_back();
    }
}

} // namespace

std::vector<RingSpec> enumerate_rings(std::uint64_t max_vertices) {
    auto pool = sweep_factor_pool(max_vertices);
    std::vector<std::vector<std::pair<unsigned, std::uint64_t>>> shapes;
    std::vector<std::pair<unsigned, std::uint64_t>> current;
    extend_ring(pool, current, 0, max_vertices, shapes);
    std::vector<RingSpec> rings;
    rings.reserve(shapes.size());
    for (const auto& shape : shapes) {
        std::string text;
        for (std::size_t i = 0; i < shape.size(); ++i) {
            if (i > 0) text += "x";
            text += "M" + std::to_string(shape[i].first) + "(" + std::to_string(shape[i].second) +
                    ")";
        }
        rings.push_back(parse_ring_spec(text));
    }
    return rings;
}

SweepRow sweep_row(const VerifyReport& report) {
    SweepRow row;
    row.ring = report.ring;
    row.vertices = report.vertices.get_str();
    row.pass = report.pass;
    row.ms = static_cast<std::uint64_t>(report.total_ms);
    for (const auto& q : report.quantities) {
        if (q.name == "wiener") {
            row.wiener_formula = q.formula;
            row.wiener_oracle = q.oracle;
        } else if (q.name == "d3") {
            row.d3 = q.formula;
        } else if (q.name == "n2") {
            row.n2 = q.formula;
        } else if (q.name == "complexity_bound") {
            row.complexity_bound = q.formula;
            row.complexity_oracle = q.oracle;
        }
    }
    return row;
}

void write_sweep_header(std::ostream& out) {
    out << "ring,vertices,wiener_formula,wiener_oracle,complexity_oracle,complexity_bound,d3,n2,"
           "verdict,ms\n";
}

void write_sweep_row(std::ostream& out, const SweepRow& row) {
    out << row.ring << "," << row.vertices << "," << row.wiener_formula << ","
        << row.wiener_oracle << "," << row.complexity_oracle << "," << row.complexity_bound << ","
        << row.d3 << "," << row.n2 << "," << (row.pass ? "pass" : "fail") << "," << row.ms << "\n";
}

std::size_t run_sweep(std::ostream& out, std::uint64_t max_vertices, const Budget& budget,
                      unsigned workers) {
    write_sweep_header(out);
    std::size_t failures = 0;
    for (const RingSpec& r : enumerate_rings(max_vertices)) {
        VerifyReport report = run_verify(r, budget, workers);
        if (!report.pass) ++failures;
        write_sweep_row(out, sweep_row(report));
    }
    return failures;
}

} // namespace zdg
