#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zdg/errors.hpp"
#include "zdg/formulas.hpp"
#include "zdg/graph_io.hpp"
#include "zdg/matring.hpp"
#include "zdg/polyrec.hpp"
#include "zdg/qcount.hpp"
#include "zdg/verify.hpp"
#include "zdg/zdgraph.hpp"

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Exit codes, stable across releases:
//   0 verified / success, 1 formula-oracle mismatch or internal defect,
//   2 usage, parse or I/O error, 3 resource limit exceeded.
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Options {
    std::string ring;
    std::string format = "edgelist";
    std::string out_path;
    std::string name;
    std::string ks;
    bool squarezero = false;
    bool csv = false;
    unsigned workers = 0;
    std::uint64_t max_vertices = 10;
    unsigned poly_n = 2;
    std::vector<std::uint64_t> eval_points;
};

class OutputSink {
public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) {
                throw zdg::io_error("cannot open output file '" + path + "'");
            }
        }
    }

    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

    void finish() {
        stream().flush();
        if (file_.is_open() && !file_) {
            throw zdg::io_error("write failed");
        }
    }

private:
    std::ofstream file_;
};

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

zdg::RingSpec parse_ring_arg(const Options& opt) {
    if (opt.ring.empty()) {
        throw zdg::invalid_parameter("missing ring spec (positional argument or --ring)");
    }
    return zdg::parse_ring_spec(opt.ring);
}

json formula_report(const zdg::RingSpec& ring, const Options& opt) {
    using namespace zdg;
    std::map<std::string, std::string> values;
    WienerResult wr = wiener_semisimple(ring);
    values["wiener"] = wr.wiener.get_str();
    values["vertices"] = ring.vertex_count().get_str();
    values["zero_divisors"] = wr.zero_divisors.get_str();
    values["units"] = ring.unit_count().get_str();
    values["ring_order"] = ring.order().get_str();
    values["d1_pairs"] = wr.d1.get_str();
    values["d2_pairs"] = wr.d2.get_str();
    values["d3_pairs"] = wr.d3.get_str();
    values["n2"] = wr.n2.get_str();
    values["t_value"] = wr.t_value.get_str();
    values["s_value"] = s_value(ring).get_str();
    values["complexity_bound"] = complexity_upper_bound(ring).get_str();
    if (ring.factors.size() == 1 && ring.factors[0].n >= 2) {
        values["wiener_complexity"] = wiener_complexity_simple(ring.factors[0].n).get_str();
    }
    if (!opt.ks.empty()) {
        VertexClass c;
        std::stringstream ss{opt.ks};
        std::string item;
        while (std::getline(ss, item, ',')) {
            c.ks.push_back(static_cast<unsigned>(std::stoul(item)));
        }
        c.squarezero = opt.squarezero;
        values["degree[" + c.to_string() + "]"] = degree_formula(ring, c).get_str();
        if (ring.factors.size() == 1) {
            values["transmission[" + c.to_string() + "]"] =
                transmission_simple(ring.factors[0].n, ring.factors[0].field.q, c.ks[0],
                                    c.squarezero)
                    .get_str();
        }
    }

    json j;
    j["ring"] = ring.canonical_key();
    if (!opt.name.empty()) {
        auto it = values.find(opt.name);
        if (it == values.end()) {
            throw zdg::invalid_parameter("unknown quantity '" + opt.name + "'");
        }
        j["quantities"] = {{it->first, it->second}};
    } else {
        json q;
        for (const auto& [name, value] : values) q[name] = value;
        j["quantities"] = std::move(q);
    }
    return j;
}

json oracle_report(const zdg::RingSpec& ring, const Options& opt) {
    using namespace zdg;
    const auto t0 = Clock::now();
    ZDGraph graph = build_graph(ring, Budget{}, opt.workers);
    const double graph_ms = ms_since(t0);
    const auto t1 = Clock::now();
    OracleSummary summary = oracle_summary(graph, opt.workers);
    const double oracle_ms = ms_since(t1);

    std::uint64_t edge_doubled = 0, n2 = 0;
    for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
        edge_doubled += graph.degree(u);
        if (graph.class_of(u).squarezero) ++n2;
    }
    struct Group {
        std::uint64_t size = 0;
        std::set<std::uint64_t> degrees, transmissions, d3;
    };
    std::map<VertexClass, Group> groups;
    for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
        Group& g = groups[graph.class_of(u)];
        ++g.size;
        g.degrees.insert(graph.degree(u));
        g.transmissions.insert(summary.transmission[u]);
        g.d3.insert(summary.d3_from[u]);
    }
    std::set<std::uint64_t> distinct(summary.transmission.begin(), summary.transmission.end());

    auto render_set = [](const std::set<std::uint64_t>& s) {
        json arr = json::array();
        for (auto v : s) arr.push_back(std::to_string(v));
        return arr;
    };

    json j;
    j["ring"] = ring.canonical_key();
    j["vertices"] = std::to_string(graph.vertex_count());
    j["edges"] = std::to_string(edge_doubled / 2);
    j["wiener"] = summary.wiener.get_str();
    j["wiener_complexity"] = std::to_string(distinct.size());
    j["distance_pairs"] = {{"d1", summary.histogram.d1.get_str()},
                           {"d2", summary.histogram.d2.get_str()},
                           {"d3", summary.histogram.d3.get_str()},
                           {"unreachable", summary.histogram.unreachable.get_str()}};
    j["n2"] = std::to_string(n2);
    json classes = json::array();
    for (const auto& [cls, g] : groups) {
        classes.push_back({{"class", cls.to_string()},
                           {"size", std::to_string(g.size)},
                           {"degree", render_set(g.degrees)},
                           {"transmission", render_set(g.transmissions)},
                           {"d3_from", render_set(g.d3)}});
    }
    j["classes"] = std::move(classes);
    j["timings"] = {{"graph_ms", graph_ms}, {"oracle_ms", oracle_ms}};
    return j;
}

json poly_report(const Options& opt) {
    using namespace zdg;
    RationalPoly poly = wiener_simple_polynomial(opt.poly_n);
    json j;
    j["n"] = opt.poly_n;
    j["degree"] = poly.degree();
    j["coefficients"] = poly.coefficient_strings();
    if (!opt.eval_points.empty()) {
        json evals = json::array();
        for (std::uint64_t q : opt.eval_points) {
            evals.push_back(
                {{"q", std::to_string(q)}, {"value", evaluate_polynomial(poly, Count(q)).get_str()}});
        }
        j["evaluations"] = std::move(evals);
    }
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"Zero-divisor graphs of finite semisimple rings: closed-form counts"
                 " cross-checked against a brute-force graph oracle"};
    app.require_subcommand(1);
    Options opt;

    auto add_ring = [&opt](CLI::App* cmd) {
        cmd->add_option("RING", opt.ring, "ring spec, e.g. M2(2)xM1(3)");
        cmd->add_option("--ring", opt.ring, "ring spec (alternative to the positional form)");
    };
    auto add_common = [&opt](CLI::App* cmd) {
        cmd->add_option("--workers", opt.workers,
                        "worker thread cap, 0 = hardware (never affects results)");
        cmd->add_option("--out", opt.out_path, "output file (default stdout)");
    };

    CLI::App* formula = app.add_subcommand("formula", "closed-form quantities for a ring");
    add_ring(formula);
    add_common(formula);
    formula->add_option("--name", opt.name, "print a single quantity");
    formula->add_option("--ks", opt.ks, "rank tuple for degree/transmission, e.g. 1,0");
    formula->add_flag("--squarezero", opt.squarezero, "square-zero class flag for --ks");

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force graph quantities for a ring");
    add_ring(oracle);
    add_common(oracle);

    CLI::App* verify = app.add_subcommand("verify", "cross-check formulas against the oracle");
    add_ring(verify);
    add_common(verify);

    CLI::App* sweep = app.add_subcommand("sweep", "verify every ring up to a vertex budget");
    add_common(sweep);
    sweep->add_option("--max-vertices", opt.max_vertices, "largest graph to include");
    sweep->add_flag("--csv", opt.csv, "CSV table instead of JSON");

    CLI::App* exp = app.add_subcommand("export", "write the graph to a file");
    add_ring(exp);
    add_common(exp);
    exp->add_option("FORMAT", opt.format, "edgelist, dot, or graphml");
    exp->add_option("--format", opt.format, "same as the positional format");

    CLI::App* poly = app.add_subcommand("poly", "reconstruct the Wiener polynomial in q");
    add_common(poly);
    poly->add_option("--n", opt.poly_n, "matrix size")->required();
    poly->add_option("--eval", opt.eval_points, "integer points to evaluate at");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    OutputSink sink(opt.out_path);

    if (formula->parsed()) {
        json j = formula_report(parse_ring_arg(opt), opt);
        sink.stream() << j.dump(2) << "\n";
    } else if (oracle->parsed()) {
        json j = oracle_report(parse_ring_arg(opt), opt);
        sink.stream() << j.dump(2) << "\n";
    } else if (verify->parsed()) {
        const auto t0 = Clock::now();
        zdg::RingSpec ring = parse_ring_arg(opt);
        double parse_ms = ms_since(t0);
        zdg::VerifyReport report = zdg::run_verify(ring, zdg::Budget{}, opt.workers);
        report.parse_ms = parse_ms;
        sink.stream() << report.to_json().dump(2) << "\n";
        sink.finish();
        return report.pass ? kExitOk : kExitMismatch;
    } else if (sweep->parsed()) {
        if (opt.csv) {
            std::size_t failures = zdg::run_sweep(sink.stream(), opt.max_vertices, zdg::Budget{},
                                                  opt.workers);
            sink.finish();
            return failures == 0 ? kExitOk : kExitMismatch;
        }
        json rows = json::array();
        std::size_t failures = 0;
        for (const zdg::RingSpec& r : zdg::enumerate_rings(opt.max_vertices)) {
            zdg::VerifyReport report = zdg::run_verify(r, zdg::Budget{}, opt.workers);
            if (!report.pass) ++failures;
            zdg::SweepRow row = zdg::sweep_row(report);
            rows.push_back({{"ring", row.ring},
                            {"vertices", row.vertices},
                            {"wiener_formula", row.wiener_formula},
                            {"wiener_oracle", row.wiener_oracle},
                            {"complexity_oracle", row.complexity_oracle},
                            {"complexity_bound", row.complexity_bound},
                            {"d3", row.d3},
                            {"n2", row.n2},
                            {"verdict", row.pass ? "pass" : "fail"},
                            {"ms", row.ms}});
        }
        sink.stream() << rows.dump(2) << "\n";
        sink.finish();
        return failures == 0 ? kExitOk : kExitMismatch;
    } else if (exp->parsed()) {
        zdg::RingSpec ring = parse_ring_arg(opt);
        zdg::ExportFormat format = zdg::parse_export_format(opt.format);
        zdg::ZDGraph graph = zdg::build_graph(ring, zdg::Budget{}, opt.workers);
        zdg::export_graph(sink.stream(), graph, format);
    } else if (poly->parsed()) {
        json j = poly_report(opt);
        sink.stream() << j.dump(2) << "\n";
    }

    sink.finish();
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const zdg::resource_limit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const zdg::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const zdg::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
