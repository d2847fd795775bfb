// Command-line front end: bound reports, edge colouring runs, line-graph
// translation, quasi-line decomposition colouring, brute-force oracles and a
// scaling benchmark over seeded random multigraphs.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "locol/decomposition.hpp"
#include "locol/errors.hpp"
#include "locol/extend.hpp"
#include "locol/generate.hpp"
#include "locol/line_graph.hpp"
#include "locol/oracle.hpp"

namespace {

using namespace locol;

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot write " + path);
    return file;
}

double half(std::int64_t doubled) { return static_cast<double>(doubled) / 2.0; }

int cmd_bound(const std::string& path, bool csv, const std::string& out_path) {
    Multigraph g = Multigraph::load(path);
    EdgeBoundReport report = local_edge_bound(g);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    if (csv) {
        out << "edge,u,v,term_u,term_v,term_t\n";
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.endpoints(e);
            const EdgeTerms& t = report.terms[e];
            out << e << ',' << u << ',' << v << ',' << half(t.term_u2) << ','
                << half(t.term_v2) << ',' << half(t.term_t2) << '\n';
        }
    }
    out << "gamma " << report.gamma;
    if (report.argmax_edge >= 0) out << " argmax-edge " << report.argmax_edge;
    out << '\n';
    return 0;
}

TraceSink stderr_trace() {
    return [](const TraceEvent& ev) {
        switch (ev.kind) {
            case TraceEvent::kRotate:
                std::cerr << "t rotate edge=" << ev.a << " chain=" << ev.b << '\n';
                break;
            case TraceEvent::kKempeSwap:
                std::cerr << "t swap a=" << ev.a << " b=" << ev.b << " edges=" << ev.c << '\n';
                break;
            case TraceEvent::kChainStep:
                std::cerr << "t chain step=" << ev.a << " edge=" << ev.b << " colour=" << ev.c
                          << '\n';
                break;
            case TraceEvent::kCycleClose:
                std::cerr << "t cycle length=" << ev.a << '\n';
                break;
            case TraceEvent::kExtend:
                std::cerr << "t extend edge=" << ev.a << " colour=" << ev.b << '\n';
                break;
        }
    };
}

int cmd_edge_color(const std::string& path, int k_override, const std::string& order,
                   std::uint64_t seed, bool trace, bool verify, const std::string& out_path) {
    Multigraph g = Multigraph::load(path);
    EdgeBoundReport report = local_edge_bound(g);
    int k = k_override > 0 ? k_override : report.gamma;
    std::vector<int> insertion;
    if (order == "random") insertion = random_edge_order(g.edge_count(), seed);
    TraceSink sink;
    if (trace) sink = stderr_trace();
    PartialEdgeColouring colouring = edge_colour(g, k, insertion, trace ? &sink : nullptr);

    bool proper = !colouring.validate().has_value();
    if (verify) {
        if (!proper) throw InvariantViolation("edge colouring failed validation");
        try {
            int chi = chromatic_index_bf(g);
            if (chi > colouring.used_colour_count())
                throw InvariantViolation("edge colouring beat the exact chromatic index");
            std::cerr << "verify chi-prime " << chi << '\n';
        } catch (const GuardExceeded&) {
            std::cerr << "verify skipped (above oracle guard)\n";
        }
    }
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    colouring.write(out);
    out << "colours " << colouring.used_colour_count() << " gamma " << report.gamma << " proper "
        << (proper ? "ok" : "BROKEN") << '\n';
    return proper ? 0 : 3;
}

int cmd_line_graph(const std::string& path, const std::string& colour_path,
                   const std::string& out_path) {
    Multigraph g = Multigraph::load(path);
    SimpleGraph l = line_graph(g);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    l.write(out);
    if (!colour_path.empty()) {
        std::vector<int> colours = vertex_colour_line_graph(g);
        std::ofstream cfile(colour_path);
        if (!cfile) throw std::runtime_error("cannot write " + colour_path);
        write_vertex_colouring(colours, cfile);
        int used = 0;
        for (int c : colours) used = std::max(used, c + 1);
        out << "colours " << used << '\n';
    }
    return 0;
}

int cmd_quasiline(const std::string& path, const std::string& out_path) {
    DecompositionTree tree = load_qltree(path);
    DecompositionColouring result = colour_decomposition(tree);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    write_vertex_colouring(result.colour, out);
    SimpleGraph root = tree_graph(tree, tree.root());
    bool proper = proper_vertex_colouring(root, result.colour);
    out << "colours " << result.used << " palette " << result.palette << " proper "
        << (proper ? "ok" : "BROKEN") << '\n';
    return proper ? 0 : 3;
}

int cmd_oracle(const std::string& what, const std::string& path) {
    if (what == "chi-prime") {
        std::cout << "chi-prime " << chromatic_index_bf(Multigraph::load(path)) << '\n';
    } else if (what == "chi") {
        std::cout << "chi " << chromatic_number_bf(SimpleGraph::load(path)) << '\n';
    } else if (what == "gamma-l") {
        std::cout << "gamma-l " << local_vertex_bound_bf(SimpleGraph::load(path)) << '\n';
    } else {
        throw std::invalid_argument("oracle expects chi-prime, chi or gamma-l");
    }
    return 0;
}

double time_colour_ms(const Multigraph& g) {
    auto start = std::chrono::steady_clock::now();
    auto [colouring, report] = edge_colour_optimal_local(g);
    auto stop = std::chrono::steady_clock::now();
    if (colouring.validate().has_value())
        throw InvariantViolation("benchmark run produced an improper colouring");
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

int cmd_bench(const std::vector<int>& sizes, std::uint64_t seed, int runs, int jobs,
              const std::string& out_path) {
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    out << "m,median_ms\n";
    for (int m : sizes) {
        std::vector<double> times(runs, 0.0);
        std::vector<Multigraph> graphs;
        graphs.reserve(runs);
        for (int r = 0; r < runs; ++r)
            graphs.push_back(bench_multigraph(m, seed + static_cast<std::uint64_t>(r)));
        if (jobs <= 1) {
            for (int r = 0; r < runs; ++r) times[r] = time_colour_ms(graphs[r]);
        } else {
            std::vector<std::thread> pool;
            std::size_t next = 0;
            std::mutex mutex;
            for (int t = 0; t < jobs; ++t)
                pool.emplace_back([&] {
                    for (;;) {
                        std::size_t mine;
                        {
                            std::lock_guard<std::mutex> lock(mutex);
                            if (next >= times.size()) return;
                            mine = next++;
                        }
                        times[mine] = time_colour_ms(graphs[mine]);
                    }
                });
            for (auto& th : pool) th.join();
        }
        std::sort(times.begin(), times.end());
        double median = times[times.size() / 2];
        out << m << ',' << median << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge and quasi-line graph colouring within local degree bounds"};
    app.require_subcommand(1);

    std::string path, out_path, colour_path, order = "input", oracle_what;
    std::uint64_t seed = 0;
    bool csv = false, trace = false, verify = false;
    int k_override = 0, runs = 5, jobs = 1;
    std::vector<int> bench_sizes{1000, 2000, 4000};
    bool seed_given = false;

    auto* bound = app.add_subcommand("bound", "local bound report for a multigraph");
    bound->add_option("input", path)->required();
    bound->add_flag("--csv", csv, "per-edge terms as CSV");
    bound->add_option("-o,--output", out_path);

    auto* ec = app.add_subcommand("edge-color", "colour a multigraph within the local bound");
    ec->add_option("input", path)->required();
    ec->add_option("--k", k_override, "palette override (default: the local bound)");
    ec->add_option("--order", order)->check(CLI::IsMember({"input", "random"}));
    ec->add_option("--seed", seed)->each([&](const std::string&) { seed_given = true; });
    ec->add_flag("--trace", trace, "line-delimited rotation/swap events on stderr");
    ec->add_flag("--verify", verify, "revalidate and compare with the exact oracle");
    ec->add_option("-o,--output", out_path);

    auto* lg = app.add_subcommand("line-graph", "emit the line graph, optionally coloured");
    lg->add_option("input", path)->required();
    lg->add_option("--color", colour_path, "also write a vertex colouring here");
    lg->add_option("-o,--output", out_path);

    auto* ql = app.add_subcommand("quasiline", "colour an explicitly decomposed quasi-line graph");
    ql->add_option("input", path)->required();
    ql->add_option("-o,--output", out_path);

    auto* orc = app.add_subcommand("oracle", "exact brute-force values at desk scale");
    orc->add_option("what", oracle_what)->required()->check(CLI::IsMember({"chi-prime", "chi", "gamma-l"}));
    orc->add_option("input", path)->required();

    auto* bench = app.add_subcommand("bench", "seeded scaling ladder, median wall time per size");
    bench->add_option("--sizes", bench_sizes, "edge counts");
    bench->add_option("--seed", seed);
    bench->add_option("--runs", runs)->check(CLI::PositiveNumber);
    bench->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    bench->add_option("-o,--output", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (bound->parsed()) return cmd_bound(path, csv, out_path);
        if (ec->parsed()) {
            if (order == "random" && !seed_given)
                throw std::invalid_argument("--order random requires --seed");
            return cmd_edge_color(path, k_override, order, seed, trace, verify, out_path);
        }
        if (lg->parsed()) return cmd_line_graph(path, colour_path, out_path);
        if (ql->parsed()) return cmd_quasiline(path, out_path);
        if (orc->parsed()) return cmd_oracle(oracle_what, path);
        if (bench->parsed()) return cmd_bench(bench_sizes, seed, runs, jobs, out_path);
    } catch (const InfeasiblePalette& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const GuardExceeded& e) {
        std::cerr << "guard: " << e.what() << '\n';
        return 2;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal invariant violated: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
