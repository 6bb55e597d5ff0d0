#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nk/chart.hpp"
#include "nk/csv.hpp"
#include "nk/harness.hpp"
#include "nk/oracle.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw usage_error("invalid integer list: " + csv);
        }
    }
    if (out.empty()) throw usage_error("empty integer list");
    return out;
}

std::vector<nk::Algorithm> parse_algo_list(const std::string& csv) {
    std::vector<nk::Algorithm> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto a = nk::algorithm_from_name(item);
        if (!a) throw usage_error("unknown algorithm: " + item + " (cs, pu, ictt1, ictt1_alt)");
        out.push_back(*a);
    }
    if (out.empty()) throw usage_error("no algorithms given");
    return out;
}

nk::SubunitEvalMode parse_eval_mode(const std::string& s) {
    if (s == "inclusive") return nk::SubunitEvalMode::Inclusive;
    if (s == "exclusive") return nk::SubunitEvalMode::Exclusive;
    throw usage_error("--subunit-eval must be inclusive or exclusive");
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    os << content;
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

struct SweepFlags {
    int n = 20;
    std::string k_list = "0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19";
    std::string algos = "cs,pu,ictt1,ictt1_alt";
    int iters = 10000;
    int steps = 1000;
    double tau = 0.33;
    int generations = 500;
    int subunits = 4;
    int subunits_alt = 6;
    std::string subunit_eval = "inclusive";
    std::uint64_t seed = 0;
    int workers = 1;
    std::string out_dir = ".";
    bool records = false;
};

nk::ExperimentSpec to_spec(const SweepFlags& f) {
    nk::ExperimentSpec spec;
    spec.n = f.n;
    spec.k_values = parse_int_list(f.k_list);
    spec.algorithms = parse_algo_list(f.algos);
    spec.iterations = f.iters;
    spec.max_steps = f.steps;
    spec.pu = {f.tau, f.generations};
    spec.subunits_ictt1 = f.subunits;
    spec.subunits_ictt1_alt = f.subunits_alt;
    spec.master_seed = f.seed;
    spec.subunit_eval = parse_eval_mode(f.subunit_eval);
    spec.workers = f.workers;
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    return spec;
}

void add_common_flags(CLI::App* cmd, SweepFlags& f) {
    cmd->add_option("--n", f.n, "number of decision nodes");
    cmd->add_option("--k", f.k_list, "comma list of k values");
    cmd->add_option("--iters", f.iters, "replicates per (algorithm, k)");
    cmd->add_option("--steps", f.steps, "time steps for cs/ictt");
    cmd->add_option("--tau", f.tau, "pu flip probability");
    cmd->add_option("--generations", f.generations, "pu generations");
    cmd->add_option("--subunits", f.subunits, "ictt1 sub-units");
    cmd->add_option("--subunits-alt", f.subunits_alt, "ictt1_alt sub-units");
    cmd->add_option("--subunit-eval", f.subunit_eval, "inclusive|exclusive");
    cmd->add_option("--seed", f.seed, "master seed");
    cmd->add_option("--workers", f.workers, "worker threads");
    cmd->add_option("--out", f.out_dir, "output directory");
}

int cmd_sweep(const SweepFlags& f) {
    const nk::ExperimentSpec spec = to_spec(f);
    const nk::SweepResult result = nk::run_sweep(spec);

    fs::create_directories(f.out_dir);
    {
        std::ostringstream os;
        nk::write_summary_csv(os, result.summary);
        write_file(fs::path(f.out_dir) / "summary.csv", os.str());
    }
    if (f.records) {
        std::ostringstream os;
        nk::write_records_csv(os, result.records);
        write_file(fs::path(f.out_dir) / "records.csv", os.str());
    }
    std::cout << "wrote " << (fs::path(f.out_dir) / "summary.csv").string() << " ("
              << result.summary.size() << " rows)\n";
    return kExitOk;
}

int cmd_trace(const SweepFlags& f) {
    nk::ExperimentSpec spec = to_spec(f);
    std::vector<nk::MovesTrace> traces;
    for (int k : spec.k_values) traces.push_back(nk::run_moves_trace(spec, k, f.steps));

    fs::create_directories(f.out_dir);
    std::ostringstream os;
    nk::write_trace_csv(os, spec.k_values, traces);
    write_file(fs::path(f.out_dir) / "trace.csv", os.str());
    std::cout << "wrote " << (fs::path(f.out_dir) / "trace.csv").string() << " ("
              << spec.k_values.size() * static_cast<std::size_t>(f.steps) << " rows)\n";
    return kExitOk;
}

int cmd_oracle(const SweepFlags& f, int k) {
    if (f.n > 24) throw usage_error("oracle: n must be <= 24");
    if (k < 0 || k > f.n - 1) throw usage_error("oracle: k must be in [0, n-1]");

    SweepFlags sf = f;
    sf.k_list = std::to_string(k);
    sf.algos = "cs,pu,ictt1";
    sf.iters = 1;
    const nk::ExperimentSpec spec = to_spec(sf);

    const nk::Landscape land =
        nk::generate_landscape(spec.n, k, nk::landscape_seed(spec, k, 0));
    const nk::OracleReport report = nk::oracle_report(land);

    std::cout << "n=" << spec.n << " k=" << k << " seed=" << spec.master_seed << "\n";
    std::cout << "configurations examined: " << (std::uint64_t{1} << spec.n) << "\n";
    std::cout << "global optimum fitness: " << nk::format_sig12(report.global_best_fitness)
              << "\n";
    std::cout << "global optimum: ";
    for (auto b : report.global_best) std::cout << int(b);
    std::cout << "\nlocal optima: " << report.num_local_optima << "\n";

    for (nk::Algorithm a : spec.algorithms) {
        const nk::ReplicateRecord rec = nk::run_replicate(spec, a, k, 0);
        std::cout << nk::algorithm_name(a) << ": fitness "
                  << nk::format_sig12(rec.best_fitness) << "  ratio "
                  << nk::format_sig12(rec.best_fitness / report.global_best_fitness) << "\n";
    }
    return kExitOk;
}

int cmd_chart(const std::string& input, const std::string& output, const std::string& metric) {
    std::ifstream is(input);
    if (!is) throw std::runtime_error("cannot read " + input);
    const nk::CsvTable table = nk::read_csv(is);

    std::vector<nk::ChartSeries> series;
    std::string title, x_label, y_label;

    if (table.column("mean_moves_available") >= 0) {
        // trace schema: one series per k
        const int ck = table.column("k");
        const int cs = table.column("step");
        const int cv = table.column("mean_moves_available");
        title = "Moves available per step";
        x_label = "step";
        y_label = "mean moves available";
        for (const auto& row : table.rows) {
            const std::string label = "K=" + row[ck];
            auto it = std::find_if(series.begin(), series.end(),
                                   [&](const auto& s) { return s.label == label; });
            if (it == series.end()) {
                series.push_back({label, {}});
                it = series.end() - 1;
            }
            it->points.emplace_back(std::stod(row[cs]), std::stod(row[cv]));
        }
    } else if (table.column("mean_fitness") >= 0) {
        // summary schema: one series per algorithm
        const int ca = table.column("algorithm");
        const int ck = table.column("k");
        const std::string col = metric == "hamming" ? "mean_hamming" : "mean_fitness";
        const int cv = table.column(col);
        title = metric == "hamming" ? "Mean hamming distance vs K" : "Mean fitness vs K";
        x_label = "K";
        y_label = metric == "hamming" ? "mean hamming distance" : "mean fitness";
        for (const auto& row : table.rows) {
            auto it = std::find_if(series.begin(), series.end(),
                                   [&](const auto& s) { return s.label == row[ca]; });
            if (it == series.end()) {
                series.push_back({row[ca], {}});
                it = series.end() - 1;
            }
            it->points.emplace_back(std::stod(row[ck]), std::stod(row[cv]));
        }
    } else {
        throw std::runtime_error("unrecognized CSV schema: " + input);
    }

    const std::string svg = nk::render_line_chart(series, title, x_label, y_label);
    write_file(output, svg);
    std::cout << "wrote " << output << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"NK landscape search experiments"};
    app.require_subcommand(1);

    SweepFlags sweep_f;
    auto* sweep = app.add_subcommand("sweep", "run a K sweep and write summary/records CSV");
    add_common_flags(sweep, sweep_f);
    sweep->add_option("--algos", sweep_f.algos, "comma list: cs,pu,ictt1,ictt1_alt");
    sweep->add_flag("--records", sweep_f.records, "also write per-replicate records.csv");

    SweepFlags trace_f;
    trace_f.k_list = "2,19";
    trace_f.steps = 100;
    trace_f.iters = 1000;
    auto* trace = app.add_subcommand("trace", "moves-available trace for ictt1");
    add_common_flags(trace, trace_f);

    SweepFlags oracle_f;
    oracle_f.n = 10;
    int oracle_k = 2;
    auto* oracle = app.add_subcommand("oracle", "brute-force optimum and walker comparison");
    oracle->add_option("--n", oracle_f.n, "number of decision nodes (<= 24)");
    oracle->add_option("--k", oracle_k, "interdependence degree");
    oracle->add_option("--seed", oracle_f.seed, "master seed");
    oracle->add_option("--tau", oracle_f.tau, "pu flip probability");
    oracle->add_option("--generations", oracle_f.generations, "pu generations");
    oracle->add_option("--steps", oracle_f.steps, "time steps for cs/ictt");
    oracle->add_option("--subunits", oracle_f.subunits, "ictt1 sub-units");

    std::string chart_in, chart_out = "chart.svg", chart_metric = "fitness";
    auto* chart = app.add_subcommand("chart", "render an SVG line chart from a CSV");
    chart->add_option("--input", chart_in, "summary or trace CSV")->required();
    chart->add_option("--out", chart_out, "output SVG path");
    chart->add_option("--metric", chart_metric, "fitness|hamming (summary CSV only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (sweep->parsed()) return cmd_sweep(sweep_f);
        if (trace->parsed()) return cmd_trace(trace_f);
        if (oracle->parsed()) return cmd_oracle(oracle_f, oracle_k);
        if (chart->parsed()) return cmd_chart(chart_in, chart_out, chart_metric);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
