#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pcube/bfs.hpp"
#include "pcube/errors.hpp"
#include "pcube/local_solver.hpp"
#include "pcube/solvability.hpp"
#include "pcube/subgroup_solver.hpp"

namespace {

using namespace pcube;

bool parse_size(const std::string& text, int& m, int& n) {
    char extra = 0;
    int a = 0, b = 0;
    if (std::sscanf(text.c_str(), "%dx%d%c", &a, &b, &extra) != 2) return false;
    if (a < 1 || b < 1) return false;
    m = a;
    n = b;
    return true;
}

Configuration read_config(const std::string& path) {
    if (path == "-") return parse_configuration(std::cin);
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return parse_configuration(in);
}

int run_check(const std::string& path, Metric metric) {
    const Configuration config = read_config(path);
    const PuzzleSpec spec = cube_spec(config.rows, config.cols, metric);
    const ParityMatrix p = parity_matrix(config);
    std::cout << "parity\n";
    for (int i = 1; i <= p.rows; ++i) {
        for (int j = 1; j <= p.cols; ++j)
            std::cout << (j > 1 ? " " : "") << (p.at(i, j) > 0 ? '+' : '-');
        std::cout << '\n';
    }
    const bool ok = is_solvable(spec, config);
    std::cout << (ok ? "solvable" : "unsolvable") << '\n';
    return ok ? 0 : 1;
}

int run_solve(const std::string& path, Metric metric, const std::string& solver,
              const std::vector<int>& k_rows, uint64_t budget) {
    const Configuration config = read_config(path);
    const PuzzleSpec spec = cube_spec(config.rows, config.cols, metric);

    MoveSequence word;
    int bound = 0;
    if (solver == "local") {
        word = solve_local(spec, config);
        bound = local_bound(spec.rows, spec.cols);
    } else if (solver == "subgroup") {
        word = solve_two_phase(spec, config, k_rows);
        bound = local_bound(spec.rows, spec.cols);
    } else {
        const DistanceTable table = compute_distance_table(spec, budget);
        word = optimal_solve(spec, table, config);
        bound = stats_from_table(table).diameter;
    }

    if (!is_identity(apply_sequence(spec, config, word)))
        throw std::logic_error("solution replay failed");
    std::cout << format_sequence(spec, word) << '\n';
    std::cout << "length " << word.size() << '\n';
    std::cout << "bound " << bound << '\n';
    return 0;
}

int run_analyze(int m, int n, Metric metric, bool histogram, uint64_t budget) {
    const PuzzleSpec spec = cube_spec(m, n, metric);
    const CayleyStats stats = bfs_analyze(spec, budget);
    std::cout << stats_table_header() << '\n' << stats_table_row(spec, stats) << '\n';
    std::cout << "size " << m << 'x' << n << '\n';
    std::cout << "reachable " << stats.reachable_count << '\n';
    std::cout << "diameter " << stats.diameter << '\n';
    std::cout << "average " << stats.mean_2dp() << '\n';
    std::cout << "median " << stats.median_distance << '\n';
    std::cout << "local estimate " << local_bound(m, n) << '\n';
    if (histogram)
        for (const auto& [d, count] : stats.histogram_pairs())
            std::cout << d << ' ' << count << '\n';
    return 0;
}

int run_scramble(int m, int n, Metric metric, uint64_t seed, const std::string& mode, int length,
                 const std::string& out_path) {
    Configuration config;
    if (mode == "walk") {
        const PuzzleSpec spec = cube_spec(m, n, metric);
        config = scramble_walk(spec, seed, length).first;
    } else {
        config = scramble_uniform_cube(m, n, seed);
    }
    const std::string text = format_configuration(config);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
        out << text;
    }
    return 0;
}

int run_bench_k(int m, int n, Metric metric, uint64_t seed, int count, int max_k) {
    const PuzzleSpec spec = cube_spec(m, n, metric);
    std::vector<std::vector<int>> k_sets;
    for (int s = 0; s <= std::min(max_k, m); ++s) {
        std::vector<int> k;
        for (int i = 1; i <= s; ++i) k.push_back(i);
        k_sets.push_back(std::move(k));
    }
    for (const KBenchRow& row : bench_k(spec, k_sets, seed, count)) {
        std::cout << "K {";
        for (size_t i = 0; i < row.k_rows.size(); ++i)
            std::cout << (i ? "," : "") << row.k_rows[i];
        std::cout << "} |H1| ";
        if (row.subgroup_size == 0)
            std::cout << order_of_H(spec);
        else
            std::cout << row.subgroup_size;
        char tail[64];
        std::snprintf(tail, sizeof(tail), " mean %.2f max %d", row.mean_length, row.max_length);
        std::cout << tail << '\n';
    }
    return 0;
}

int run_verify(int m, int n, Metric metric, uint64_t budget) {
    const PuzzleSpec spec = cube_spec(m, n, metric);
    const DistanceTable table = compute_distance_table(spec, budget);
    const CayleyStats stats = stats_from_table(table);
    const BigInt formula = order_of_H(spec);
    bool all_ok = true;

    std::cout << "formula " << formula << '\n';
    std::cout << "bfs " << stats.reachable_count << '\n';
    const bool match = formula == BigInt(stats.reachable_count);
    all_ok &= match;
    std::cout << "count " << (match ? "match" : "MISMATCH") << '\n';

    uint64_t hist_sum = 0;
    for (uint64_t c : stats.histogram) hist_sum += c;
    const bool hist_ok = BigInt(hist_sum) == formula;
    all_ok &= hist_ok;
    std::cout << "histogram sum " << (hist_ok ? "ok" : "FAIL") << '\n';

    const double lower =
        std::log(static_cast<double>(stats.reachable_count)) / std::log(spec.move_count()) - 1.0;
    const bool sandwich =
        lower - 1e-9 <= stats.diameter && stats.diameter <= local_bound(m, n);
    all_ok &= sandwich;
    char line[96];
    std::snprintf(line, sizeof(line), "diameter %d within [%.2f, %d] %s", stats.diameter, lower,
                  local_bound(m, n), sandwich ? "ok" : "FAIL");
    std::cout << line << '\n';

    CodeSpace space(spec);
    std::mt19937_64 rng(12345);
    bool symmetric = true;
    for (int t = 0; t < 100; ++t) {
        const uint64_t code = rng() % space.size();
        if (table.dist[code] == kUnreached) continue;
        const Configuration inv = inverse_configuration(spec, space.decode(code));
        symmetric &= table.dist[space.encode(inv)] == table.dist[code];
    }
    all_ok &= symmetric;
    std::cout << "distance symmetry " << (symmetric ? "ok" : "FAIL") << '\n';

    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-group picture cube puzzle toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Metric metric = Metric::quarter_turn;
    const std::map<std::string, Metric> metric_names{{"quarter", Metric::quarter_turn},
                                                     {"half", Metric::half_turn}};
    app.add_option("--metric", metric, "move metric (quarter|half)")
        ->transform(CLI::CheckedTransformer(metric_names))
        ->default_str("quarter");

    std::string size_text = "1x1";
    std::string input_path;
    std::string solver = "local";
    std::string mode = "uniform";
    std::string out_path;
    std::vector<int> k_rows;
    uint64_t seed = 0;
    uint64_t budget = kDefaultBfsBudget;
    int count = 100;
    int max_k = 16;
    int length = 0;
    bool histogram = false;

    CLI::App* check = app.add_subcommand("check", "decide solvability of a configuration file");
    check->add_option("file", input_path, "configuration file, - for stdin")->required();

    CLI::App* solve = app.add_subcommand("solve", "solve a configuration file");
    solve->add_option("file", input_path, "configuration file, - for stdin")->required();
    solve->add_option("--solver", solver, "local|subgroup|optimal")
        ->check(CLI::IsMember({"local", "subgroup", "optimal"}));
    solve->add_option("--k", k_rows, "restricted rows for the subgroup solver")->delimiter(',');
    solve->add_option("--budget", budget, "distance table budget in bytes");

    CLI::App* analyze = app.add_subcommand("analyze", "exhaustive distance statistics");
    analyze->add_option("--size", size_text, "board size MxN")->required();
    analyze->add_flag("--histogram", histogram, "print the distance histogram");
    analyze->add_option("--budget", budget, "distance table budget in bytes");

    CLI::App* scramble = app.add_subcommand("scramble", "emit a random configuration file");
    scramble->add_option("--size", size_text, "board size MxN")->required();
    scramble->add_option("--seed", seed, "random seed")->required();
    scramble->add_option("--mode", mode, "uniform|walk")
        ->check(CLI::IsMember({"uniform", "walk"}));
    scramble->add_option("--length", length, "walk length (walk mode)");
    scramble->add_option("--out", out_path, "output file, - for stdout");

    CLI::App* bench = app.add_subcommand("bench-k", "mean solution length per restricted row set");
    bench->add_option("--size", size_text, "board size MxN")->required();
    bench->add_option("--seed", seed, "random seed")->required();
    bench->add_option("--count", count, "scrambles per K");
    bench->add_option("--max-k", max_k, "largest K prefix size");

    CLI::App* verify = app.add_subcommand("verify", "check counts and graph invariants");
    verify->add_option("--size", size_text, "board size MxN")->required();
    verify->add_option("--budget", budget, "distance table budget in bytes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    int m = 1, n = 1;
    try {
        if (*analyze || *scramble || *bench || *verify) {
            if (!parse_size(size_text, m, n)) {
                std::cerr << "bad --size, expected MxN\n";
                return 2;
            }
        }
        if (*check) return run_check(input_path, metric);
        if (*solve) return run_solve(input_path, metric, solver, k_rows, budget);
        if (*analyze) return run_analyze(m, n, metric, histogram, budget);
        if (*scramble) {
            if (length <= 0) length = 8 * m * n;
            return run_scramble(m, n, metric, seed, mode, length, out_path);
        }
        if (*bench) return run_bench_k(m, n, metric, seed, count, max_k);
        if (*verify) return run_verify(m, n, metric, budget);
    } catch (const unsolvable_error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
