/*
 * Copyright 2026 The ppsolve authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pg/bench.hpp"
#include "pg/generators.hpp"
#include "pg/pgsolver_io.hpp"
#include "pg/searcher.hpp"

namespace {

// Exit codes: 0 ok, 1 verification mismatch, 2 usage or parse error,
// 3 oracle guard, 4 timeout.
enum { kOk = 0, kMismatch = 1, kUsage = 2, kGuard = 3, kTimeout = 4 };

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pg::Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw pg::Error("cannot write " + path);
    out << text;
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<pg::SolverKind> parse_solvers(const std::string& list)
{
    std::vector<pg::SolverKind> kinds;
    for (const auto& name : split_list(list)) {
        auto kind = pg::parse_solver_kind(name);
        if (!kind) throw pg::Error("unknown solver '" + name + "'");
        kinds.push_back(*kind);
    }
    return kinds;
}

pg::SearchLimits limits_for(double timeout_s)
{
    pg::SearchLimits limits;
    if (timeout_s > 0)
        limits.deadline = std::chrono::steady_clock::now()
            + std::chrono::nanoseconds(int64_t(timeout_s * 1e9));
    return limits;
}

std::string hex64(uint64_t x)
{
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[size_t(i)] = digits[x & 0xf];
        x >>= 4;
    }
    return out;
}

void print_set(std::ostream& out, const char* label, const pg::PositionSet& set)
{
    out << label << ':';
    set.for_each([&](int v) { out << ' ' << v; });
    out << '\n';
}

int cmd_solve(const std::string& file, const std::string& solver, double timeout_s, bool row_mode)
{
    auto kind = pg::parse_solver_kind(solver);
    if (!kind) {
        std::cerr << "unknown solver '" << solver << "'\n";
        return kUsage;
    }
    pg::Game game = pg::parse_pgsolver(read_file(file));
    pg::SearchStats stats;
    pg::WinningPartition w =
        pg::solve(pg::SubgameView::full(game), *kind, stats, limits_for(timeout_s));

    if (row_mode) {
        pg::BenchRow row;
        row.game_id = file;
        row.n = game.size();
        row.k = 0;
        row.d = 0;
        row.seed = 0;
        row.solver = solver;
        row.time_ns = stats.wall_time.count();
        row.stats = stats;
        row.result_hash = hex64(pg::result_hash(w.w0));
        pg::write_csv_row(std::cout, row);
        return kOk;
    }

    print_set(std::cout, "W0", w.w0);
    print_set(std::cout, "W1", w.w1);
    std::cout << "queries=" << stats.queries << " promotions=" << stats.promotions
              << " delayed=" << stats.delayed << " flushes=" << stats.flushes
              << " resets=" << stats.resets << " time_ns=" << stats.wall_time.count() << '\n';
    return kOk;
}

int cmd_verify(const std::vector<std::string>& files, const std::string& solver_list,
               double timeout_s)
{
    auto solver_names = split_list(solver_list);
    auto kinds = parse_solvers(solver_list);
    if (kinds.size() < 2) throw pg::Error("verify needs at least two solvers");

    for (const auto& file : files) {
        pg::Game game = pg::parse_pgsolver(read_file(file));
        pg::SubgameView view = pg::SubgameView::full(game);
        uint64_t reference = 0;
        for (size_t i = 0; i < kinds.size(); ++i) {
            pg::SearchStats stats;
            pg::WinningPartition w = pg::solve(view, kinds[i], stats, limits_for(timeout_s));
            uint64_t h = pg::result_hash(w.w0);
            if (i == 0) {
                reference = h;
            } else if (h != reference) {
                std::cout << "mismatch: " << file << ": " << solver_names[0] << "="
                          << hex64(reference) << " " << solver_names[i] << "=" << hex64(h)
                          << '\n';
                return kMismatch;
            }
        }
        std::cout << file << " agree hash=" << hex64(reference) << '\n';
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"parity game solver suite built on priority promotion"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a game in pgsolver format");
    gen->require_subcommand(1);

    int rn = 0, rk = 0, routdeg = 2;
    uint64_t rseed = 0;
    std::string rout;
    auto* gen_random = gen->add_subcommand("random", "seeded random game");
    gen_random->add_option("--n", rn, "positions")->required();
    gen_random->add_option("--k", rk, "priorities")->required();
    gen_random->add_option("--outdeg", routdeg, "successors per position");
    gen_random->add_option("--seed", rseed, "PRNG seed");
    gen_random->add_option("-o,--output", rout, "output file")->required();

    int wh = 0;
    std::string wout;
    auto* gen_worst = gen->add_subcommand("worstcase", "promotion worst-case chain family");
    gen_worst->set_help_flag("--help", "print help"); // frees -h for the chain count
    gen_worst->add_option("--h", wh, "number of chains")->required();
    gen_worst->add_option("-o,--output", wout, "output file")->required();

    // solve
    std::string sfile, ssolver = "dp";
    double stimeout = 0;
    bool srow = false;
    auto* solve_cmd = app.add_subcommand("solve", "solve one game");
    solve_cmd->add_option("file", sfile, "pgsolver input")->required();
    solve_cmd->add_option("--solver", ssolver, "pp|pp+|dp|zlk|brute");
    solve_cmd->add_option("--timeout", stimeout, "seconds");
    solve_cmd->add_flag("--row", srow, "machine-readable CSV row output");

    // verify
    std::vector<std::string> vfiles;
    std::string vsolvers;
    double vtimeout = 0;
    auto* verify_cmd = app.add_subcommand("verify", "cross-check solvers on games");
    verify_cmd->add_option("files", vfiles, "pgsolver inputs")->required();
    verify_cmd->add_option("--solvers", vsolvers, "comma-separated solver list")->required();
    verify_cmd->add_option("--timeout", vtimeout, "seconds per solve");

    // bench
    pg::BenchConfig bench;
    std::string bsolvers = "pp,pp+,dp";
    std::string bsizes;
    std::string bout;
    auto* bench_cmd = app.add_subcommand("bench", "run the cluster benchmark, emit CSV");
    bench_cmd->add_option("--sizes", bsizes, "comma-separated game sizes")->required();
    bench_cmd->add_option("--per-pair", bench.per_pair, "games per (n,k) pair");
    bench_cmd->add_option("--outdeg", bench.outdeg, "successors per position");
    bench_cmd->add_option("--solvers", bsolvers, "comma-separated solver list");
    bench_cmd->add_option("--seed", bench.seed, "master seed");
    bench_cmd->add_option("--timeout", bench.timeout_s, "seconds per (game, solver) job");
    bench_cmd->add_option("--jobs", bench.jobs, "worker pool width, 0 = all cores");
    bench_cmd->add_option("-o,--output", bout, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (gen_random->parsed()) {
            pg::Game g = pg::random_game({rn, rk, routdeg, rseed});
            write_file(rout, pg::write_pgsolver(g));
            std::cout << rout << " n=" << rn << " k=" << rk << " d=" << routdeg
                      << " seed=" << rseed << '\n';
            return kOk;
        }
        if (gen_worst->parsed()) {
            pg::Game g = pg::worstcase_ppplus(wh);
            write_file(wout, pg::write_pgsolver(g));
            std::cout << wout << " h=" << wh << " positions=" << g.size() << '\n';
            return kOk;
        }
        if (solve_cmd->parsed()) return cmd_solve(sfile, ssolver, stimeout, srow);
        if (verify_cmd->parsed()) return cmd_verify(vfiles, vsolvers, vtimeout);
        if (bench_cmd->parsed()) {
            for (const auto& size : split_list(bsizes)) bench.sizes.push_back(std::stoi(size));
            bench.solvers = parse_solvers(bsolvers);
            std::vector<pg::BenchRow> rows = pg::run_bench(bench);
            std::ostringstream csv;
            csv << pg::kBenchCsvHeader << '\n';
            for (const auto& row : rows) pg::write_csv_row(csv, row);
            if (bout.empty())
                std::cout << csv.str();
            else
                write_file(bout, csv.str());
            return kOk;
        }
    } catch (const pg::TimeoutError&) {
        std::cerr << "timeout\n";
        return kTimeout;
    } catch (const pg::OracleGuardError& e) {
        std::cerr << e.what() << '\n';
        return kGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    } catch (const pg::Error& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
