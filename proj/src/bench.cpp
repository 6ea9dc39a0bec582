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

#include "pg/bench.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pg/generators.hpp"

namespace pg {

uint64_t result_hash(const PositionSet& w0)
{
    uint64_t h = 0xcbf29ce484222325ull;
    auto eat = [&](uint8_t byte) {
        h ^= byte;
        h *= 0x100000001b3ull;
    };
    w0.for_each([&](int v) {
        for (int shift = 0; shift < 32; shift += 8) eat(uint8_t(uint32_t(v) >> shift));
    });
    return h;
}

namespace {

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

struct Job {
    RandomSpec spec;
    SolverKind solver;
    std::string game_id;
};

BenchRow run_job(const Job& job, double timeout_s)
{
    BenchRow row;
    row.game_id = job.game_id;
    row.n = job.spec.n;
    row.k = job.spec.k;
    row.d = job.spec.d;
    row.seed = job.spec.seed;
    row.solver = std::string(solver_name(job.solver));

    Game g = random_game(job.spec);
    SubgameView view = SubgameView::full(g);

    SearchLimits limits;
    if (timeout_s > 0)
        limits.deadline = std::chrono::steady_clock::now()
            + std::chrono::nanoseconds(int64_t(timeout_s * 1e9));

    try {
        WinningPartition w = solve(view, job.solver, row.stats, limits);
        row.time_ns = row.stats.wall_time.count();
        row.result_hash = hex64(result_hash(w.w0));
    } catch (const TimeoutError&) {
        row.time_ns = -1;
        row.result_hash = "-";
    } catch (const OracleGuardError&) {
        row.time_ns = -2;
        row.result_hash = "-";
    }
    return row;
}

} // namespace

void write_csv_row(std::ostream& out, const BenchRow& row)
{
    out << row.game_id << ',' << row.n << ',' << row.k << ',' << row.d << ',' << row.seed
        << ',' << row.solver << ',' << row.time_ns << ',' << row.stats.queries << ','
        << row.stats.promotions << ',' << row.stats.delayed << ',' << row.stats.flushes << ','
        << row.stats.resets << ',' << row.result_hash << '\n';
}

std::vector<BenchRow> run_bench(const BenchConfig& config)
{
    // The plan (and every seed in it) is fixed before any job runs, so the
    // output is independent of scheduling.
    std::vector<Job> jobs;
    SplitMix64 seeder(config.seed);
    for (int n : config.sizes) {
        for (int i = 1; i <= 10; ++i) {
            int k = std::max(1, n * i / 10);
            for (int g = 0; g < config.per_pair; ++g) {
                uint64_t seed = seeder.next();
                for (SolverKind solver : config.solvers) {
                    std::ostringstream id;
                    id << "g_n" << n << "_k" << k << "_i" << g;
                    jobs.push_back({RandomSpec{n, k, config.outdeg, seed}, solver, id.str()});
                }
            }
        }
    }

    std::vector<BenchRow> rows(jobs.size());
#ifdef _OPENMP
    if (config.jobs != 1) {
        int width = config.jobs > 0 ? config.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(width)
        for (size_t i = 0; i < jobs.size(); ++i)
            rows[i] = run_job(jobs[i], config.timeout_s);
    } else
#endif
    {
        for (size_t i = 0; i < jobs.size(); ++i)
            rows[i] = run_job(jobs[i], config.timeout_s);
    }

    // Cluster averages per (size, solver) over completed runs.
    for (int n : config.sizes) {
        for (SolverKind solver : config.solvers) {
            BenchRow avg;
            avg.game_id = "cluster_n" + std::to_string(n);
            avg.n = n;
            avg.k = 0;
            avg.d = config.outdeg;
            avg.seed = config.seed;
            avg.solver = "AVG:" + std::string(solver_name(solver));
            avg.result_hash = "-";
            int64_t count = 0;
            int64_t time_sum = 0;
            uint64_t q = 0, p = 0, dl = 0, f = 0, rs = 0;
            for (const auto& row : rows) {
                if (row.n != n || row.solver != solver_name(solver) || row.time_ns < 0)
                    continue;
                ++count;
                time_sum += row.time_ns;
                q += row.stats.queries;
                p += row.stats.promotions;
                dl += row.stats.delayed;
                f += row.stats.flushes;
                rs += row.stats.resets;
            }
            if (count > 0) {
                avg.time_ns = time_sum / count;
                avg.stats.queries = q / uint64_t(count);
                avg.stats.promotions = p / uint64_t(count);
                avg.stats.delayed = dl / uint64_t(count);
                avg.stats.flushes = f / uint64_t(count);
                avg.stats.resets = rs / uint64_t(count);
            } else {
                avg.time_ns = -1;
            }
            rows.push_back(std::move(avg));
        }
    }
    return rows;
}

} // namespace pg
