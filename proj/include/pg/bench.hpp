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

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "pg/searcher.hpp"

namespace pg {

/// FNV-1a over the ascending members of player zero's winning set
/// (little-endian 32-bit each); equal partitions hash equally.
uint64_t result_hash(const PositionSet& w0);

/// One CSV row per solved (game, solver) job.
struct BenchRow {
    std::string game_id;
    int n = 0, k = 0, d = 0;
    uint64_t seed = 0;
    std::string solver;
    int64_t time_ns = 0; // -1 timeout, -2 oracle guard
    SearchStats stats;
    std::string result_hash; // 16 hex digits, "-" when unavailable
};

inline constexpr const char* kBenchCsvHeader =
    "game_id,n,k,d,seed,solver,time_ns,queries,promotions,delayed,flushes,resets,result_hash";

void write_csv_row(std::ostream& out, const BenchRow& row);

struct BenchConfig {
    std::vector<int> sizes;
    int per_pair = 10;      // games per (n, k) pair
    int outdeg = 2;         // the hard regime for promotion solvers
    std::vector<SolverKind> solvers;
    uint64_t seed = 0;
    double timeout_s = 0;   // 0 = none
    int jobs = 1;           // worker pool width (OpenMP), 1 = serial
};

/**
 * Runs the cluster benchmark: for each size n, priorities k = n*i/10 for
 * i in 1..10, `per_pair` seeded games each, every configured solver.
 * Jobs may run on a worker pool; rows come out in deterministic plan
 * order regardless, followed by one average row per (size, solver)
 * labelled AVG:<solver>. Everything except time_ns is reproducible from
 * the seed.
 */
std::vector<BenchRow> run_bench(const BenchConfig& config);

} // namespace pg
