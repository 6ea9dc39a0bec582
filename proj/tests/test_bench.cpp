#include <doctest.h>

#include <sstream>

#include "pg/bench.hpp"

#include "fixtures.hpp"

using namespace pg;

namespace {

BenchConfig tiny_config()
{
    BenchConfig config;
    config.sizes = {20, 40};
    config.per_pair = 2;
    config.solvers = {SolverKind::pp_plus, SolverKind::dp};
    config.seed = 1;
    return config;
}

/// CSV text with the time_ns column blanked (the only nondeterminism).
std::string stable_csv(const std::vector<BenchRow>& rows)
{
    std::ostringstream out;
    for (const auto& row : rows) {
        BenchRow copy = row;
        copy.time_ns = copy.time_ns < 0 ? copy.time_ns : 0;
        write_csv_row(out, copy);
    }
    return out.str();
}

} // namespace

TEST_SUITE_BEGIN("bench");

TEST_CASE("the plan arithmetic yields rows plus cluster averages")
{
    auto rows = run_bench(tiny_config());
    // 2 sizes x 10 priority steps x 2 games x 2 solvers + 2x2 averages
    CHECK(rows.size() == 80 + 4);
    int averages = 0;
    for (const auto& row : rows)
        if (row.solver.rfind("AVG:", 0) == 0) ++averages;
    CHECK(averages == 4);
}

TEST_CASE("repeated runs differ at most in the time column")
{
    auto a = run_bench(tiny_config());
    auto b = run_bench(tiny_config());
    CHECK(stable_csv(a) == stable_csv(b));
}

TEST_CASE("solvers hash to the same result on every planned game")
{
    auto rows = run_bench(tiny_config());
    for (size_t i = 0; i + 1 < rows.size(); i += 2) {
        if (rows[i].solver.rfind("AVG:", 0) == 0) continue;
        CHECK(rows[i].game_id == rows[i + 1].game_id);
        CHECK(rows[i].result_hash == rows[i + 1].result_hash);
    }
}

TEST_CASE("the csv schema stays put")
{
    CHECK(std::string(kBenchCsvHeader)
          == "game_id,n,k,d,seed,solver,time_ns,queries,promotions,delayed,flushes,resets,"
             "result_hash");
    BenchRow row;
    row.game_id = "g";
    row.n = 4;
    row.k = 2;
    row.d = 2;
    row.seed = 9;
    row.solver = "dp";
    row.time_ns = 17;
    row.stats.queries = 3;
    row.result_hash = "00000000000000aa";
    std::ostringstream out;
    write_csv_row(out, row);
    CHECK(out.str() == "g,4,2,2,9,dp,17,3,0,0,0,0,00000000000000aa\n");
}

TEST_CASE("hashes are order-sensitive digests of the zero player's set")
{
    PositionSet a(8), b(8);
    a.set(1);
    a.set(3);
    b.set(1);
    CHECK(result_hash(a) != result_hash(b));
    b.set(3);
    CHECK(result_hash(a) == result_hash(b));
}

TEST_SUITE_END();
