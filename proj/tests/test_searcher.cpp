#include <doctest.h>

#include "pg/generators.hpp"
#include "pg/searcher.hpp"

#include "fixtures.hpp"

using namespace pg;

TEST_SUITE_BEGIN("searcher");

TEST_CASE("a single even self-loop is a closed region at the first query")
{
    Game t2 = fixtures::t2();
    SubgameView v = SubgameView::full(t2);
    PPSpace sp(v, true);
    SearchStats stats;
    auto [d, winner] = find_dominion(sp, stats);
    CHECK(d == fixtures::set_of(t2, {0}));
    CHECK(winner == Player::zero);
    CHECK(stats.queries == 1);
    CHECK(stats.promotions == 0);
}

TEST_CASE("the two-position game closes at the top query")
{
    Game t1 = fixtures::t1();
    SubgameView v = SubgameView::full(t1);
    PPSpace sp(v, true);
    SearchStats stats;
    auto [d, winner] = find_dominion(sp, stats);
    CHECK(d == fixtures::set_of(t1, {0, 1}));
    CHECK(winner == Player::one);
}

TEST_CASE("the delaying policy needs two promotions on the four-chain game")
{
    Game g4 = worstcase_ppplus(4);
    DPSpace sp(SubgameView::full(g4));
    SearchStats stats;
    auto [d, winner] = find_dominion(sp, stats);
    CHECK(d == fixtures::by_priorities(g4, {0}));
    CHECK(winner == Player::zero);
    CHECK(stats.promotions == 2);
}

TEST_CASE("solve partitions the fixtures")
{
    Game t1 = fixtures::t1();
    Game t2 = fixtures::t2();
    for (SolverKind kind : {SolverKind::pp, SolverKind::pp_plus, SolverKind::dp,
                            SolverKind::zielonka, SolverKind::brute}) {
        SearchStats stats;
        WinningPartition w1 = solve(SubgameView::full(t1), kind, stats);
        CHECK(w1.w0.none());
        CHECK(w1.w1 == fixtures::set_of(t1, {0, 1}));

        WinningPartition w2 = solve(SubgameView::full(t2), kind, stats);
        CHECK(w2.w0 == fixtures::set_of(t2, {0}));
        CHECK(w2.w1.none());
    }
}

TEST_CASE("all five solvers agree on the chain game")
{
    Game g4 = worstcase_ppplus(4);
    SubgameView v = SubgameView::full(g4);
    SearchStats stats;
    WinningPartition expect = solve(v, SolverKind::brute, stats);
    for (SolverKind kind : {SolverKind::pp, SolverKind::pp_plus, SolverKind::dp,
                            SolverKind::zielonka}) {
        SearchStats s;
        CHECK(solve(v, kind, s) == expect);
    }
}

TEST_CASE("promotion counts on the chain family follow their closed forms")
{
    for (int h = 1; h <= 8; ++h) {
        Game g = worstcase_ppplus(h);
        SubgameView v = SubgameView::full(g);

        SearchStats pp;
        find_dominion(PPSpace(v, false), pp);
        CHECK(pp.promotions == (uint64_t{1} << h) - 1);

        SearchStats plus;
        find_dominion(PPSpace(v, true), plus);
        CHECK(plus.promotions == counter_configs(h) - 1);
        CHECK(plus.queries == fib_depth(h));

        SearchStats dp;
        find_dominion(DPSpace(v), dp);
        CHECK(dp.promotions == uint64_t(h + 1) / 2);
        CHECK(dp.flushes == 0);
    }
}

TEST_CASE("solver agreement on a small seeded corpus")
{
    for (uint64_t seed = 0; seed < 150; ++seed) {
        RandomSpec spec{int(2 + seed % 9), 0, 0, seed * 977 + 13};
        spec.k = int(1 + seed % spec.n);
        spec.d = spec.n == 2 ? 1 : int(1 + seed % 3);
        if (spec.d >= spec.n) spec.d = spec.n - 1;
        Game g = random_game(spec);
        SubgameView v = SubgameView::full(g);

        SearchStats st;
        WinningPartition expect = solve(v, SolverKind::brute, st);
        for (SolverKind kind : {SolverKind::pp, SolverKind::pp_plus, SolverKind::dp,
                                SolverKind::zielonka}) {
            SearchStats s;
            WinningPartition w = solve(v, kind, s);
            CHECK(w == expect);
        }
    }
}

TEST_CASE("the iteration cap signals a policy bug instead of spinning")
{
    Game g4 = worstcase_ppplus(4);
    SearchLimits limits;
    limits.max_queries = 3; // far below the real depth
    SearchStats stats;
    PPSpace sp(SubgameView::full(g4), true);
    CHECK_THROWS_AS(find_dominion(sp, stats, limits), NonTerminationError);
}

TEST_CASE("an expired deadline raises a timeout")
{
    Game g = worstcase_ppplus(14);
    SearchLimits limits;
    limits.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    SearchStats stats;
    CHECK_THROWS_AS(solve(SubgameView::full(g), SolverKind::pp, stats, limits), TimeoutError);
}

TEST_CASE("solve rejects malformed views")
{
    Game t1 = fixtures::t1();
    SubgameView bad = subgame(SubgameView::full(t1), fixtures::set_of(t1, {1}));
    SearchStats stats;
    CHECK_THROWS_AS(solve(bad, SolverKind::dp, stats), MalformedGameError);
}

TEST_CASE("solver names round-trip")
{
    for (SolverKind kind : {SolverKind::pp, SolverKind::pp_plus, SolverKind::dp,
                            SolverKind::zielonka, SolverKind::brute})
        CHECK(parse_solver_kind(solver_name(kind)) == kind);
    CHECK(!parse_solver_kind("qq").has_value());
}

TEST_SUITE_END();
