#include <doctest.h>

#include <cmath>

#include "pg/generators.hpp"
#include "pg/pgsolver_io.hpp"

#include "fixtures.hpp"

using namespace pg;

TEST_SUITE_BEGIN("generators");

TEST_CASE("random games are deterministic in their spec")
{
    RandomSpec spec{10, 5, 2, 1};
    Game a = random_game(spec);
    Game b = random_game(spec);
    CHECK(a == b);
    CHECK(write_pgsolver(a) == write_pgsolver(b));

    Game c = random_game({10, 5, 2, 2});
    CHECK(!(a == c));
}

TEST_CASE("random games respect their spec bounds")
{
    for (uint64_t seed = 0; seed < 25; ++seed) {
        RandomSpec spec{int(5 + seed % 20), int(2 + seed % 5), int(1 + seed % 3), seed};
        Game g = random_game(spec);
        CHECK(g.size() == spec.n);
        for (int v = 0; v < g.size(); ++v) {
            CHECK(g.priority(v) >= 0);
            CHECK(g.priority(v) < spec.k);
            auto succ = g.successors(v);
            CHECK(int(succ.size()) == spec.d);
            for (size_t i = 0; i < succ.size(); ++i)
                for (size_t j = i + 1; j < succ.size(); ++j)
                    CHECK(succ[i] != succ[j]);
        }
    }
}

TEST_CASE("invalid specs are rejected")
{
    CHECK_THROWS_AS(random_game({10, 20, 2, 0}), std::invalid_argument); // k > n
    CHECK_THROWS_AS(random_game({10, 0, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(random_game({10, 5, 10, 0}), std::invalid_argument); // d >= n
    CHECK_THROWS_AS(worstcase_ppplus(0), std::invalid_argument);
}

TEST_CASE("the chain game carries the published priorities and shape")
{
    Game g4 = worstcase_ppplus(4);
    CHECK(g4.size() == 9);

    for (int pr : {9, 8, 7, 6, 4, 3, 2, 1, 0}) fixtures::by_priority(g4, pr);

    const int center = fixtures::by_priority(g4, 0);
    CHECK(g4.owner(center) == Player::zero);
    CHECK(std::vector<int>(g4.successors(center).begin(), g4.successors(center).end())
          == std::vector<int>{center});

    for (int i = 1; i <= 4; ++i) {
        int head = fixtures::by_priority(g4, 2 * 5 - i);
        int body = fixtures::by_priority(g4, i);
        CHECK(g4.owner(head) == opponent(parity_player(i)));
        CHECK(g4.owner(body) == g4.owner(head));
        auto hs = g4.successors(head);
        CHECK(std::vector<int>(hs.begin(), hs.end()) == std::vector<int>{body, center});
        auto bs = g4.successors(body);
        CHECK(std::vector<int>(bs.begin(), bs.end()) == std::vector<int>{body, head});
    }

    CHECK(worstcase_ppplus(6).size() == 13);
}

TEST_CASE("counter configuration recurrence prefix")
{
    CHECK(counter_configs(0) == 1);
    CHECK(counter_configs(1) == 2);
    CHECK(counter_configs(2) == 4);
    CHECK(counter_configs(3) == 7);
    CHECK(counter_configs(4) == 12);
}

TEST_CASE("depth formula: positivity, frozen prefix and golden-ratio growth")
{
    CHECK(fib_depth(0) == 1);
    CHECK(fib_depth(1) == 4);
    CHECK(fib_depth(2) == 10);
    CHECK(fib_depth(3) == 20);
    CHECK(fib_depth(4) == 37);

    for (int h = 1; h <= 40; ++h) CHECK(fib_depth(h) > 0);

    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    for (int h = 12; h <= 40; ++h) {
        double ratio = double(fib_depth(h)) / double(fib_depth(h - 1));
        CHECK(std::abs(ratio - phi) / phi < 0.01);
    }

    CHECK_THROWS_AS(fib_depth(41), std::invalid_argument);
}

TEST_SUITE_END();
