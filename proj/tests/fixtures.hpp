// Shared tiny fixtures for the unit suites.
#pragma once

#include "pg/game.hpp"
#include "pg/generators.hpp"

namespace pg::fixtures {

/// Two positions: 0 (pr 0, player 0) -> 1; 1 (pr 1, player 1) -> {0, 1}.
/// Player 1 wins everywhere.
inline Game t1()
{
    return Game::build({{0, Player::zero, {1}, ""}, {1, Player::one, {0, 1}, ""}});
}

/// A single even self-loop owned by player 1. Player 0 wins it.
inline Game t2()
{
    return Game::build({{2, Player::one, {0}, ""}});
}

/// Index of the unique position carrying `priority` (asserts uniqueness
/// holds, as in the chain family where all priorities are distinct).
inline int by_priority(const Game& g, int priority)
{
    int found = -1;
    for (int v = 0; v < g.size(); ++v) {
        if (g.priority(v) == priority) {
            REQUIRE(found == -1);
            found = v;
        }
    }
    REQUIRE(found >= 0);
    return found;
}

inline PositionSet set_of(const Game& g, std::initializer_list<int> members)
{
    PositionSet out(g.size());
    for (int v : members) out.set(v);
    return out;
}

/// Set of the positions carrying the given (unique) priorities.
inline PositionSet by_priorities(const Game& g, std::initializer_list<int> priorities)
{
    PositionSet out(g.size());
    for (int p : priorities) out.set(by_priority(g, p));
    return out;
}

} // namespace pg::fixtures
