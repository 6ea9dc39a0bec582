// Test-only oracles, kept independent of the library's implementation
// paths: naive set operators straight from their defining formulas and a
// strategy-enumeration check of the quasi-dominion property.
#pragma once

#include <algorithm>
#include <vector>

#include "pg/game.hpp"
#include "pg/setops.hpp"

namespace pg::oracle {

inline bool has_edge(const Game& g, int u, int w)
{
    for (int t : g.successors(u))
        if (t == w) return true;
    return false;
}

/// Quadratic recomputation of the one-step forcing set.
inline PositionSet naive_pre(const SubgameView& v, Player a, const PositionSet& V)
{
    const Game& g = v.game();
    PositionSet out(g.size());
    v.alive().for_each([&](int u) {
        if (g.owner(u) == a) {
            bool any = false;
            V.for_each([&](int w) {
                if (has_edge(g, u, w)) any = true;
            });
            if (any) out.set(u);
        } else {
            bool all = true;
            for (int w : g.successors(u))
                if (v.contains(w) && !V.test(w)) all = false;
            if (all) out.set(u);
        }
    });
    return out;
}

/// Attractor as the literal least fixpoint of X -> V ∪ pre(X).
inline PositionSet fixpoint_attractor(const SubgameView& v, Player a, const PositionSet& V)
{
    PositionSet X = V;
    while (true) {
        PositionSet next = naive_pre(v, a, X);
        next |= V;
        if (next == X) return X;
        X = next;
    }
}

/**
 * Quasi-dominion check by enumerating positional strategies restricted to
 * Q: some strategy of `alpha` must make every maximal play from every
 * position of Q either infinite with a cycle maximum of alpha's parity,
 * or end at an escape of the opponent. Opponent strategies range over all
 * partial maps defined at least on the opponent's interior.
 */
inline bool quasi_dominion_by_enumeration(const SubgameView& v, const PositionSet& Q, Player alpha)
{
    if (Q.none() || !Q.is_subset_of(v.alive())) return false;
    const Game& g = v.game();
    const Player beta = opponent(alpha);
    const PositionSet esc = escape(v, beta, Q);

    // Option lists: index -1 encodes "undefined" (the play stops there).
    std::vector<int> members = Q.to_vector();
    std::vector<std::vector<int>> options(members.size());
    std::vector<size_t> alpha_slots, beta_slots;
    for (size_t i = 0; i < members.size(); ++i) {
        int u = members[i];
        std::vector<int> inside;
        for (int w : g.successors(u))
            if (v.contains(w) && Q.test(w)) inside.push_back(w);
        std::sort(inside.begin(), inside.end());
        inside.erase(std::unique(inside.begin(), inside.end()), inside.end());

        bool must_play = g.owner(u) == beta && !esc.test(u); // opponent interior
        options[i] = inside;
        if (!must_play) options[i].push_back(-1);
        (g.owner(u) == alpha ? alpha_slots : beta_slots).push_back(i);
    }

    std::vector<int> pick(members.size(), 0);
    std::vector<int> slot_of(size_t(g.size()), -1);
    for (size_t i = 0; i < members.size(); ++i) slot_of[size_t(members[i])] = int(i);

    auto plays_ok = [&]() {
        // unique play from each member under the chosen strategies
        for (int start : members) {
            std::vector<int> state(size_t(g.size()), 0);
            std::vector<int> path;
            int u = start;
            int stopped_at = -1;
            while (true) {
                int slot = slot_of[size_t(u)];
                if (state[size_t(u)] != 0) break; // cycle
                state[size_t(u)] = 1;
                path.push_back(u);
                int choice = options[size_t(slot)][size_t(pick[size_t(slot)])];
                if (choice < 0) { stopped_at = u; break; }
                u = choice;
            }
            if (stopped_at >= 0) {
                if (!esc.test(stopped_at)) return false;
            } else {
                int maxpr = -1;
                for (size_t i = path.size(); i-- > 0;) {
                    maxpr = std::max(maxpr, g.priority(path[i]));
                    if (path[i] == u) break;
                }
                if (parity_player(maxpr) != alpha) return false;
            }
        }
        return true;
    };

    auto advance = [&](const std::vector<size_t>& slots) {
        for (size_t s : slots) {
            if (++pick[s] < int(options[s].size())) return true;
            pick[s] = 0;
        }
        return false;
    };

    // for some alpha strategy, all beta strategies must produce good plays
    do {
        bool all_good = true;
        do {
            if (!plays_ok()) {
                all_good = false;
                break;
            }
        } while (advance(beta_slots));
        for (size_t s : beta_slots) pick[s] = 0;
        if (all_good) return true;
    } while (advance(alpha_slots));
    return false;
}

/// Region check straight from the definition, with the quasi-dominion
/// clause decided by strategy enumeration.
inline bool region_by_enumeration(const SubgameView& v, const PositionSet& R, Player alpha)
{
    if (R.none() || !R.is_subset_of(v.alive())) return false;
    const int top = max_priority(v);
    if (parity_player(top) != alpha) return false;
    bool esc_ok = true;
    escape(v, opponent(alpha), R).for_each([&](int u) {
        if (v.game().priority(u) != top) esc_ok = false;
    });
    if (!esc_ok) return false;
    return quasi_dominion_by_enumeration(v, R, alpha);
}

} // namespace pg::oracle
