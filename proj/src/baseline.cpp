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

#include "pg/baseline.hpp"

#include <algorithm>

#include "pg/setops.hpp"

namespace pg {

namespace {

WinningPartition zielonka_rec(const SubgameView& v, AttractorScratch& scratch,
                              const std::optional<std::chrono::steady_clock::time_point>& deadline)
{
    const int n = v.game().size();
    if (v.empty()) return {PositionSet(n), PositionSet(n)};
    if (deadline && std::chrono::steady_clock::now() > *deadline) throw TimeoutError();

    const int p = max_priority(v);
    const Player a = parity_player(p);
    const Player b = opponent(a);

    PositionSet sub1 = v.alive();
    {
        PositionSet top(n);
        v.alive().for_each([&](int u) {
            if (v.game().priority(u) == p) top.set(u);
        });
        sub1 -= attractor(v, a, top, scratch);
    }

    WinningPartition inner =
        zielonka_rec(SubgameView::unverified(v.game(), std::move(sub1)), scratch, deadline);

    if (inner.of(b).none()) {
        WinningPartition out{PositionSet(n), PositionSet(n)};
        out.of(a) = v.alive();
        return out;
    }

    PositionSet B = attractor(v, b, inner.of(b), scratch);
    PositionSet sub2 = v.alive();
    sub2 -= B;

    WinningPartition out =
        zielonka_rec(SubgameView::unverified(v.game(), std::move(sub2)), scratch, deadline);
    out.of(b) |= B;
    return out;
}

/// Per-position menu of distinct alive successors for strategy enumeration.
struct Menus {
    std::vector<std::vector<int>> choice; // indexed by position, empty if not owned/alive
    std::vector<int> positions;           // owner's alive positions
    uint64_t combinations = 1;
};

Menus build_menus(const SubgameView& v, Player a, uint64_t guard)
{
    Menus m;
    m.choice.resize(size_t(v.game().size()));
    bool overflow = false;
    v.alive().for_each([&](int u) {
        if (v.game().owner(u) != a) return;
        auto& menu = m.choice[size_t(u)];
        for (int w : v.game().successors(u))
            if (v.contains(w)) menu.push_back(w);
        std::sort(menu.begin(), menu.end());
        menu.erase(std::unique(menu.begin(), menu.end()), menu.end());
        m.positions.push_back(u);
        if (!menu.empty()) {
            if (m.combinations > guard / menu.size() + 1) overflow = true;
            m.combinations *= uint64_t(menu.size());
        }
        if (m.combinations > guard) overflow = true;
    });
    if (overflow || m.combinations > guard)
        throw OracleGuardError("strategy space exceeds the enumeration guard");
    return m;
}

/// Writes the k-th strategy of the menus into f.
void apply_strategy(const Menus& m, uint64_t k, std::vector<int>& f)
{
    for (int u : m.positions) {
        const auto& menu = m.choice[size_t(u)];
        if (menu.empty()) {
            f[size_t(u)] = -1; // dead end, play stops (cannot happen in wf views)
            continue;
        }
        f[size_t(u)] = menu[size_t(k % menu.size())];
        k /= menu.size();
    }
}

/// Decides each position of the unique play under successor function f:
/// the winner is the parity of the maximal priority on the lasso cycle.
void decide_plays(const SubgameView& v, const std::vector<int>& f, std::vector<int8_t>& winner)
{
    const Game& g = v.game();
    std::fill(winner.begin(), winner.end(), int8_t{-1});
    std::vector<int8_t> state(size_t(g.size()), 0); // 0 fresh, 1 on path, 2 done
    std::vector<int> path;

    v.alive().for_each([&](int start) {
        if (state[size_t(start)] == 2) return;
        path.clear();
        int u = start;
        bool stuck = false;
        while (state[size_t(u)] == 0) {
            state[size_t(u)] = 1;
            path.push_back(u);
            int next = f[size_t(u)];
            if (next < 0) { stuck = true; break; } // dead end: mover loses
            u = next;
        }
        int w;
        if (stuck) {
            w = 1 - to_int(g.owner(u));
        } else if (state[size_t(u)] == 1) {
            // u closes a fresh cycle: suffix of path from u onwards
            int maxpr = -1;
            for (size_t i = path.size(); i-- > 0;) {
                maxpr = std::max(maxpr, g.priority(path[i]));
                if (path[i] == u) break;
            }
            w = maxpr & 1;
        } else {
            w = winner[size_t(u)];
        }
        for (int x : path) {
            winner[size_t(x)] = int8_t(w);
            state[size_t(x)] = 2;
        }
    });
}

PositionSet surely_won(const SubgameView& v, Player a, const Menus& mine, const Menus& theirs)
{
    const int n = v.game().size();
    PositionSet won(n);
    std::vector<int> f(size_t(n), -1);
    std::vector<int8_t> winner(size_t(n), -1);

    for (uint64_t k0 = 0; k0 < mine.combinations; ++k0) {
        apply_strategy(mine, k0, f);
        PositionSet holds = v.alive();
        for (uint64_t k1 = 0; k1 < theirs.combinations; ++k1) {
            apply_strategy(theirs, k1, f);
            decide_plays(v, f, winner);
            holds.for_each([&](int u) {
                if (winner[size_t(u)] != to_int(a)) holds.reset(u);
            });
            if (holds.none()) break;
        }
        won |= holds;
    }
    return won;
}

} // namespace

WinningPartition zielonka(const SubgameView& v,
                          std::optional<std::chrono::steady_clock::time_point> deadline)
{
    AttractorScratch scratch;
    return zielonka_rec(v, scratch, deadline);
}

WinningPartition brute_force(const SubgameView& v, uint64_t pair_guard)
{
    Menus m0 = build_menus(v, Player::zero, pair_guard);
    Menus m1 = build_menus(v, Player::one, pair_guard);
    if (m0.combinations > pair_guard / m1.combinations)
        throw OracleGuardError("strategy space exceeds the enumeration guard");

    WinningPartition out;
    out.w0 = surely_won(v, Player::zero, m0, m1);
    out.w1 = surely_won(v, Player::one, m1, m0);
    return out;
}

} // namespace pg
