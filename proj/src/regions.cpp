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

#include "pg/regions.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "pg/baseline.hpp"
#include "pg/setops.hpp"

namespace pg {

SubgameView subgame_at(const SubgameView& g, const PriorityMap& r, int p)
{
    PositionSet alive = g.alive();
    alive.for_each([&](int v) {
        if (r.contains(v) && r.at(v) > p) alive.reset(v);
    });
    return SubgameView::over(g.game(), std::move(alive));
}

PriorityMap maximise(const SubgameView& g, const PriorityMap& r)
{
    std::vector<int> levels;
    g.alive().for_each([&](int v) { levels.push_back(r.at(v)); });
    std::sort(levels.begin(), levels.end(), std::greater<>());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    PriorityMap m(r.capacity());
    PositionSet remaining = g.alive();
    AttractorScratch scratch;
    for (int q : levels) {
        PositionSet base(r.capacity());
        remaining.for_each([&](int v) {
            if (r.at(v) == q) base.set(v);
        });
        if (base.none()) continue;
        SubgameView sub = SubgameView::unverified(g.game(), remaining);
        PositionSet level = attractor(sub, parity_player(q), base, scratch);
        level.for_each([&](int v) { m.set(v, q); });
        remaining -= level;
    }
    return m;
}

int bep(const SubgameView& g, const PositionSet& R, Player alpha, const PriorityMap& measure)
{
    const Game& game = g.game();
    const Player b = opponent(alpha);
    int best = std::numeric_limits<int>::max();
    bool found = false;
    R.for_each([&](int v) {
        if (game.owner(v) != b) return;
        for (int u : game.successors(v)) {
            if (!g.contains(u) || R.test(u)) continue;
            if (!measure.contains(u))
                throw Error("exit move lands outside the measure map");
            best = std::min(best, measure.at(u));
            found = true;
        }
    });
    if (!found) throw NoExitError();
    return best;
}

bool verify_region(const SubgameView& v, const PositionSet& R, Player alpha, int guard)
{
    if (v.alive_count() > guard)
        throw OracleGuardError("view too large for the region oracle");
    if (R.none() || !R.is_subset_of(v.alive())) return false;

    const Game& game = v.game();
    const int top = max_priority(v);
    if (parity_player(top) != alpha) return false;

    PositionSet esc = escape(v, opponent(alpha), R);
    bool esc_ok = true;
    esc.for_each([&](int u) {
        if (game.priority(u) != top) esc_ok = false;
    });
    if (!esc_ok) return false;

    // Quasi-dominion core via a standalone game over R plus a sink.
    std::vector<int> map_to(size_t(game.size()), -1);
    std::vector<int> members = R.to_vector();
    for (size_t i = 0; i < members.size(); ++i) map_to[size_t(members[i])] = int(i);
    const int sink = int(members.size());

    int max_pr = 0;
    R.for_each([&](int u) { max_pr = std::max(max_pr, game.priority(u)); });
    int sink_pr = max_pr + 1;
    if (parity_player(sink_pr) != alpha) ++sink_pr;

    std::vector<Game::PositionSpec> spec(members.size() + 1);
    for (size_t i = 0; i < members.size(); ++i) {
        int u = members[i];
        auto& p = spec[i];
        p.priority = game.priority(u);
        p.owner = game.owner(u);
        bool exits = false;
        for (int w : game.successors(u)) {
            if (!v.contains(w)) continue;
            if (R.test(w)) p.successors.push_back(map_to[size_t(w)]);
            else exits = true;
        }
        if (game.owner(u) != alpha && exits) p.successors.push_back(sink);
        // A position with no move left ends its plays; by (ii) those
        // endings sit at acceptable escapes, so they feed the sink too.
        if (p.successors.empty()) p.successors.push_back(sink);
    }
    spec[size_t(sink)] = {sink_pr, Player::zero, {sink}, ""};

    Game probe = Game::build(spec);
    WinningPartition w = brute_force(SubgameView::full(probe));
    const PositionSet& wins = w.of(alpha);
    for (size_t i = 0; i < members.size(); ++i)
        if (!wins.test(int(i))) return false;
    return true;
}

} // namespace pg
