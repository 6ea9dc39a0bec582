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

#include "pg/setops.hpp"

#include <cassert>

namespace pg {

// Opponent positions are forced when every alive move stays inside the
// target; the quantifier is vacuously true on dead ends, so a malformed
// view keeps the exact fixpoint semantics.

PositionSet pre(const SubgameView& v, Player a, const PositionSet& V)
{
    assert(V.is_subset_of(v.alive()));
    const Game& g = v.game();
    PositionSet out(g.size());
    v.alive().for_each([&](int u) {
        bool in_target = false;
        bool all_in = true;
        for (int w : g.successors(u)) {
            if (!v.contains(w)) continue;
            if (V.test(w)) in_target = true;
            else all_in = false;
        }
        if (g.owner(u) == a ? in_target : all_in) out.set(u);
    });
    return out;
}

PositionSet attractor(const SubgameView& v, Player a, const PositionSet& V,
                      AttractorScratch& scratch)
{
    assert(V.is_subset_of(v.alive()));
    const Game& g = v.game();
    const Player b = opponent(a);

    PositionSet A = V;
    auto& todo = scratch.worklist;
    todo.clear();
    V.for_each([&](int u) { todo.push_back(u); });

    auto& cnt = scratch.out_degree;
    cnt.assign(size_t(g.size()), 0);
    v.alive().for_each([&](int u) {
        int d = 0;
        for (int w : g.successors(u))
            if (v.contains(w)) ++d;
        cnt[size_t(u)] = d;
        if (d == 0 && g.owner(u) == b && !A.test(u)) {
            A.set(u);
            todo.push_back(u);
        }
    });

    while (!todo.empty()) {
        int u = todo.back();
        todo.pop_back();
        for (int w : g.predecessors(u)) {
            if (!v.contains(w) || A.test(w)) continue;
            if (g.owner(w) == a) {
                A.set(w);
                todo.push_back(w);
            } else if (--cnt[size_t(w)] == 0) {
                A.set(w);
                todo.push_back(w);
            }
        }
    }
    return A;
}

PositionSet attractor(const SubgameView& v, Player a, const PositionSet& V)
{
    AttractorScratch scratch;
    return attractor(v, a, V, scratch);
}

PositionSet escape(const SubgameView& v, Player a, const PositionSet& V)
{
    assert(V.is_subset_of(v.alive()));
    const Game& g = v.game();
    PositionSet out(g.size());
    V.for_each([&](int u) {
        bool can_exit = false;
        bool all_exit = true;
        for (int w : g.successors(u)) {
            if (!v.contains(w)) continue;
            if (V.test(w)) all_exit = false;
            else can_exit = true;
        }
        if (g.owner(u) == a ? can_exit : all_exit) out.set(u);
    });
    return out;
}

PositionSet interior(const SubgameView& v, Player a, const PositionSet& V)
{
    PositionSet esc = escape(v, a, V);
    PositionSet result(v.game().size());
    V.for_each([&](int u) {
        if (v.game().owner(u) == a && !esc.test(u)) result.set(u);
    });
    return result;
}

} // namespace pg
