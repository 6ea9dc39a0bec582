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

#include "pg/game.hpp"

#include <algorithm>

namespace pg {

Game Game::build(const std::vector<PositionSpec>& spec)
{
    Game g;
    g.n_ = int(spec.size());
    g.owner_.reserve(g.n_);
    g.priority_.reserve(g.n_);
    g.names_.reserve(g.n_);
    g.succ_off_.assign(size_t(g.n_) + 1, 0);

    int moves = 0;
    for (int v = 0; v < g.n_; ++v) {
        const auto& p = spec[v];
        if (p.successors.empty()) throw EmptySuccessorsError(v);
        for (int u : p.successors)
            if (u < 0 || u >= g.n_) throw IndexOutOfRangeError(v, u);
        moves += int(p.successors.size());
    }

    g.succ_.reserve(moves);
    for (int v = 0; v < g.n_; ++v) {
        const auto& p = spec[v];
        g.owner_.push_back(p.owner);
        g.priority_.push_back(p.priority);
        g.names_.push_back(p.name);
        g.succ_off_[size_t(v) + 1] = g.succ_off_[v] + int(p.successors.size());
        g.succ_.insert(g.succ_.end(), p.successors.begin(), p.successors.end());
    }

    // Transpose, preserving multiplicity. Predecessor lists come out in
    // ascending source order.
    g.pred_off_.assign(size_t(g.n_) + 1, 0);
    for (int u : g.succ_) g.pred_off_[size_t(u) + 1]++;
    for (int v = 0; v < g.n_; ++v) g.pred_off_[size_t(v) + 1] += g.pred_off_[v];
    g.pred_.resize(size_t(moves));
    std::vector<int> cursor(g.pred_off_.begin(), g.pred_off_.end() - 1);
    for (int v = 0; v < g.n_; ++v)
        for (int u : g.successors(v))
            g.pred_[size_t(cursor[u]++)] = v;

    return g;
}

bool Game::operator==(const Game& o) const
{
    return n_ == o.n_ && owner_ == o.owner_ && priority_ == o.priority_
        && succ_off_ == o.succ_off_ && succ_ == o.succ_ && names_ == o.names_;
}

namespace {

bool compute_well_formed(const Game& g, const PositionSet& alive)
{
    bool ok = true;
    alive.for_each([&](int v) {
        if (!ok) return;
        bool has = false;
        for (int u : g.successors(v))
            if (alive.test(u)) { has = true; break; }
        if (!has) ok = false;
    });
    return ok;
}

} // namespace

SubgameView SubgameView::full(const Game& g)
{
    PositionSet alive(g.size());
    alive.set_all();
    // Left-totality is enforced at construction, so the full view is
    // always well-formed.
    return SubgameView(g, std::move(alive), true);
}

SubgameView SubgameView::over(const Game& g, PositionSet alive)
{
    bool wf = compute_well_formed(g, alive);
    return SubgameView(g, std::move(alive), wf);
}

SubgameView SubgameView::unverified(const Game& g, PositionSet alive)
{
    return SubgameView(g, std::move(alive), false);
}

SubgameView subgame(const SubgameView& v, const PositionSet& removed)
{
    if (!removed.is_subset_of(v.alive())) {
        int bad = -1;
        removed.for_each([&](int u) {
            if (bad < 0 && !v.contains(u)) bad = u;
        });
        throw NotInViewError(bad);
    }
    PositionSet alive = v.alive();
    alive -= removed;
    return SubgameView::over(v.game(), std::move(alive));
}

int max_priority(const SubgameView& v)
{
    if (v.empty()) throw EmptyViewError();
    int best = -1;
    v.alive().for_each([&](int u) {
        best = std::max(best, v.game().priority(u));
    });
    return best;
}

} // namespace pg
