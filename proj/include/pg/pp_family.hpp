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

#include <vector>

#include "pg/game.hpp"
#include "pg/priority_map.hpp"
#include "pg/setops.hpp"
#include "pg/stats.hpp"

namespace pg {

/// Quasi dominion extracted by a query: an attracted region of the
/// current priority's parity, plus its closedness in the current subgame.
struct QuasiRegion {
    PositionSet set;
    Player winner;
    bool closed_in_subgame;
};

/**
 * State of a promotion search: the region function r, the current
 * priority p, and (cached) the alive mask of the subgame at p.
 */
struct PPState {
    PriorityMap r;
    int p = -1;
    PositionSet sub; // alive positions of the subgame at (r, p)
};

/**
 * Promotion search over a fixed view for the two eager policies. They
 * share the query and the open-region step; they differ in what a
 * promotion to p* resets: the original policy resets every region below
 * p*, the retaining policy only those of the opposite parity.
 */
class PPSpace {
public:
    using State = PPState;

    PPSpace(SubgameView view, bool retain_same_parity, PromotionTrace* trace = nullptr)
        : view_(std::move(view)), retain_(retain_same_parity), trace_(trace) {}

    const SubgameView& view() const { return view_; }

    State top() const;

    /// Attracts the current level inside the subgame at the state.
    QuasiRegion query(const State& s) const;

    /// Open region: record it at p and step down. Closed region: promote
    /// it to its best escape priority and reset below per policy.
    State successor(State s, const QuasiRegion& q, SearchStats& stats) const;

    /// Strict state order: some level >= p1 strictly grew with everything
    /// above unchanged, or equal functions with a lower current priority.
    bool precedes(const State& s1, const State& s2) const;

    /// Oracle-backed state invariants (maximality above p, p in range,
    /// every level a region in its maximisation subgame). Test/debug use.
    void validate_state(const State& s, int region_guard = 16) const;

    /// Compatibility of a query output with a state (test/debug use).
    bool check_compatibility(const State& s, const QuasiRegion& q, int region_guard = 16) const;

protected:
    QuasiRegion query_at(const PriorityMap& r, int p, const PositionSet& sub) const;
    State assign_open(State s, const QuasiRegion& q) const;
    State promote(State s, const QuasiRegion& q, int target, SearchStats& stats,
                  PromotionEvent::Kind kind) const;
    void refresh_subgame(State& s) const;
    void validate_pp_state(const PriorityMap& r, int p, const PositionSet& sub,
                           int region_guard) const;

    SubgameView view_;
    bool retain_;
    PromotionTrace* trace_;
    mutable AttractorScratch scratch_;
};

/**
 * Delayed-promotion state: the underlying search state plus the map of
 * delayed promotions (position -> target measure) and the set of instant
 * promotion targets performed in this search round.
 */
struct DPState {
    PPState base;
    PriorityMap rhat;
    std::vector<int> promos; // ascending, unique
};

/// Performed instant promotions of opposite parity below q block it.
bool phi_a(int q, const std::vector<int>& promos);

/// Promotions straddling a recorded delayed target block it.
bool phi_b(int q, const PriorityMap& r, const PriorityMap& rhat);

/**
 * The delaying policy. Promotions whose target is locked are recorded
 * instead of performed; when the descent exhausts the subgame, the
 * highest recorded target is applied together with every delayed
 * promotion of its parity, and the records are erased.
 */
class DPSpace : private PPSpace {
public:
    using State = DPState;

    DPSpace(SubgameView view, PromotionTrace* trace = nullptr)
        : PPSpace(std::move(view), true, trace) {}

    using PPSpace::view;

    State top() const;
    QuasiRegion query(const State& s) const;
    State successor(State s, const QuasiRegion& q, SearchStats& stats) const;
    bool precedes(const State& s1, const State& s2) const;
    void validate_state(const State& s, int region_guard = 16) const;
    bool check_compatibility(const State& s, const QuasiRegion& q, int region_guard = 16) const;

    /// Lock predicate for a promotion of the queried region to target q.
    bool locked(int q, const State& s) const;
};

} // namespace pg
