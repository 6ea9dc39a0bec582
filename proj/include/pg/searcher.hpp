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

#include <chrono>
#include <concepts>
#include <optional>
#include <string_view>
#include <utility>

#include "pg/baseline.hpp"
#include "pg/pp_family.hpp"
#include "pg/setops.hpp"
#include "pg/stats.hpp"

namespace pg {

struct SearchLimits {
    /// Trips NonTerminationError; far above any reachable depth at desk
    /// scale, so only a policy bug can hit it.
    uint64_t max_queries = uint64_t{1} << 40;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    /// Runs the oracle-backed state checks after every step (small games).
    bool debug_checks = false;
    int oracle_guard = 16;
};

/**
 * A dominion space: an initial state, a query extracting a quasi dominion
 * and a successor that must strictly descend in the state order.
 */
template <typename S>
concept DominionSpace = requires(const S& sp, typename S::State st, const QuasiRegion& q,
                                 SearchStats& stats) {
    { sp.top() } -> std::same_as<typename S::State>;
    { sp.query(st) } -> std::same_as<QuasiRegion>;
    { sp.successor(std::move(st), q, stats) } -> std::same_as<typename S::State>;
    { sp.precedes(st, st) } -> std::same_as<bool>;
    { sp.view() } -> std::same_as<const SubgameView&>;
};

/**
 * The dominion search: query the current state, stop as soon as the
 * extracted quasi dominion is closed in the whole search game, otherwise
 * step to a successor state. Returns a closed region, hence a dominion.
 */
template <DominionSpace Space>
std::pair<PositionSet, Player> find_dominion(const Space& space, SearchStats& stats,
                                             const SearchLimits& limits = {})
{
    auto s = space.top();
    if (limits.debug_checks) space.validate_state(s, limits.oracle_guard);

    uint64_t steps = 0;
    while (true) {
        if (++steps > limits.max_queries) throw NonTerminationError();
        if (limits.deadline && (steps & 0x3fff) == 0
            && std::chrono::steady_clock::now() > *limits.deadline)
            throw TimeoutError();

        ++stats.queries;
        QuasiRegion q = space.query(s);
        if (limits.debug_checks && !space.check_compatibility(s, q, limits.oracle_guard))
            throw std::logic_error("query output incompatible with its state");

        if (escape(space.view(), opponent(q.winner), q.set).none())
            return {std::move(q.set), q.winner};

        if (limits.debug_checks) {
            auto before = s;
            s = space.successor(std::move(s), q, stats);
            space.validate_state(s, limits.oracle_guard);
            if (!space.precedes(s, before))
                throw std::logic_error("successor state does not descend");
        } else {
            s = space.successor(std::move(s), q, stats);
        }
    }
}

enum class SolverKind { pp, pp_plus, dp, zielonka, brute };

std::string_view solver_name(SolverKind kind);
std::optional<SolverKind> parse_solver_kind(std::string_view name);

/**
 * Full solve: peels dominions off the view (promotion policies), or runs
 * the oracle solvers. Rejects views that are not well-formed. Returns a
 * partition of the alive positions; stats.wall_time covers the whole run.
 */
WinningPartition solve(const SubgameView& input, SolverKind kind, SearchStats& stats,
                       const SearchLimits& limits = {}, PromotionTrace* trace = nullptr);

} // namespace pg
