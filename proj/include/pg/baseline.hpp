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
#include <cstdint>
#include <optional>

#include "pg/game.hpp"

namespace pg {

struct WinningPartition {
    PositionSet w0;
    PositionSet w1;

    const PositionSet& of(Player a) const { return a == Player::zero ? w0 : w1; }
    PositionSet& of(Player a) { return a == Player::zero ? w0 : w1; }
    bool operator==(const WinningPartition&) const = default;
};

/**
 * Zielonka's recursive algorithm. Independent of the promotion solvers;
 * used as a mid-scale oracle.
 */
WinningPartition zielonka(
    const SubgameView& v,
    std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

/**
 * Positional-strategy enumeration: a position is won by a player iff some
 * strategy of theirs beats every opponent strategy from it, deciding each
 * induced lasso by the parity of its cycle maximum. The guard bounds the
 * number of strategy pairs (product of alive out-degrees per player).
 */
WinningPartition brute_force(const SubgameView& v, uint64_t pair_guard = uint64_t{1} << 20);

} // namespace pg
