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

#include <span>
#include <string>
#include <vector>

#include "pg/bitset.hpp"
#include "pg/errors.hpp"

namespace pg {

enum class Player : int { zero = 0, one = 1 };

constexpr int to_int(Player a) { return static_cast<int>(a); }

constexpr Player opponent(Player a) { return Player{1 - static_cast<int>(a)}; }

/// The player whose parity the priority has.
constexpr Player parity_player(int priority) { return Player{priority & 1}; }

constexpr bool same_parity(int a, int b) { return ((a ^ b) & 1) == 0; }

/**
 * Immutable game arena: per-position owner, priority, ordered successor
 * list and its exact transpose. Positions are dense indices [0, n).
 * Safe to share across threads once built.
 */
class Game {
public:
    struct PositionSpec {
        int priority;
        Player owner;
        std::vector<int> successors;
        std::string name;
    };

    /// Throws EmptySuccessorsError / IndexOutOfRangeError on bad input.
    static Game build(const std::vector<PositionSpec>& spec);

    int size() const { return n_; }

    Player owner(int v) const { return owner_[v]; }
    int priority(int v) const { return priority_[v]; }
    const std::string& name(int v) const { return names_[v]; }

    std::span<const int> successors(int v) const
    {
        return {succ_.data() + succ_off_[v], succ_.data() + succ_off_[v + 1]};
    }

    std::span<const int> predecessors(int v) const
    {
        return {pred_.data() + pred_off_[v], pred_.data() + pred_off_[v + 1]};
    }

    int move_count() const { return int(succ_.size()); }

    bool operator==(const Game& o) const;

private:
    int n_ = 0;
    std::vector<Player> owner_;
    std::vector<int> priority_;
    std::vector<int> succ_off_, succ_;
    std::vector<int> pred_off_, pred_;
    std::vector<std::string> names_;
};

/**
 * A position mask over a base game. Operations through the view only see
 * alive positions and the moves between them. The well-formedness flag
 * records whether every alive position keeps at least one alive successor;
 * callers decide whether a dead end is an error.
 */
class SubgameView {
public:
    SubgameView() = default;

    static SubgameView full(const Game& g);

    /// Builds a view and computes its well-formedness flag.
    static SubgameView over(const Game& g, PositionSet alive);

    /// Builds a view without computing the flag (internal temporaries whose
    /// flag is never consulted). well_formed() reports false.
    static SubgameView unverified(const Game& g, PositionSet alive);

    const Game& game() const { return *game_; }
    const PositionSet& alive() const { return alive_; }
    bool contains(int v) const { return alive_.test(v); }
    bool well_formed() const { return well_formed_; }
    bool empty() const { return alive_.none(); }
    int alive_count() const { return alive_.count(); }

private:
    SubgameView(const Game& g, PositionSet alive, bool wf)
        : game_(&g), alive_(std::move(alive)), well_formed_(wf) {}

    const Game* game_ = nullptr;
    PositionSet alive_;
    bool well_formed_ = false;
};

/// View minus `removed`; throws NotInViewError when removed reaches outside.
SubgameView subgame(const SubgameView& v, const PositionSet& removed);

/// Maximum priority among alive positions; throws EmptyViewError.
int max_priority(const SubgameView& v);

} // namespace pg
