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

#include "pg/bitset.hpp"

namespace pg {

/**
 * Partial map position -> priority, backed by a dense vector; kAbsent
 * marks positions outside the domain. Region functions are these maps,
 * total over the positions of the current search game.
 */
class PriorityMap {
public:
    static constexpr int kAbsent = -1;

    PriorityMap() = default;
    explicit PriorityMap(int capacity) : val_(size_t(capacity), kAbsent) {}

    int capacity() const { return int(val_.size()); }

    bool contains(int v) const { return val_[size_t(v)] != kAbsent; }
    int at(int v) const { return val_[size_t(v)]; }
    void set(int v, int q) { val_[size_t(v)] = q; }
    void erase(int v) { val_[size_t(v)] = kAbsent; }

    void clear()
    {
        for (auto& q : val_) q = kAbsent;
    }

    bool empty() const
    {
        for (auto q : val_)
            if (q != kAbsent) return false;
        return true;
    }

    int domain_size() const
    {
        int n = 0;
        for (auto q : val_)
            if (q != kAbsent) ++n;
        return n;
    }

    PositionSet domain() const
    {
        PositionSet out(capacity());
        for (int v = 0; v < capacity(); ++v)
            if (contains(v)) out.set(v);
        return out;
    }

    /// Members of measure q, as a set.
    PositionSet level(int q) const
    {
        PositionSet out(capacity());
        for (int v = 0; v < capacity(); ++v)
            if (val_[size_t(v)] == q) out.set(v);
        return out;
    }

    template <typename Fn> // fn(position, priority), ascending positions
    void for_each(Fn&& fn) const
    {
        for (int v = 0; v < capacity(); ++v)
            if (val_[size_t(v)] != kAbsent) fn(v, val_[size_t(v)]);
    }

    bool operator==(const PriorityMap&) const = default;

private:
    std::vector<int> val_;
};

/// Comparison selecting a domain restriction of a priority map.
enum class Cmp { ge, gt, lt, same_parity };

/// r restricted to positions whose measure relates to p under rel.
PriorityMap restricted(const PriorityMap& r, Cmp rel, int p);

/// Completion f ⊎ g: g wins on its domain, f elsewhere.
PriorityMap completion(PriorityMap f, const PriorityMap& g);

} // namespace pg
