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

#include <cstdint>

#include "pg/game.hpp"

namespace pg {

/**
 * splitmix64: the bit-exact PRNG behind every generated benchmark.
 * next() returns Steele et al.'s splitmix64 stream for the seed;
 * below(n) draws uniformly from [0, n) by rejection on the top 2^64 % n
 * values, so results are identical on every platform.
 */
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next()
    {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint64_t below(uint64_t n)
    {
        uint64_t limit = n * ((~uint64_t{0} / n));
        uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

private:
    uint64_t state_;
};

struct RandomSpec {
    int n = 0;       // positions
    int k = 0;       // priorities, drawn uniformly from [0, k)
    int d = 0;       // distinct successors per position (self-loops allowed)
    uint64_t seed = 0;
};

/**
 * Seeded random game. Per position, in index order: priority, then owner,
 * then d distinct successors by repeated draws skipping duplicates.
 * Requires 1 <= k <= n and 1 <= d < n (throws std::invalid_argument).
 */
Game random_game(const RandomSpec& spec);

/**
 * The h-chain worst case for the retaining promotion policy: chains of a
 * head (priority 2(h+1)-i) over a single-position body (priority i) with a
 * self loop, all converging on a self-looped center of priority 0. Heads
 * move to their body or the center; bodies to themselves or their head;
 * chain positions are owned by the player opposite to their priority's
 * parity, the center by player zero. 2h+1 positions.
 */
Game worstcase_ppplus(int h);

/// Number of counter configurations the retaining policy walks through on
/// the h-chain game: C(h) = C(h-1) + C(h-2) + 1 with C(0)=1, C(1)=2.
uint64_t counter_configs(int h);

/**
 * Closed form of the search depth on the h-chain game,
 * Fib(2(h+4))/Fib(h+4) - (h+6), in exact integer arithmetic (the division
 * is exact). Guarded up to h = 40 to stay within 64 bits.
 */
uint64_t fib_depth(int h);

} // namespace pg
