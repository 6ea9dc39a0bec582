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

#include "pg/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pg {

Game random_game(const RandomSpec& spec)
{
    if (spec.n < 1) throw std::invalid_argument("random game needs at least one position");
    if (spec.k < 1 || spec.k > spec.n)
        throw std::invalid_argument("priority count must satisfy 1 <= k <= n");
    if (spec.d < 1 || spec.d >= spec.n)
        throw std::invalid_argument("out-degree must satisfy 1 <= d < n");

    SplitMix64 rng(spec.seed);
    std::vector<Game::PositionSpec> positions(size_t(spec.n));
    for (auto& p : positions) {
        p.priority = int(rng.below(uint64_t(spec.k)));
        p.owner = Player{int(rng.below(2))};
        p.successors.reserve(size_t(spec.d));
        while (int(p.successors.size()) < spec.d) {
            int t = int(rng.below(uint64_t(spec.n)));
            if (std::find(p.successors.begin(), p.successors.end(), t) == p.successors.end())
                p.successors.push_back(t);
        }
    }
    return Game::build(positions);
}

Game worstcase_ppplus(int h)
{
    if (h < 1) throw std::invalid_argument("the chain family needs h >= 1");
    // Index layout: head_i at 2(i-1), body_i at 2(i-1)+1, center last.
    const int center = 2 * h;
    std::vector<Game::PositionSpec> positions(size_t(2 * h + 1));
    for (int i = 1; i <= h; ++i) {
        auto& head = positions[size_t(2 * (i - 1))];
        auto& body = positions[size_t(2 * (i - 1) + 1)];
        const int head_idx = 2 * (i - 1);
        const int body_idx = head_idx + 1;
        head.priority = 2 * (h + 1) - i;
        body.priority = i;
        head.owner = body.owner = opponent(parity_player(i));
        head.successors = {body_idx, center};
        body.successors = {body_idx, head_idx};
        head.name = "h" + std::to_string(i);
        body.name = "b" + std::to_string(i);
    }
    positions[size_t(center)] = {0, Player::zero, {center}, "c"};
    return Game::build(positions);
}

uint64_t counter_configs(int h)
{
    if (h < 0) throw std::invalid_argument("h must be non-negative");
    uint64_t a = 1, b = 2; // C(0), C(1)
    if (h == 0) return a;
    for (int i = 2; i <= h; ++i) {
        uint64_t c = b + a + 1;
        a = b;
        b = c;
    }
    return b;
}

uint64_t fib_depth(int h)
{
    if (h < 0 || h > 40) throw std::invalid_argument("fib_depth is guarded to 0 <= h <= 40");
    auto fib = [](int i) {
        uint64_t a = 0, b = 1; // Fib(0), Fib(1)
        for (int j = 0; j < i; ++j) {
            uint64_t c = a + b;
            a = b;
            b = c;
        }
        return a;
    };
    uint64_t top = fib(2 * (h + 4));
    uint64_t bottom = fib(h + 4);
    return top / bottom - uint64_t(h + 6);
}

} // namespace pg
