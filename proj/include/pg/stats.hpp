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
#include <chrono>
#include <vector>

namespace pg {

/**
 * Work counters of one solver run. `promotions` counts every successor
 * step that merged a region upward (instant promotions and flushes alike),
 * `delayed` the deferred promotions, `flushes` the end-of-descent steps
 * applying them, and `resets` the cumulative number of positions whose
 * measure was returned to its original priority.
 */
struct SearchStats {
    uint64_t queries = 0;
    uint64_t promotions = 0;
    uint64_t delayed = 0;
    uint64_t flushes = 0;
    uint64_t resets = 0;
    std::chrono::nanoseconds wall_time{0};
};

/// One promotion-like event, for trace tests and debugging.
struct PromotionEvent {
    enum class Kind { instant, delayed, flush };
    Kind kind;
    int from;                     // measure of the closed region
    int to;                       // target measure
    std::vector<int> reset_levels; // measures that lost at least one position
    bool operator==(const PromotionEvent&) const = default;
};

using PromotionTrace = std::vector<PromotionEvent>;

} // namespace pg
