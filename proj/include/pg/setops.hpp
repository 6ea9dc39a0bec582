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

namespace pg {

/**
 * Reusable buffers for the attractor worklist. One scratch per concurrent
 * solve; the out-degree counters are recomputed on every call rather than
 * maintained across promotions.
 */
struct AttractorScratch {
    std::vector<int> out_degree;
    std::vector<int> worklist;
};

/**
 * One-step forcing: positions from which player a can ensure reaching V
 * with a single move inside the view. Owned positions need one move into
 * V; opponent positions need all their alive moves inside V.
 */
PositionSet pre(const SubgameView& v, Player a, const PositionSet& V);

/**
 * Least fixpoint of X -> V ∪ pre(X) above V, computed with the standard
 * counter-based worklist over predecessor lists (linear in moves).
 */
PositionSet attractor(const SubgameView& v, Player a, const PositionSet& V,
                      AttractorScratch& scratch);
PositionSet attractor(const SubgameView& v, Player a, const PositionSet& V);

/**
 * Positions inside V from which player a can leave V in one move within
 * the view. For a's own positions this means some alive move exits; for
 * opponent positions it means every alive move exits.
 */
PositionSet escape(const SubgameView& v, Player a, const PositionSet& V);

/// (V ∩ positions of a) minus escape(v, a, V).
PositionSet interior(const SubgameView& v, Player a, const PositionSet& V);

} // namespace pg
