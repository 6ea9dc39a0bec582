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

#include "pg/game.hpp"
#include "pg/priority_map.hpp"

namespace pg {

/**
 * The portion of the search game still to be processed at measure p:
 * the view minus every position with measure above p.
 */
SubgameView subgame_at(const SubgameView& g, const PriorityMap& r, int p);

/**
 * Maximisation of a region function over the alive positions of g: the
 * unique map m whose level at each measure q equals the attractor, inside
 * the subgame at q, of r's level at q. Levels emptied by attraction
 * upward disappear. Used as a test oracle for state-space invariants; the
 * search itself maximises incrementally as it descends.
 */
PriorityMap maximise(const SubgameView& g, const PriorityMap& r);

/**
 * Best escape priority: the minimal measure among the regions reached by
 * moves of the opponent of `alpha` leaving R inside g. Throws NoExitError
 * if no such move exists and Error if an exit lands outside the measure
 * map's domain (a violated maximality precondition).
 */
int bep(const SubgameView& g, const PositionSet& R, Player alpha, const PriorityMap& measure);

/**
 * Test oracle for the region property of (R, alpha) in the view:
 * (i) the view's top priority has alpha's parity, (ii) every escape of the
 * opponent out of R sits at that top priority, and (iii) R is a quasi
 * dominion for alpha, decided by rebuilding R as a standalone game whose
 * opponent exits are redirected to a fresh alpha-winning sink (own exits
 * are dropped; positions of alpha forced out also feed the sink, standing
 * for acceptable play endings) and checking alpha wins it everywhere.
 * Guarded: throws OracleGuardError above `guard` alive positions.
 */
bool verify_region(const SubgameView& v, const PositionSet& R, Player alpha, int guard = 16);

} // namespace pg
