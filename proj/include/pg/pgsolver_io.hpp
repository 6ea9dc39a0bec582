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

#include <string>
#include <string_view>

#include "pg/game.hpp"

namespace pg {

/**
 * Parses the pgsolver text format:
 *
 *   parity <max-id>;            (optional header; validated as an id bound)
 *   <id> <priority> <owner> <succ>(,<succ>)* ("name")? ;
 *
 * Whitespace between tokens is free-form; the final ';' may be missing on
 * the last record. Ids may be sparse and are mapped densely in ascending
 * id order.
 */
Game parse_pgsolver(std::string_view text);

/**
 * Canonical form: header "parity <n-1>;", then one '\n'-terminated line per
 * position in index order with successors comma-separated in stored order.
 * parse_pgsolver(write_pgsolver(g)) reproduces g exactly.
 */
std::string write_pgsolver(const Game& g);

} // namespace pg
