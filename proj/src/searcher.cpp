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

#include "pg/searcher.hpp"

#include <stdexcept>

namespace pg {

std::string_view solver_name(SolverKind kind)
{
    switch (kind) {
        case SolverKind::pp: return "pp";
        case SolverKind::pp_plus: return "pp+";
        case SolverKind::dp: return "dp";
        case SolverKind::zielonka: return "zlk";
        case SolverKind::brute: return "brute";
    }
    return "?";
}

std::optional<SolverKind> parse_solver_kind(std::string_view name)
{
    if (name == "pp") return SolverKind::pp;
    if (name == "pp+" || name == "ppplus") return SolverKind::pp_plus;
    if (name == "dp") return SolverKind::dp;
    if (name == "zlk" || name == "zielonka") return SolverKind::zielonka;
    if (name == "brute") return SolverKind::brute;
    return std::nullopt;
}

namespace {

template <typename MakeSpace>
WinningPartition peel_dominions(const SubgameView& input, MakeSpace make, SearchStats& stats,
                                const SearchLimits& limits)
{
    const int n = input.game().size();
    WinningPartition out{PositionSet(n), PositionSet(n)};
    AttractorScratch scratch;

    SubgameView view = input;
    while (!view.empty()) {
        auto space = make(view);
        auto [D, a] = find_dominion(space, stats, limits);
        PositionSet A = attractor(view, a, D, scratch);
        out.of(a) |= A;
        view = subgame(view, A);
        if (!view.empty() && !view.well_formed())
            throw std::logic_error("removing a dominion attractor left a dead end");
    }
    return out;
}

} // namespace

WinningPartition solve(const SubgameView& input, SolverKind kind, SearchStats& stats,
                       const SearchLimits& limits, PromotionTrace* trace)
{
    const int n = input.game().size();
    if (input.empty()) return {PositionSet(n), PositionSet(n)};
    if (!input.well_formed()) throw MalformedGameError();

    auto start = std::chrono::steady_clock::now();
    WinningPartition out;
    switch (kind) {
        case SolverKind::pp:
            out = peel_dominions(
                input, [&](const SubgameView& v) { return PPSpace(v, false, trace); }, stats,
                limits);
            break;
        case SolverKind::pp_plus:
            out = peel_dominions(
                input, [&](const SubgameView& v) { return PPSpace(v, true, trace); }, stats,
                limits);
            break;
        case SolverKind::dp:
            out = peel_dominions(
                input, [&](const SubgameView& v) { return DPSpace(v, trace); }, stats, limits);
            break;
        case SolverKind::zielonka:
            out = zielonka(input, limits.deadline);
            break;
        case SolverKind::brute:
            out = brute_force(input);
            break;
    }
    stats.wall_time += std::chrono::steady_clock::now() - start;

    PositionSet all = out.w0;
    all |= out.w1;
    if (!(all == input.alive()) || out.w0.intersects(out.w1))
        throw std::logic_error("solver produced a non-partition");
    return out;
}

} // namespace pg
