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

#include "pg/pp_family.hpp"

#include <algorithm>
#include <stdexcept>

#include "pg/regions.hpp"

namespace pg {

PPState PPSpace::top() const
{
    const Game& g = view_.game();
    PPState s;
    s.r = PriorityMap(g.size());
    view_.alive().for_each([&](int v) { s.r.set(v, g.priority(v)); });
    s.p = max_priority(view_);
    s.sub = view_.alive();
    return s;
}

QuasiRegion PPSpace::query_at(const PriorityMap& r, int p, const PositionSet& sub) const
{
    const Player a = parity_player(p);
    PositionSet base(r.capacity());
    sub.for_each([&](int v) {
        if (r.at(v) == p) base.set(v);
    });
    SubgameView gs = SubgameView::unverified(view_.game(), sub);
    PositionSet R = attractor(gs, a, base, scratch_);
    bool closed = escape(gs, opponent(a), R).none();
    return {std::move(R), a, closed};
}

QuasiRegion PPSpace::query(const State& s) const
{
    return query_at(s.r, s.p, s.sub);
}

PPState PPSpace::assign_open(PPState s, const QuasiRegion& q) const
{
    q.set.for_each([&](int v) { s.r.set(v, s.p); });
    s.sub -= q.set;
    int next = -1;
    s.sub.for_each([&](int v) { next = std::max(next, s.r.at(v)); });
    if (next < 0)
        throw std::logic_error("descent ran out of subgame below an open region");
    s.p = next;
    return s;
}

void PPSpace::refresh_subgame(State& s) const
{
    PositionSet sub(view_.game().size());
    view_.alive().for_each([&](int v) {
        if (s.r.at(v) <= s.p) sub.set(v);
    });
    s.sub = std::move(sub);
}

PPState PPSpace::promote(PPState s, const QuasiRegion& q, int target, SearchStats& stats,
                         PromotionEvent::Kind kind) const
{
    if (target <= s.p || parity_player(target) != q.winner)
        throw std::logic_error("promotion target must exceed the measure at its own parity");
    const Game& g = view_.game();
    stats.promotions++;

    std::vector<int> reset_levels;
    view_.alive().for_each([&](int v) {
        if (q.set.test(v)) return;
        int mv = s.r.at(v);
        if (mv >= target) return;
        if (retain_ && same_parity(mv, target)) return;
        if (mv != g.priority(v)) {
            stats.resets++;
            reset_levels.push_back(mv);
            s.r.set(v, g.priority(v));
        }
    });
    q.set.for_each([&](int v) { s.r.set(v, target); });

    int from = s.p;
    s.p = target;
    refresh_subgame(s);

    if (trace_) {
        std::sort(reset_levels.begin(), reset_levels.end());
        reset_levels.erase(std::unique(reset_levels.begin(), reset_levels.end()),
                           reset_levels.end());
        trace_->push_back({kind, from, target, std::move(reset_levels)});
    }
    return s;
}

PPState PPSpace::successor(PPState s, const QuasiRegion& q, SearchStats& stats) const
{
    if (!q.closed_in_subgame) return assign_open(std::move(s), q);
    int target = bep(view_, q.set, q.winner, s.r);
    return promote(std::move(s), q, target, stats, PromotionEvent::Kind::instant);
}

bool PPSpace::precedes(const State& s1, const State& s2) const
{
    int qstar = -1;
    view_.alive().for_each([&](int v) {
        if (s1.r.at(v) != s2.r.at(v))
            qstar = std::max({qstar, s1.r.at(v), s2.r.at(v)});
    });
    if (qstar < 0) return s1.p < s2.p;
    // Above qstar both functions agree by its maximality; the level at
    // qstar must have strictly grown, and sit at or above s1's priority.
    if (qstar < s1.p) return false;
    bool subset = true, strict = false;
    view_.alive().for_each([&](int v) {
        bool in1 = s1.r.at(v) == qstar;
        bool in2 = s2.r.at(v) == qstar;
        if (in2 && !in1) subset = false;
        if (in1 && !in2) strict = true;
    });
    return subset && strict;
}

void PPSpace::validate_pp_state(const PriorityMap& r, int p, const PositionSet& sub,
                                int region_guard) const
{
    const Game& g = view_.game();

    view_.alive().for_each([&](int v) {
        if (!r.contains(v))
            throw std::logic_error("region function not total over the search game");
    });

    bool has_p = false;
    view_.alive().for_each([&](int v) {
        if (r.at(v) == p) has_p = true;
    });
    if (!has_p) throw std::logic_error("current priority not in the range of r");

    PositionSet expect(g.size());
    view_.alive().for_each([&](int v) {
        if (r.at(v) <= p) expect.set(v);
    });
    if (!(expect == sub)) throw std::logic_error("cached subgame mask out of date");

    PriorityMap m = maximise(view_, r);
    view_.alive().for_each([&](int v) {
        bool above1 = r.at(v) > p, above2 = m.at(v) > p;
        if (above1 != above2 || (above1 && r.at(v) != m.at(v)))
            throw std::logic_error("region function not maximal above the current priority");
    });

    // Every level must be a region inside the subgame of its measure.
    std::vector<int> levels;
    view_.alive().for_each([&](int v) { levels.push_back(m.at(v)); });
    std::sort(levels.begin(), levels.end(), std::greater<>());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    for (int q : levels) {
        PositionSet alive_q(g.size());
        PositionSet S(g.size());
        view_.alive().for_each([&](int v) {
            if (m.at(v) <= q) alive_q.set(v);
            if (m.at(v) == q && r.at(v) == q) S.set(v);
        });
        if (S.none()) continue;
        if (!verify_region(SubgameView::over(g, std::move(alive_q)), S, parity_player(q),
                           region_guard))
            throw std::logic_error("level " + std::to_string(q)
                                   + " is not a region in its subgame");
    }
}

void PPSpace::validate_state(const State& s, int region_guard) const
{
    validate_pp_state(s.r, s.p, s.sub, region_guard);
}

bool PPSpace::check_compatibility(const State& s, const QuasiRegion& q, int region_guard) const
{
    SubgameView gs = SubgameView::over(view_.game(), s.sub);
    if (!verify_region(gs, q.set, q.winner, region_guard)) return false;
    if (q.closed_in_subgame) return true;
    QuasiRegion expect = query_at(s.r, s.p, s.sub);
    return q.set == expect.set;
}

bool phi_a(int q, const std::vector<int>& promos)
{
    for (int l : promos)
        if (!same_parity(l, q) && l < q) return true;
    return false;
}

bool phi_b(int q, const PriorityMap& r, const PriorityMap& rhat)
{
    bool hit = false;
    rhat.for_each([&](int v, int t) {
        if (r.at(v) < q && q <= t) hit = true;
    });
    return hit;
}

DPState DPSpace::top() const
{
    DPState s;
    s.base = PPSpace::top();
    s.rhat = PriorityMap(view().game().size());
    return s;
}

QuasiRegion DPSpace::query(const State& s) const
{
    return query_at(s.base.r, s.base.p, s.base.sub);
}

bool DPSpace::locked(int q, const State& s) const
{
    return phi_a(q, s.promos) || phi_b(q, s.base.r, s.rhat);
}

DPState DPSpace::successor(DPState s, const QuasiRegion& q, SearchStats& stats) const
{
    if (!q.closed_in_subgame) {
        s.base = assign_open(std::move(s.base), q);
        return s;
    }

    const int target = bep(view(), q.set, q.winner, completion(s.base.r, s.rhat));

    if (!locked(target, s)) {
        // Instant promotion. Delayed records whose underlying levels the
        // reset destroys (opposite target parity) are dropped, as are
        // records no longer strictly above the new current priority.
        std::vector<int> stale;
        s.rhat.for_each([&](int v, int t) {
            if (!same_parity(t, target) || s.base.r.at(v) <= target) stale.push_back(v);
        });
        for (int v : stale) s.rhat.erase(v);
        s.base = promote(std::move(s.base), q, target, stats, PromotionEvent::Kind::instant);
        auto it = std::lower_bound(s.promos.begin(), s.promos.end(), target);
        if (it == s.promos.end() || *it != target) s.promos.insert(it, target);
        return s;
    }

    PositionSet rest = s.base.sub;
    rest -= q.set;
    if (rest.any()) {
        // Delay: record the region at its measure in r and its target in
        // rhat, then keep descending.
        stats.delayed++;
        if (trace_) trace_->push_back({PromotionEvent::Kind::delayed, s.base.p, target, {}});
        q.set.for_each([&](int v) { s.rhat.set(v, target); });
        s.base = assign_open(std::move(s.base), q);
        return s;
    }

    // The subgame is exhausted: apply the highest delayed promotion and
    // every recorded one of the same parity at once, then start a fresh
    // round with empty supplements.
    stats.flushes++;
    stats.promotions++;
    const int from = s.base.p;
    q.set.for_each([&](int v) { s.rhat.set(v, target); });

    int pstar = -1;
    s.rhat.for_each([&](int, int t) { pstar = std::max(pstar, t); });
    s.rhat.for_each([&](int v, int t) { s.base.r.set(v, t); });

    const Game& g = view().game();
    std::vector<int> reset_levels;
    view().alive().for_each([&](int v) {
        int mv = s.base.r.at(v);
        if (mv >= pstar || same_parity(mv, pstar)) return;
        if (mv != g.priority(v)) {
            stats.resets++;
            reset_levels.push_back(mv);
            s.base.r.set(v, g.priority(v));
        }
    });
    s.base.p = pstar;
    refresh_subgame(s.base);
    s.rhat.clear();
    s.promos.clear();

    if (trace_) {
        std::sort(reset_levels.begin(), reset_levels.end());
        reset_levels.erase(std::unique(reset_levels.begin(), reset_levels.end()),
                           reset_levels.end());
        trace_->push_back({PromotionEvent::Kind::flush, from, pstar, std::move(reset_levels)});
    }
    return s;
}

bool DPSpace::precedes(const State& s1, const State& s2) const
{
    return PPSpace::precedes(s1.base, s2.base);
}

void DPSpace::validate_state(const State& s, int region_guard) const
{
    validate_pp_state(s.base.r, s.base.p, s.base.sub, region_guard);

    const Game& g = view().game();
    // Alignment (a): every delayed position sits in r strictly between the
    // current priority and its target, at the target's parity.
    s.rhat.for_each([&](int v, int t) {
        int mv = s.base.r.at(v);
        if (!(mv > s.base.p && mv < t && same_parity(mv, t)))
            throw std::logic_error("delayed record misaligned with the region function");
    });

    // Alignment (b): per target, the union of the level and its delayed
    // positions is a region in the subgame of that target.
    std::vector<int> targets;
    s.rhat.for_each([&](int, int t) { targets.push_back(t); });
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (int t : targets) {
        PositionSet alive_t(g.size());
        PositionSet U(g.size());
        view().alive().for_each([&](int v) {
            if (s.base.r.at(v) <= t) alive_t.set(v);
            if (s.base.r.at(v) == t) U.set(v);
        });
        s.rhat.for_each([&](int v, int tv) {
            if (tv == t) U.set(v);
        });
        if (!verify_region(SubgameView::over(g, std::move(alive_t)), U, parity_player(t),
                           region_guard))
            throw std::logic_error("delayed union at " + std::to_string(t)
                                   + " is not a region");
    }
}

bool DPSpace::check_compatibility(const State& s, const QuasiRegion& q, int region_guard) const
{
    SubgameView gs = SubgameView::over(view().game(), s.base.sub);
    if (!verify_region(gs, q.set, q.winner, region_guard)) return false;

    bool must_be_maximal = !q.closed_in_subgame;
    if (q.closed_in_subgame && escape(view(), opponent(q.winner), q.set).any()) {
        int target = bep(view(), q.set, q.winner, completion(s.base.r, s.rhat));
        if (locked(target, s)) must_be_maximal = true;
    }
    if (!must_be_maximal) return true;
    QuasiRegion expect = query_at(s.base.r, s.base.p, s.base.sub);
    return q.set == expect.set;
}

} // namespace pg
