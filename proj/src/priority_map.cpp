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

#include "pg/priority_map.hpp"

#include "pg/game.hpp"

namespace pg {

PriorityMap restricted(const PriorityMap& r, Cmp rel, int p)
{
    PriorityMap out(r.capacity());
    r.for_each([&](int v, int q) {
        bool keep = false;
        switch (rel) {
            case Cmp::ge: keep = q >= p; break;
            case Cmp::gt: keep = q > p; break;
            case Cmp::lt: keep = q < p; break;
            case Cmp::same_parity: keep = same_parity(q, p); break;
        }
        if (keep) out.set(v, q);
    });
    return out;
}

PriorityMap completion(PriorityMap f, const PriorityMap& g)
{
    g.for_each([&](int v, int q) { f.set(v, q); });
    return f;
}

} // namespace pg
