/*
 * Copyright 2026 The pgsolve authors
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

#include "pg/attractors.hpp"

namespace pg {

// Backward worklist over pred with per-vertex outdegree counters restricted
// to the context. Queue order is entry order, so a joining vertex of the
// attracting player records the earliest-entered successor.
static AttractorResult attract(const ParityGame& g, Player player, const VertexSet& base,
                               const VertexSet& context, const VertexSet& candidates) {
    const int n = g.node_count();
    AttractorResult res{base, Strategy(n, -1)};

    std::vector<int> queue = base.to_vector();
    std::vector<int> out_in_context(n, -1);

    for (size_t head = 0; head < queue.size(); ++head) {
        const int a = queue[head];
        for (int w : g.predecessors(a)) {
            if (!candidates.test(w) || res.set.test(w)) continue;
            if (g.owner(w) == player) {
                res.set.set(w);
                res.strategy[w] = a;
                queue.push_back(w);
            } else {
                if (out_in_context[w] < 0) {
                    int c = 0;
                    for (int u : g.successors(w))
                        if (context.test(u)) ++c;
                    out_in_context[w] = c;
                }
                // one decrement per edge (w, a); duplicate edges decrement again
                if (--out_in_context[w] == 0) {
                    res.set.set(w);
                    queue.push_back(w);
                }
            }
        }
    }
    return res;
}

AttractorResult attractor(const ParityGame& g, Player player, const VertexSet& base,
                          const VertexSet& context) {
    if (!context.contains(base)) throw base_not_in_context();
    return attract(g, player, base, context, context);
}

AttractorResult guarded_attractor(const ParityGame& g, int k, const VertexSet& base,
                                  const VertexSet& context) {
    bool ok = context.contains(base);
    base.for_each([&](int v) { ok = ok && g.priority(v) >= k; });
    if (!ok) throw base_violates_guard();

    VertexSet candidates(g.node_count());
    context.for_each([&](int v) {
        if (g.priority(v) >= k) candidates.set(v);
    });
    return attract(g, Player::Odd, base, context, candidates);
}

}  // namespace pg
