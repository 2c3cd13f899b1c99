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

#pragma once

#include "pg/game.hpp"

namespace pg {

struct AttractorResult {
    VertexSet set;
    // Defined exactly on the attracting player's vertices of set \ base that
    // joined via an edge into the growing set; points at the successor that
    // entered the set earliest (lowest id among the base).
    Strategy strategy;
};

// Least A with base <= A <= context: a context vertex of the player joins
// when some successor within the context is in A, a context vertex of the
// opponent joins when all of its successors within the context (at least
// one) are in A. Runs in time linear in the edges of the context.
AttractorResult attractor(const ParityGame& g, Player player, const VertexSet& base,
                          const VertexSet& context);

// Odd's attractor restricted to context vertices of priority >= k. Odd
// vertices join on one successor in A; Even vertices join when all their
// successors within the context lie in A.
AttractorResult guarded_attractor(const ParityGame& g, int k, const VertexSet& base,
                                  const VertexSet& context);

}  // namespace pg
