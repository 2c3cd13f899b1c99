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

#include <functional>

#include "pg/spm.hpp"

namespace pg {

// Progress report from the one-pass solver, one event per step; useful for
// debugging and for replaying the worked examples.
struct TraceEvent {
    enum class Kind {
        FirstTop,       // vertex lifted to top, k = its priority
        OddStrategy,    // strategy_odd[vertex] = target
        Resolved,       // guarded attractor of the top vertex
        Irrelevant,     // Even-attracted low-priority part of the context
        Remainder,      // recursion context
        Dominion,       // resolved set after the recursive call
        Attracted,      // Odd attractor of the dominion
        FixpointNoTop,  // lifting reached a fixpoint without a top
    };
    Kind kind;
    int depth = 0;
    int vertex = -1;
    int target = -1;
    int k = -1;
    std::vector<int> vertices;
};

using TraceSink = std::function<void(const TraceEvent&)>;

// Modified lift solver that derives winning strategies for both players in a
// single pass: lifting suspends at the first vertex reaching top, that
// vertex's strategy is fixed from a prefix-maximal successor, its guarded
// attractor is resolved, and the search recurses on the remainder of the
// context until the Odd dominion is complete.
SolveResult solve_onepass(const ParityGame& g, const LiftingPolicy& policy = {},
                          const TraceSink& trace = nullptr);

}  // namespace pg
