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

// 6-vertex example: Even wins {v1,v2,v3}, Odd wins {v4,v5,v6}.
ParityGame gen_figure1();

// Chain of Odd-owned vertices with priorities 0, 2, 1, 3, 4, ..., 2N, a back
// edge from the last vertex to the priority-2 vertex and a self-loop on the
// last vertex. Odd wins everywhere; solving the dual is exponentially more
// expensive than solving the game itself.
ParityGame gen_figure2(int n);

// 4-vertex example where the max-measure successor of the priority-2 vertex
// is a losing choice.
ParityGame gen_figure4();

// 9-vertex example with two overlapping subgames; Odd wins everywhere.
ParityGame gen_figure6();

// Deterministic under seed: owners uniform, priorities uniform in 0..d-1,
// outdegree uniform in [min_deg, max_deg], successors without replacement.
ParityGame gen_random(int n, int d, int min_deg, int max_deg, uint64_t seed);

}  // namespace pg
