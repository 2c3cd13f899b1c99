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

#include <optional>
#include <string>
#include <vector>

#include "pg/spm.hpp"

namespace pg {

struct Violation {
    enum class Kind { RegionNotClosed, StrategyLeavesRegion, BadCycle, Undefined };
    Kind kind;
    int vertex = -1;            // offending vertex (all kinds)
    std::vector<int> cycle;     // witness cycle for BadCycle
    std::string detail;

    std::string describe() const;
};

// Recursive attractor-decomposition solver; positional strategies for both
// players. Primary cross-check oracle.
SolveResult solve_zielonka(const ParityGame& g);

// Enumerates positional strategy pairs; each pair yields a deterministic
// lasso judged by the parity of its cycle's minimal priority. Guarded to tiny
// games (|V| <= 8, strategy-pair space <= 10^6).
SolveResult solve_bruteforce(const ParityGame& g);

// ok (nullopt) iff sigma maps the player's region vertices into the region,
// every opponent edge from the region stays inside, and every cycle of the
// restricted graph has the player's parity (checked per-priority via SCC
// decomposition, which yields concrete witness cycles).
std::optional<Violation> verify_strategy(const ParityGame& g, Player player,
                                         const VertexSet& region, const Strategy& sigma);

// Partition well-formedness, region closure, and per-player strategy checks
// (a player's strategy is checked when the result claims to provide one).
std::vector<Violation> verify_partition(const ParityGame& g, const SolveResult& result);

}  // namespace pg
