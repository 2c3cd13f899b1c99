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

#include "pg/measures.hpp"

namespace pg {

// Order in which vertices are offered to the lift operator. Any fair policy
// reaches the same least fixpoint; the choice only affects the work done.
struct LiftingPolicy {
    enum class Kind { RoundRobin, InputOrder, SeededRandom, Worklist, PreferList };

    Kind kind = Kind::Worklist;
    uint64_t seed = 0;
    std::vector<int> prefer;  // PreferList: these ids go first, round robin

    static LiftingPolicy worklist() { return {}; }
    static LiftingPolicy round_robin() { return {Kind::RoundRobin, 0, {}}; }
    static LiftingPolicy input_order() { return {Kind::InputOrder, 0, {}}; }
    static LiftingPolicy seeded_random(uint64_t seed) { return {Kind::SeededRandom, seed, {}}; }
    static LiftingPolicy prefer_list(std::vector<int> ids) {
        return {Kind::PreferList, 0, std::move(ids)};
    }

    std::string name() const;
};

struct SolveStats {
    uint64_t lifts = 0;
    uint64_t progs = 0;
    uint64_t attractors = 0;
    uint64_t lifts_dual = 0;  // second pass of the two-pass solver
    uint64_t progs_dual = 0;
    double wall_ms = 0.0;
};

struct SolveResult {
    VertexSet win_even;
    VertexSet win_odd;
    Strategy strategy_even;
    Strategy strategy_odd;
    bool has_even_strategy = false;
    bool has_odd_strategy = false;
    std::optional<MeasureTable> measures;
    std::optional<MeasureDomain> domain;
    SolveStats stats;
    std::string algorithm;
    std::string policy;
};

// Lift-to-fixpoint solver: least measure table, Even's region and strategy.
SolveResult solve_spm(const ParityGame& g, const LiftingPolicy& policy = {});

// Min-measure successor per Even vertex with a non-top measure, ties to the
// lowest id.
Strategy extract_even_strategy(const ParityGame& g, const MeasureDomain& dom,
                               const MeasureTable& rho);

// Baseline that re-runs the lift solver on the dualized Odd region to obtain
// Odd's strategy.
SolveResult solve_two_pass(const ParityGame& g, const LiftingPolicy& policy = {});

namespace detail {

// Lifts within the context until fixpoint, or until a single lift yields top
// when stop_on_top is set; returns the vertex lifted to top, or -1.
int run_lifting(const ParityGame& g, const MeasureDomain& dom, MeasureTable& rho,
                const VertexSet& context, const LiftingPolicy& policy, bool stop_on_top);

// lifts <= |V| * (|tuple space| + 1); violated only by solver bugs.
void check_lift_bound(const ParityGame& g, const MeasureDomain& dom, uint64_t lifts);

}  // namespace detail

}  // namespace pg
