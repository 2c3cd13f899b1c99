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

#include <compare>
#include <cstdint>

#include "pg/measures.hpp"

namespace pg {

// Measure tuple without the per-position caps; the codomain of play values.
class ExtMeasure {
  public:
    ExtMeasure() = default;
    static ExtMeasure zero(int odd_slots) {
        ExtMeasure m;
        m.entries_.assign(odd_slots, 0);
        return m;
    }
    static ExtMeasure top() {
        ExtMeasure m;
        m.top_ = true;
        return m;
    }

    bool is_top() const { return top_; }
    uint64_t entry(int slot) const { return entries_[slot]; }
    int slots() const { return static_cast<int>(entries_.size()); }
    void set_entry(int slot, uint64_t v) { entries_[slot] = v; }
    void bump(int slot) { ++entries_[slot]; }

    bool operator==(const ExtMeasure&) const = default;

    std::string render(int tuple_length) const;

  private:
    bool top_ = false;
    std::vector<uint64_t> entries_;
};

std::strong_ordering cmp_ext(const ExtMeasure& a, const ExtMeasure& b);

// Same value as a capped measure of the given domain.
bool ext_equals_measure(const MeasureDomain& dom, const ExtMeasure& e, const Measure& m);

// Ultimately periodic play: finite prefix followed by a repeated cycle.
struct LassoPlay {
    std::vector<int> prefix;
    std::vector<int> cycle;  // non-empty
};

// Top iff the cycle's minimal priority is odd; otherwise, per odd position i,
// the number of priority-i vertices in the longest play prefix whose minimal
// priority is exactly i.
ExtMeasure play_value(const ParityGame& g, const LassoPlay& play);

// Maximum play value over all plays from v consistent with sigma_even (Odd
// moves freely, Even is fixed). Exhaustive; guarded to |V| <= 8.
ExtMeasure max_value_solitaire(const ParityGame& g, const Strategy& sigma_even, int v);

// Minimum of max_value_solitaire over all positional Even strategies: the
// equilibrium value of v. Guarded to |V| <= 8.
ExtMeasure optimal_value_minmax(const ParityGame& g, int v);

}  // namespace pg
