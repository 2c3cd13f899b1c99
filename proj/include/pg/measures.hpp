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
#include <string>
#include <vector>

#include "pg/game.hpp"

namespace pg {

// Tuple domain for the even-biased measures: d-tuples that are 0 on even
// positions and capped by the per-priority vertex counts on odd positions,
// plus a distinguished top element. Only the odd entries are stored; "slot" j
// holds the entry for tuple position 2j+1.
class MeasureDomain {
  public:
    explicit MeasureDomain(const ParityGame& g);
    MeasureDomain(int tuple_length, std::vector<int> odd_caps);

    int tuple_length() const { return d_; }
    int odd_slots() const { return static_cast<int>(caps_.size()); }
    int cap(int slot) const { return caps_[slot]; }

    // Number of distinct non-top tuples, saturating at uint64 max.
    uint64_t tuple_space_size() const;

    static constexpr int slot_of(int position) { return position / 2; }
    // Number of odd positions <= position.
    static constexpr int slots_through(int position) { return (position + 1) / 2; }

  private:
    int d_;
    std::vector<int> caps_;
};

class Measure {
  public:
    Measure() = default;

    static Measure zero(const MeasureDomain& dom) {
        Measure m;
        m.entries_.assign(dom.odd_slots(), 0);
        return m;
    }
    static Measure top() {
        Measure m;
        m.top_ = true;
        return m;
    }

    bool is_top() const { return top_; }
    int entry(int slot) const { return entries_[slot]; }
    int slots() const { return static_cast<int>(entries_.size()); }
    void set_entry(int slot, int value) { entries_[slot] = value; }

    bool operator==(const Measure&) const = default;

    // "T", or "(a0,a1,...,a_{d-1})" with even positions printed as 0.
    std::string render(const MeasureDomain& dom) const;

  private:
    bool top_ = false;
    std::vector<int> entries_;
};

// Total lexicographic order with top as the unique maximum.
std::strong_ordering cmp_lex(const MeasureDomain& dom, const Measure& a, const Measure& b);

// Prefix comparison through tuple position i; top compares as maximum here too.
std::strong_ordering cmp_upto(const MeasureDomain& dom, const Measure& a, const Measure& b,
                              int position);

// Entry at odd position i equals its cap.
bool is_saturated(const MeasureDomain& dom, const Measure& m, int position);

// All odd positions <= k are at their caps (m not top).
bool saturated_through(const MeasureDomain& dom, const Measure& m, int k);

// Vertex-indexed measure assignment plus lifting statistics.
class MeasureTable {
  public:
    MeasureTable() = default;
    MeasureTable(const MeasureDomain& dom, int n) : rho_(n, Measure::zero(dom)) {}

    const Measure& at(int v) const { return rho_[v]; }
    void assign(int v, Measure m) { rho_[v] = std::move(m); }
    int size() const { return static_cast<int>(rho_.size()); }

    struct Counters {
        uint64_t lifts = 0;  // lift applications that changed the table
        uint64_t progs = 0;
    };
    Counters& counters() { return counters_; }
    const Counters& counters() const { return counters_; }

  private:
    std::vector<Measure> rho_;
    Counters counters_;
};

// Least m with m >=_{P(v)} rho(w) (even P(v)), or m >_{P(v)} rho(w) or both
// top (odd P(v)).
Measure prog(const MeasureDomain& dom, MeasureTable& rho, int v, int w, const ParityGame& g);

// max(rho(v), min/max of prog over the successors of v) per the owner of v.
Measure lift(const MeasureDomain& dom, MeasureTable& rho, int v, const ParityGame& g);

// Same, with successors restricted to the context (used on induced subgames).
Measure lift_within(const MeasureDomain& dom, MeasureTable& rho, int v, const ParityGame& g,
                    const VertexSet& context);

}  // namespace pg
