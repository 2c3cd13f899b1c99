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

#include "pg/measures.hpp"

namespace pg {

MeasureDomain::MeasureDomain(const ParityGame& g) : d_(g.tuple_length()) {
    caps_.resize(d_ / 2);
    for (int j = 0; j < static_cast<int>(caps_.size()); ++j)
        caps_[j] = g.priority_count(2 * j + 1);
}

MeasureDomain::MeasureDomain(int tuple_length, std::vector<int> odd_caps)
    : d_(tuple_length), caps_(std::move(odd_caps)) {
    check(static_cast<int>(caps_.size()) == d_ / 2, "domain caps must cover the odd positions");
}

uint64_t MeasureDomain::tuple_space_size() const {
    uint64_t total = 1;
    for (int c : caps_) {
        const uint64_t f = static_cast<uint64_t>(c) + 1;
        if (total > UINT64_MAX / f) return UINT64_MAX;
        total *= f;
    }
    return total;
}

std::string Measure::render(const MeasureDomain& dom) const {
    if (top_) return "T";
    std::string out = "(";
    for (int i = 0; i < dom.tuple_length(); ++i) {
        if (i) out += ',';
        out += (i % 2 == 0) ? "0" : std::to_string(entries_[MeasureDomain::slot_of(i)]);
    }
    out += ')';
    return out;
}

static void validate(const MeasureDomain& dom, const Measure& m) {
    if (!m.is_top() && m.slots() != dom.odd_slots()) throw domain_mismatch();
}

std::strong_ordering cmp_lex(const MeasureDomain& dom, const Measure& a, const Measure& b) {
    validate(dom, a);
    validate(dom, b);
    if (a.is_top() || b.is_top()) {
        if (a.is_top() && b.is_top()) return std::strong_ordering::equal;
        return a.is_top() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    for (int j = 0; j < dom.odd_slots(); ++j) {
        if (a.entry(j) != b.entry(j))
            return a.entry(j) < b.entry(j) ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering cmp_upto(const MeasureDomain& dom, const Measure& a, const Measure& b,
                              int position) {
    if (position < 0 || position >= dom.tuple_length()) throw position_out_of_range(position);
    validate(dom, a);
    validate(dom, b);
    if (a.is_top() || b.is_top()) {
        if (a.is_top() && b.is_top()) return std::strong_ordering::equal;
        return a.is_top() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    const int slots = MeasureDomain::slots_through(position);
    for (int j = 0; j < slots; ++j) {
        if (a.entry(j) != b.entry(j))
            return a.entry(j) < b.entry(j) ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

bool is_saturated(const MeasureDomain& dom, const Measure& m, int position) {
    if (position < 0 || position >= dom.tuple_length()) throw position_out_of_range(position);
    if (position % 2 == 0) throw even_position(position);
    if (m.is_top()) throw top_measure();
    validate(dom, m);
    const int j = MeasureDomain::slot_of(position);
    return m.entry(j) == dom.cap(j);
}

bool saturated_through(const MeasureDomain& dom, const Measure& m, int k) {
    if (m.is_top()) throw top_measure();
    validate(dom, m);
    for (int j = 0; j < MeasureDomain::slots_through(k); ++j)
        if (m.entry(j) != dom.cap(j)) return false;
    return true;
}

Measure prog(const MeasureDomain& dom, MeasureTable& rho, int v, int w, const ParityGame& g) {
    if (!g.has_edge(v, w)) throw not_a_successor(v, w);
    ++rho.counters().progs;

    const Measure& mw = rho.at(w);
    validate(dom, mw);
    if (mw.is_top()) return Measure::top();

    const int p = g.priority(v);
    const int keep = MeasureDomain::slots_through(p);

    Measure m = Measure::zero(dom);
    for (int j = 0; j < keep; ++j) m.set_entry(j, mw.entry(j));
    if (p % 2 == 0) return m;  // rho(w) truncated beyond position p

    // Least strict increase of the prefix through p: increment at position p,
    // carrying towards the more significant odd positions.
    for (int j = MeasureDomain::slot_of(p); j >= 0; --j) {
        if (m.entry(j) < dom.cap(j)) {
            m.set_entry(j, m.entry(j) + 1);
            return m;
        }
        m.set_entry(j, 0);
    }
    return Measure::top();  // carry escaped position 1
}

static Measure lift_impl(const MeasureDomain& dom, MeasureTable& rho, int v, const ParityGame& g,
                         const VertexSet* context) {
    const bool minimize = g.owner(v) == Player::Even;
    Measure best;
    bool have = false;
    for (int w : g.successors(v)) {
        if (context && !context->test(w)) continue;
        Measure m = prog(dom, rho, v, w, g);
        if (!have) {
            best = std::move(m);
            have = true;
            continue;
        }
        const auto c = cmp_lex(dom, m, best);
        if (minimize ? c < 0 : c > 0) best = std::move(m);
    }
    check(have, "lift: vertex has no successor in the context");
    return cmp_lex(dom, best, rho.at(v)) > 0 ? best : rho.at(v);
}

Measure lift(const MeasureDomain& dom, MeasureTable& rho, int v, const ParityGame& g) {
    return lift_impl(dom, rho, v, g, nullptr);
}

Measure lift_within(const MeasureDomain& dom, MeasureTable& rho, int v, const ParityGame& g,
                    const VertexSet& context) {
    return lift_impl(dom, rho, v, g, &context);
}

}  // namespace pg
