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

#include <algorithm>
#include <set>

#include "pg/playvalue.hpp"

namespace pg {

std::string ExtMeasure::render(int tuple_length) const {
    if (top_) return "T";
    std::string out = "(";
    for (int i = 0; i < tuple_length; ++i) {
        if (i) out += ',';
        out += (i % 2 == 0) ? "0" : std::to_string(entries_[i / 2]);
    }
    out += ')';
    return out;
}

std::strong_ordering cmp_ext(const ExtMeasure& a, const ExtMeasure& b) {
    if (a.is_top() || b.is_top()) {
        if (a.is_top() && b.is_top()) return std::strong_ordering::equal;
        return a.is_top() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    check(a.slots() == b.slots(), "extended measures of different widths");
    for (int j = 0; j < a.slots(); ++j)
        if (a.entry(j) != b.entry(j))
            return a.entry(j) < b.entry(j) ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool ext_equals_measure(const MeasureDomain& dom, const ExtMeasure& e, const Measure& m) {
    if (e.is_top() != m.is_top()) return false;
    if (e.is_top()) return true;
    if (e.slots() != dom.odd_slots()) return false;
    for (int j = 0; j < dom.odd_slots(); ++j)
        if (e.entry(j) != static_cast<uint64_t>(m.entry(j))) return false;
    return true;
}

ExtMeasure play_value(const ParityGame& g, const LassoPlay& play) {
    const int n = g.node_count();
    if (play.cycle.empty()) throw invalid_lasso("empty cycle");
    for (int v : play.prefix)
        if (v < 0 || v >= n) throw invalid_lasso("prefix vertex out of range");
    for (int v : play.cycle)
        if (v < 0 || v >= n) throw invalid_lasso("cycle vertex out of range");

    auto require_edge = [&](int v, int w) {
        if (!g.has_edge(v, w))
            throw invalid_lasso("missing edge " + std::to_string(v) + " -> " + std::to_string(w));
    };
    for (size_t i = 0; i + 1 < play.prefix.size(); ++i)
        require_edge(play.prefix[i], play.prefix[i + 1]);
    if (!play.prefix.empty()) require_edge(play.prefix.back(), play.cycle.front());
    for (size_t i = 0; i + 1 < play.cycle.size(); ++i)
        require_edge(play.cycle[i], play.cycle[i + 1]);
    require_edge(play.cycle.back(), play.cycle.front());

    int cycle_min = g.priority(play.cycle.front());
    for (int v : play.cycle) cycle_min = std::min(cycle_min, g.priority(v));
    if (cycle_min % 2 == 1) return ExtMeasure::top();

    // One cycle copy suffices: the first priority below i, if any, shows up
    // within it, and a top-free cycle that avoids priorities below i cannot
    // contain i itself.
    std::vector<int> seq(play.prefix);
    seq.insert(seq.end(), play.cycle.begin(), play.cycle.end());

    const int slots = g.tuple_length() / 2;
    ExtMeasure value = ExtMeasure::zero(slots);
    for (int j = 0; j < slots; ++j) {
        const int i = 2 * j + 1;
        uint64_t count = 0;
        for (int v : seq) {
            if (g.priority(v) < i) break;
            if (g.priority(v) == i) ++count;
        }
        value.set_entry(j, count);
    }
    return value;
}

namespace {

struct Restricted {
    const ParityGame& g;
    const Strategy& sigma;

    std::vector<int> out(int v) const {
        if (g.owner(v) == Player::Even) {
            const int s = v < static_cast<int>(sigma.size()) ? sigma[v] : -1;
            if (s < 0 || !g.has_edge(v, s))
                throw error("even strategy undefined or invalid at reachable vertex " +
                            std::to_string(v));
            return {s};
        }
        return {g.successors(v).begin(), g.successors(v).end()};
    }
};

// Is a cycle with odd minimal priority reachable from v in the restricted
// graph? Checked per odd priority p on the priority>=p slice.
bool odd_cycle_reachable(const Restricted& r, int start) {
    const int n = r.g.node_count();
    std::vector<bool> reach(n, false);
    std::vector<int> queue{start};
    reach[start] = true;
    for (size_t h = 0; h < queue.size(); ++h)
        for (int w : r.out(queue[h]))
            if (!reach[w]) {
                reach[w] = true;
                queue.push_back(w);
            }

    for (int p = 1; p <= r.g.max_priority(); p += 2) {
        // Walk the slice from each reachable priority>=p vertex; a cycle in
        // the slice through a priority-p vertex means Odd can realize it.
        // Tiny graphs: simple DFS cycle detection per start suffices.
        for (int v = 0; v < n; ++v) {
            if (!reach[v] || r.g.priority(v) != p) continue;
            // BFS within the slice from v back to v
            std::vector<bool> seen(n, false);
            std::vector<int> q2{v};
            seen[v] = true;
            bool closed = false;
            for (size_t h = 0; h < q2.size() && !closed; ++h) {
                for (int w : r.out(q2[h])) {
                    if (r.g.priority(w) < p) continue;
                    if (w == v) {
                        closed = true;
                        break;
                    }
                    if (!seen[w]) {
                        seen[w] = true;
                        q2.push_back(w);
                    }
                }
            }
            if (closed) return true;
        }
    }
    return false;
}

// Search state: current vertex, which odd positions are already cut by a
// smaller priority, and the per-position counts collected so far. Once top
// plays are excluded the counts are bounded by the priority multiplicities,
// so the state space is finite and every achievable play value is the count
// vector of some reachable state.
struct ValueSearch {
    const Restricted& r;
    int slots;
    std::set<std::vector<uint32_t>> seen;  // [vertex, cut bits..., counts...]
    ExtMeasure best;

    ValueSearch(const Restricted& r, int slots) : r(r), slots(slots) {
        best = ExtMeasure::zero(slots);
    }

    void explore(int start) {
        std::vector<uint32_t> state(1 + 2 * slots, 0);
        state[0] = static_cast<uint32_t>(start);
        account(start, state);
        walk(state);
    }

    void account(int v, std::vector<uint32_t>& state) {
        const int p = r.g.priority(v);
        for (int j = 0; j < slots; ++j) {
            const int i = 2 * j + 1;
            if (p < i) state[1 + j] = 1;
            else if (p == i && !state[1 + j]) ++state[1 + slots + j];
        }
    }

    void walk(const std::vector<uint32_t>& state) {
        if (!seen.insert(state).second) return;

        ExtMeasure m = ExtMeasure::zero(slots);
        for (int j = 0; j < slots; ++j) m.set_entry(j, state[1 + slots + j]);
        if (cmp_ext(m, best) > 0) best = m;

        for (int w : r.out(static_cast<int>(state[0]))) {
            std::vector<uint32_t> next = state;
            next[0] = static_cast<uint32_t>(w);
            account(w, next);
            walk(next);
        }
    }
};

}  // namespace

ExtMeasure max_value_solitaire(const ParityGame& g, const Strategy& sigma_even, int v) {
    if (g.node_count() > 8) throw game_too_large("play-value search is limited to 8 vertices");
    check(v >= 0 && v < g.node_count(), "start vertex out of range");

    Restricted r{g, sigma_even};
    if (odd_cycle_reachable(r, v)) return ExtMeasure::top();

    ValueSearch search(r, g.tuple_length() / 2);
    search.explore(v);
    return search.best;
}

ExtMeasure optimal_value_minmax(const ParityGame& g, int v) {
    if (g.node_count() > 8) throw game_too_large("play-value search is limited to 8 vertices");

    std::vector<int> even_verts;
    for (int u = 0; u < g.node_count(); ++u)
        if (g.owner(u) == Player::Even) even_verts.push_back(u);

    Strategy sigma(g.node_count(), -1);
    std::vector<int> choice(even_verts.size(), 0);
    bool first = true;
    ExtMeasure best;
    for (;;) {
        for (size_t i = 0; i < even_verts.size(); ++i)
            sigma[even_verts[i]] = g.successors(even_verts[i])[choice[i]];
        ExtMeasure m = max_value_solitaire(g, sigma, v);
        if (first || cmp_ext(m, best) < 0) {
            best = std::move(m);
            first = false;
        }

        size_t i = 0;
        for (; i < even_verts.size(); ++i) {
            if (++choice[i] < static_cast<int>(g.successors(even_verts[i]).size())) break;
            choice[i] = 0;
        }
        if (i == even_verts.size() && !even_verts.empty()) break;
        if (even_verts.empty()) break;
    }
    return best;
}

}  // namespace pg
