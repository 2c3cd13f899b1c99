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
#include <deque>
#include <random>

#include "pg/spm.hpp"

namespace pg {

std::string LiftingPolicy::name() const {
    switch (kind) {
        case Kind::RoundRobin: return "roundrobin";
        case Kind::InputOrder: return "input";
        case Kind::SeededRandom: return "random:" + std::to_string(seed);
        case Kind::Worklist: return "worklist";
        case Kind::PreferList: {
            std::string s = "prefer:";
            for (size_t i = 0; i < prefer.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(prefer[i]);
            }
            return s;
        }
    }
    return "?";
}

namespace detail {

namespace {

// Applies one lift; reports whether the table changed and whether the new
// value is top. Counts only changing lifts.
struct Lifter {
    const ParityGame& g;
    const MeasureDomain& dom;
    MeasureTable& rho;
    const VertexSet& context;

    bool attempt(int v, bool& now_top) {
        Measure m = lift_within(dom, rho, v, g, context);
        if (m == rho.at(v)) return false;
        now_top = m.is_top();
        rho.assign(v, std::move(m));
        ++rho.counters().lifts;
        return true;
    }
};

int run_worklist(Lifter& lf, const std::vector<int>& order, bool stop_on_top) {
    const int n = lf.g.node_count();
    std::deque<int> queue(order.begin(), order.end());
    std::vector<bool> queued(n, false);
    for (int v : order) queued[v] = true;

    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        queued[v] = false;
        bool now_top = false;
        if (!lf.attempt(v, now_top)) continue;
        if (now_top && stop_on_top) return v;
        for (int w : lf.g.predecessors(v)) {
            if (lf.context.test(w) && !queued[w]) {
                queued[w] = true;
                queue.push_back(w);
            }
        }
    }
    return -1;
}

int run_sweeps(Lifter& lf, std::vector<int> order, bool stop_on_top, uint64_t shuffle_seed,
               bool shuffled) {
    std::mt19937_64 rng(shuffle_seed);
    for (;;) {
        if (shuffled) {
            for (size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[rng() % i]);
        }
        bool changed = false;
        for (int v : order) {
            bool now_top = false;
            if (lf.attempt(v, now_top)) {
                changed = true;
                if (now_top && stop_on_top) return v;
            }
        }
        if (!changed) return -1;
    }
}

int run_round_robin(Lifter& lf, const std::vector<int>& order, bool stop_on_top) {
    const size_t m = order.size();
    size_t idx = 0, fails = 0;
    while (fails < m) {
        const int v = order[idx];
        idx = (idx + 1) % m;
        bool now_top = false;
        if (lf.attempt(v, now_top)) {
            fails = 0;
            if (now_top && stop_on_top) return v;
        } else {
            ++fails;
        }
    }
    return -1;
}

// Strict priority: cycle the preferred vertices until none lifts, then lift
// the first liftable other vertex, then return to the preferred set.
int run_prefer(Lifter& lf, const std::vector<int>& prefer, const VertexSet& context,
               bool stop_on_top) {
    std::vector<int> pref;
    VertexSet seen(lf.g.node_count());
    for (int v : prefer) {
        if (context.test(v) && !seen.test(v)) {
            seen.set(v);
            pref.push_back(v);
        }
    }
    std::vector<int> rest;
    context.for_each([&](int v) {
        if (!seen.test(v)) rest.push_back(v);
    });

    for (;;) {
        if (!pref.empty()) {
            size_t idx = 0, fails = 0;
            while (fails < pref.size()) {
                const int v = pref[idx];
                idx = (idx + 1) % pref.size();
                bool now_top = false;
                if (lf.attempt(v, now_top)) {
                    fails = 0;
                    if (now_top && stop_on_top) return v;
                } else {
                    ++fails;
                }
            }
        }
        bool lifted = false;
        for (int v : rest) {
            bool now_top = false;
            if (lf.attempt(v, now_top)) {
                if (now_top && stop_on_top) return v;
                lifted = true;
                break;
            }
        }
        if (!lifted) return -1;
    }
}

}  // namespace

int run_lifting(const ParityGame& g, const MeasureDomain& dom, MeasureTable& rho,
                const VertexSet& context, const LiftingPolicy& policy, bool stop_on_top) {
    if (context.empty()) return -1;
    Lifter lf{g, dom, rho, context};
    const std::vector<int> order = context.to_vector();

    switch (policy.kind) {
        case LiftingPolicy::Kind::Worklist:
            return run_worklist(lf, order, stop_on_top);
        case LiftingPolicy::Kind::InputOrder:
            return run_sweeps(lf, order, stop_on_top, 0, false);
        case LiftingPolicy::Kind::SeededRandom:
            return run_sweeps(lf, order, stop_on_top, policy.seed, true);
        case LiftingPolicy::Kind::RoundRobin:
            return run_round_robin(lf, order, stop_on_top);
        case LiftingPolicy::Kind::PreferList:
            return run_prefer(lf, policy.prefer, context, stop_on_top);
    }
    return -1;
}

void check_lift_bound(const ParityGame& g, const MeasureDomain& dom, uint64_t lifts) {
    const uint64_t space = dom.tuple_space_size();
    if (space == UINT64_MAX) return;  // bound saturated, vacuous
    const uint64_t per_vertex = space + 1;
    const uint64_t n = static_cast<uint64_t>(g.node_count());
    if (n != 0 && per_vertex > UINT64_MAX / n) return;
    check(lifts <= n * per_vertex, "lift count exceeds |V| * |measure space|");
}

}  // namespace detail

}  // namespace pg
