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

#include <chrono>

#include "pg/attractors.hpp"
#include "pg/onepass.hpp"

namespace pg {

namespace {

struct OnePass {
    const ParityGame& g;
    const MeasureDomain dom;
    const LiftingPolicy& policy;
    const TraceSink& trace;
    MeasureTable rho;
    Strategy sigma_odd;
    uint64_t attractor_calls = 0;

    OnePass(const ParityGame& g, const LiftingPolicy& policy, const TraceSink& trace)
        : g(g), dom(g), policy(policy), trace(trace),
          rho(dom, g.node_count()), sigma_odd(g.node_count(), -1) {}

    void emit(TraceEvent::Kind kind, int depth, int vertex = -1, int target = -1, int k = -1,
              const VertexSet* set = nullptr) {
        if (!trace) return;
        TraceEvent ev;
        ev.kind = kind;
        ev.depth = depth;
        ev.vertex = vertex;
        ev.target = target;
        ev.k = k;
        if (set) ev.vertices = set->to_vector();
        trace(ev);
    }

    void assert_unique_top(const VertexSet& w, int v) {
        int tops = 0;
        w.for_each([&](int u) { tops += rho.at(u).is_top(); });
        check(tops == 1 && rho.at(v).is_top(), "exactly one top expected at suspension");
    }

    // The lift that reached top did so through saturated successors: some
    // (Odd owner) or all (Even owner) successors in the context carry a
    // measure saturated through position k, the top vertex itself counting
    // via its pre-top value when it is its own successor.
    void assert_saturated_witness(const VertexSet& w, int v, int k) {
        bool any = false, all = true;
        for (int u : g.successors(v)) {
            if (!w.test(u)) continue;
            const bool sat = u == v || (!rho.at(u).is_top() && saturated_through(dom, rho.at(u), k));
            any = any || sat;
            all = all && sat;
        }
        check(g.owner(v) == Player::Odd ? any : all,
              "top reached without a successor saturated through k");
    }

    // Closed-off vertices hold final top values; what remains must again be a
    // total subgame before recursing on it.
    void assert_total(const VertexSet& w) {
        w.for_each([&](int v) {
            bool has = false;
            for (int u : g.successors(v)) has = has || w.test(u);
            check(has, "context restriction produced a dead end");
        });
    }

    void set_top_with_attractor_strategy(const AttractorResult& ar, const VertexSet& core) {
        ar.set.for_each([&](int u) {
            if (core.test(u)) return;
            rho.assign(u, Measure::top());
            if (g.owner(u) == Player::Odd) sigma_odd[u] = ar.strategy[u];
        });
    }

    void spm_within(VertexSet w, int depth) {
        while (!w.empty()) {
            const int v = detail::run_lifting(g, dom, rho, w, policy, true);
            if (v < 0) {
                emit(TraceEvent::Kind::FixpointNoTop, depth);
                break;
            }
            const int k = g.priority(v);
            assert_unique_top(w, v);
            check(k % 2 == 1, "first vertex lifted to top must have odd priority");
            assert_saturated_witness(w, v, k);
            emit(TraceEvent::Kind::FirstTop, depth, v, -1, k);

            // Prefix-maximal successor within the context; ties to lowest id.
            // Only Odd-owned vertices store the choice.
            if (g.owner(v) == Player::Odd) {
                int u_max = -1;
                for (int u : g.successors(v)) {
                    if (!w.test(u)) continue;
                    if (u_max < 0) {
                        u_max = u;
                        continue;
                    }
                    const auto c = cmp_upto(dom, rho.at(u), rho.at(u_max), k);
                    if (c > 0 || (c == 0 && u < u_max)) u_max = u;
                }
                check(u_max >= 0, "top vertex lost its successors");
                sigma_odd[v] = u_max;
                emit(TraceEvent::Kind::OddStrategy, depth, v, u_max, k);
            }

            VertexSet single(g.node_count());
            single.set(v);
            AttractorResult res_attr = guarded_attractor(g, k, single, w);
            ++attractor_calls;
            set_top_with_attractor_strategy(res_attr, single);
            res_attr.set.for_each(
                [&](int u) { check(g.priority(u) >= k, "resolved set breaches the guard"); });
            emit(TraceEvent::Kind::Resolved, depth, v, -1, k, &res_attr.set);
            VertexSet dominion = res_attr.set;

            VertexSet low(g.node_count());
            w.for_each([&](int u) {
                if (g.priority(u) < k) low.set(u);
            });
            const VertexSet irrelevant = attractor(g, Player::Even, low, w).set;
            ++attractor_calls;
            emit(TraceEvent::Kind::Irrelevant, depth, -1, -1, k, &irrelevant);

            VertexSet remainder = w - res_attr.set - irrelevant;
            emit(TraceEvent::Kind::Remainder, depth, -1, -1, k, &remainder);
            assert_total(remainder);
            spm_within(remainder, depth + 1);

            remainder.for_each([&](int u) {
                if (rho.at(u).is_top()) {
                    check(g.priority(u) >= k, "dominion breaches the guard");
                    dominion.set(u);
                }
            });
            emit(TraceEvent::Kind::Dominion, depth, -1, -1, k, &dominion);

            AttractorResult attracted = attractor(g, Player::Odd, dominion, w);
            ++attractor_calls;
            set_top_with_attractor_strategy(attracted, dominion);
            emit(TraceEvent::Kind::Attracted, depth, -1, -1, k, &attracted.set);

            check(!attracted.set.empty(), "outer iteration must shrink the context");
            w -= attracted.set;
        }
    }
};

}  // namespace

SolveResult solve_onepass(const ParityGame& g, const LiftingPolicy& policy,
                          const TraceSink& trace) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = g.node_count();

    OnePass op(g, policy, trace);
    op.spm_within(g.all_vertices(), 0);
    detail::check_lift_bound(g, op.dom, op.rho.counters().lifts);

    SolveResult res;
    res.win_even = VertexSet(n);
    res.win_odd = VertexSet(n);
    for (int v = 0; v < n; ++v)
        (op.rho.at(v).is_top() ? res.win_odd : res.win_even).set(v);
    res.strategy_even = extract_even_strategy(g, op.dom, op.rho);
    res.strategy_odd = std::move(op.sigma_odd);
    res.has_even_strategy = true;
    res.has_odd_strategy = true;
    res.stats.lifts = op.rho.counters().lifts;
    res.stats.progs = op.rho.counters().progs;
    res.stats.attractors = op.attractor_calls;
    res.measures = std::move(op.rho);
    res.domain = op.dom;
    res.algorithm = "onepass";
    res.policy = policy.name();
    res.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace pg
