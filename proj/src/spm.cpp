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

#include "pg/spm.hpp"

namespace pg {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

Strategy extract_even_strategy(const ParityGame& g, const MeasureDomain& dom,
                               const MeasureTable& rho) {
    Strategy sigma(g.node_count(), -1);
    for (int v = 0; v < g.node_count(); ++v) {
        if (g.owner(v) != Player::Even || rho.at(v).is_top()) continue;
        int best = -1;
        for (int w : g.successors(v)) {
            if (best < 0) {
                best = w;
                continue;
            }
            const auto c = cmp_lex(dom, rho.at(w), rho.at(best));
            if (c < 0 || (c == 0 && w < best)) best = w;
        }
        sigma[v] = best;
    }
    return sigma;
}

SolveResult solve_spm(const ParityGame& g, const LiftingPolicy& policy) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = g.node_count();

    MeasureDomain dom(g);
    MeasureTable rho(dom, n);
    detail::run_lifting(g, dom, rho, g.all_vertices(), policy, false);
    detail::check_lift_bound(g, dom, rho.counters().lifts);

    SolveResult res;
    res.win_even = VertexSet(n);
    res.win_odd = VertexSet(n);
    for (int v = 0; v < n; ++v)
        (rho.at(v).is_top() ? res.win_odd : res.win_even).set(v);
    res.strategy_even = extract_even_strategy(g, dom, rho);
    res.strategy_odd.assign(n, -1);
    res.has_even_strategy = true;
    res.stats.lifts = rho.counters().lifts;
    res.stats.progs = rho.counters().progs;
    res.measures = std::move(rho);
    res.domain = dom;
    res.algorithm = "spm";
    res.policy = policy.name();
    res.stats.wall_ms = ms_since(t0);
    return res;
}

SolveResult solve_two_pass(const ParityGame& g, const LiftingPolicy& policy) {
    const auto t0 = std::chrono::steady_clock::now();

    SolveResult res = solve_spm(g, policy);
    res.algorithm = "twopass";

    if (!res.win_odd.empty()) {
        // The Odd region induces a total subgame; its dual is won everywhere
        // by the dual Even player, whose extracted strategy maps back to Odd.
        SubGame sub = subgame(g, res.win_odd);
        ParityGame dual = dualize(sub.game);
        SolveResult dual_res = solve_spm(dual, policy);
        check(dual_res.win_odd.empty(), "dual of an Odd region must be fully Even-won");

        for (int v = 0; v < dual.node_count(); ++v) {
            const int choice = dual_res.strategy_even[v];
            if (choice >= 0) res.strategy_odd[sub.to_parent[v]] = sub.to_parent[choice];
        }
        res.stats.lifts_dual = dual_res.stats.lifts;
        res.stats.progs_dual = dual_res.stats.progs;
        res.stats.lifts += dual_res.stats.lifts;
        res.stats.progs += dual_res.stats.progs;
    }
    res.has_odd_strategy = true;
    res.stats.wall_ms = ms_since(t0);
    return res;
}

}  // namespace pg
