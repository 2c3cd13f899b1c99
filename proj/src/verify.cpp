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
#include <chrono>

#include "pg/attractors.hpp"
#include "pg/verify.hpp"

namespace pg {

std::string Violation::describe() const {
    std::string s;
    switch (kind) {
        case Kind::RegionNotClosed: s = "RegionNotClosed"; break;
        case Kind::StrategyLeavesRegion: s = "StrategyLeavesRegion"; break;
        case Kind::BadCycle: s = "BadCycle"; break;
        case Kind::Undefined: s = "Undefined"; break;
    }
    if (vertex >= 0) s += " at vertex " + std::to_string(vertex);
    if (!cycle.empty()) {
        s += ", cycle";
        for (int v : cycle) s += ' ' + std::to_string(v);
    }
    if (!detail.empty()) s += " (" + detail + ")";
    return s;
}

// ---------------------------------------------------------------------------
// Zielonka

namespace {

struct Zielonka {
    const ParityGame& g;
    Strategy sigma_even, sigma_odd;

    explicit Zielonka(const ParityGame& g)
        : g(g), sigma_even(g.node_count(), -1), sigma_odd(g.node_count(), -1) {}

    Strategy& sigma(Player p) { return p == Player::Even ? sigma_even : sigma_odd; }

    // Winning sets for (Even, Odd) within the total subgame induced by w.
    std::pair<VertexSet, VertexSet> solve(const VertexSet& w) {
        if (w.empty()) return {VertexSet(g.node_count()), VertexSet(g.node_count())};

        const int p = min_priority(g, w);
        const Player i = priority_winner(p);

        VertexSet base(g.node_count());
        w.for_each([&](int v) {
            if (g.priority(v) == p) base.set(v);
        });
        const AttractorResult ar = attractor(g, i, base, w);
        auto [we, wo] = solve(w - ar.set);
        VertexSet& opp_region = i == Player::Even ? wo : we;

        if (opp_region.empty()) {
            // i wins all of w: attractor strategy on the way to the base,
            // any context successor at the base itself.
            ar.set.for_each([&](int v) {
                if (g.owner(v) != i) return;
                if (base.test(v)) {
                    for (int u : g.successors(v)) {
                        if (w.test(u)) {
                            sigma(i)[v] = u;
                            break;
                        }
                    }
                } else {
                    sigma(i)[v] = ar.strategy[v];
                }
            });
            return i == Player::Even ? std::pair{w, VertexSet(g.node_count())}
                                     : std::pair{VertexSet(g.node_count()), w};
        }

        const AttractorResult br = attractor(g, opponent(i), opp_region, w);
        br.set.for_each([&](int v) {
            if (g.owner(v) == opponent(i) && !opp_region.test(v))
                sigma(opponent(i))[v] = br.strategy[v];
        });
        auto [we2, wo2] = solve(w - br.set);
        if (i == Player::Even) wo2 |= br.set;
        else we2 |= br.set;
        return {we2, wo2};
    }
};

}  // namespace

SolveResult solve_zielonka(const ParityGame& g) {
    const auto t0 = std::chrono::steady_clock::now();
    Zielonka z(g);
    auto [we, wo] = z.solve(g.all_vertices());

    SolveResult res;
    res.win_even = std::move(we);
    res.win_odd = std::move(wo);
    res.strategy_even = std::move(z.sigma_even);
    res.strategy_odd = std::move(z.sigma_odd);
    // drop assignments from abandoned branches
    for (int v = 0; v < g.node_count(); ++v) {
        if (!res.win_even.test(v)) res.strategy_even[v] = -1;
        if (!res.win_odd.test(v)) res.strategy_odd[v] = -1;
    }
    res.has_even_strategy = true;
    res.has_odd_strategy = true;
    res.algorithm = "zielonka";
    res.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

// ---------------------------------------------------------------------------
// Brute force

namespace {

// Choice vectors index into each vertex's successor list.
bool next_choice(std::vector<int>& choice, const ParityGame& g, const std::vector<int>& verts) {
    for (size_t i = 0; i < verts.size(); ++i) {
        if (++choice[i] < static_cast<int>(g.successors(verts[i]).size())) return true;
        choice[i] = 0;
    }
    return false;
}

}  // namespace

SolveResult solve_bruteforce(const ParityGame& g) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = g.node_count();
    if (n > 8) throw game_too_large("brute force is limited to 8 vertices");

    std::vector<int> even_verts, odd_verts;
    double pairs = 1.0;
    for (int v = 0; v < n; ++v) {
        (g.owner(v) == Player::Even ? even_verts : odd_verts).push_back(v);
        pairs *= static_cast<double>(g.successors(v).size());
    }
    if (pairs > 1e6) throw game_too_large("positional strategy space exceeds 10^6 pairs");

    std::vector<int> next(n);
    std::vector<int> even_choice(even_verts.size(), 0);
    VertexSet win_even(n);

    do {
        for (size_t i = 0; i < even_verts.size(); ++i)
            next[even_verts[i]] = g.successors(even_verts[i])[even_choice[i]];

        // vertices this Even strategy loses against some Odd strategy
        VertexSet beaten(n);
        std::vector<int> odd_choice(odd_verts.size(), 0);
        do {
            for (size_t i = 0; i < odd_verts.size(); ++i)
                next[odd_verts[i]] = g.successors(odd_verts[i])[odd_choice[i]];

            // functional graph: walk each start into its cycle
            for (int start = 0; start < n; ++start) {
                if (beaten.test(start)) continue;
                std::vector<int> visit_pos(n, -1);
                int v = start, steps = 0;
                while (visit_pos[v] < 0) {
                    visit_pos[v] = steps++;
                    v = next[v];
                }
                int min_pr = g.priority(v);
                for (int u = next[v]; u != v; u = next[u]) min_pr = std::min(min_pr, g.priority(u));
                if (min_pr % 2 == 1) beaten.set(start);
            }
        } while (next_choice(odd_choice, g, odd_verts));

        win_even |= g.all_vertices() - beaten;
    } while (next_choice(even_choice, g, even_verts));

    SolveResult res;
    res.win_even = win_even;
    res.win_odd = g.all_vertices() - win_even;
    res.strategy_even.assign(n, -1);
    res.strategy_odd.assign(n, -1);
    res.algorithm = "brute";
    res.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

// ---------------------------------------------------------------------------
// Certificate verification

namespace {

// Iterative Tarjan over the strategy-restricted graph limited to `allowed`.
struct SccFinder {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> index, lowlink, comp;
    std::vector<bool> on_stack;
    std::vector<int> stack;
    int counter = 0, comps = 0;

    explicit SccFinder(const std::vector<std::vector<int>>& adj)
        : adj(adj), index(adj.size(), -1), lowlink(adj.size(), 0), comp(adj.size(), -1),
          on_stack(adj.size(), false) {}

    void run(int root) {
        // explicit stack of (vertex, next-edge-index)
        std::vector<std::pair<int, size_t>> work{{root, 0}};
        index[root] = lowlink[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!work.empty()) {
            auto& [v, ei] = work.back();
            if (ei < adj[v].size()) {
                const int w = adj[v][ei++];
                if (index[w] < 0) {
                    index[w] = lowlink[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    work.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
            } else {
                if (lowlink[v] == index[v]) {
                    for (;;) {
                        const int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = comps;
                        if (w == v) break;
                    }
                    ++comps;
                }
                const int vv = v;
                work.pop_back();
                if (!work.empty())
                    lowlink[work.back().first] = std::min(lowlink[work.back().first], lowlink[vv]);
            }
        }
    }
};

std::vector<int> shortest_cycle_through(const std::vector<std::vector<int>>& adj,
                                        const std::vector<int>& comp, int start) {
    // BFS within the SCC from start back to start
    const int n = static_cast<int>(adj.size());
    std::vector<int> parent(n, -2);
    std::vector<int> queue{start};
    parent[start] = -1;
    for (size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (int w : adj[v]) {
            if (comp[w] != comp[start]) continue;
            if (w == start) {
                std::vector<int> cycle{start};
                for (int u = v; u != start; u = parent[u]) cycle.push_back(u);
                std::reverse(cycle.begin() + 1, cycle.end());
                return cycle;
            }
            if (parent[w] == -2) {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    return {};
}

}  // namespace

std::optional<Violation> verify_strategy(const ParityGame& g, Player player,
                                         const VertexSet& region, const Strategy& sigma) {
    const int n = g.node_count();

    std::optional<Violation> fail;
    region.for_each([&](int v) {
        if (fail) return;
        if (g.owner(v) == player) {
            const int s = v < static_cast<int>(sigma.size()) ? sigma[v] : -1;
            if (s < 0)
                fail = Violation{Violation::Kind::Undefined, v, {}, "no strategy entry"};
            else if (s >= n || !g.has_edge(v, s))
                fail = Violation{Violation::Kind::Undefined, v, {}, "strategy target is not a successor"};
            else if (!region.test(s))
                fail = Violation{Violation::Kind::StrategyLeavesRegion, v, {}, ""};
        } else {
            for (int w : g.successors(v)) {
                if (!region.test(w)) {
                    fail = Violation{Violation::Kind::RegionNotClosed, v, {},
                                     "opponent edge to " + std::to_string(w)};
                    break;
                }
            }
        }
    });
    if (fail) return fail;

    // restricted graph: player follows sigma, opponent moves freely in region
    std::vector<std::vector<int>> adj(n);
    region.for_each([&](int v) {
        if (g.owner(v) == player) {
            adj[v].push_back(sigma[v]);
        } else {
            for (int w : g.successors(v)) adj[v].push_back(w);
        }
    });

    // A cycle whose minimal priority p has the opponent's parity lies in the
    // priority>=p slice and meets a priority-p vertex there; scan p ascending
    // for a deterministic witness.
    const int bad_parity = player == Player::Even ? 1 : 0;
    for (int p = bad_parity; p <= g.max_priority(); p += 2) {
        if (g.priority_count(p) == 0) continue;
        std::vector<std::vector<int>> sliced(n);
        region.for_each([&](int v) {
            if (g.priority(v) < p) return;
            for (int w : adj[v])
                if (g.priority(w) >= p) sliced[v].push_back(w);
        });
        SccFinder scc(sliced);
        region.for_each([&](int v) {
            if (g.priority(v) >= p && scc.index[v] < 0) scc.run(v);
        });
        std::vector<int> size(scc.comps, 0);
        region.for_each([&](int v) {
            if (g.priority(v) >= p) ++size[scc.comp[v]];
        });

        std::optional<Violation> hit;
        region.for_each([&](int v) {
            if (hit || g.priority(v) != p) return;
            bool has_self = false;
            for (int w : sliced[v]) has_self = has_self || w == v;
            if (size[scc.comp[v]] > 1 || has_self) {
                hit = Violation{Violation::Kind::BadCycle, v,
                                shortest_cycle_through(sliced, scc.comp, v),
                                "cycle minimal priority " + std::to_string(p)};
            }
        });
        if (hit) return hit;
    }
    return std::nullopt;
}

std::vector<Violation> verify_partition(const ParityGame& g, const SolveResult& result) {
    std::vector<Violation> out;
    const int n = g.node_count();

    for (int v = 0; v < n; ++v) {
        const bool e = result.win_even.test(v), o = result.win_odd.test(v);
        if (e == o)
            out.push_back({Violation::Kind::Undefined, v, {},
                           e ? "vertex in both regions" : "vertex in neither region"});
    }
    if (!out.empty()) return out;

    // Region closure holds for any valid partition, strategy or not.
    for (Player p : {Player::Even, Player::Odd}) {
        const VertexSet& region = p == Player::Even ? result.win_even : result.win_odd;
        region.for_each([&](int v) {
            if (g.owner(v) == p) return;
            for (int w : g.successors(v))
                if (!region.test(w)) {
                    out.push_back({Violation::Kind::RegionNotClosed, v, {},
                                   "opponent edge to " + std::to_string(w)});
                    return;
                }
        });
    }

    if (result.has_even_strategy) {
        if (auto v = verify_strategy(g, Player::Even, result.win_even, result.strategy_even))
            out.push_back(*v);
    }
    if (result.has_odd_strategy) {
        if (auto v = verify_strategy(g, Player::Odd, result.win_odd, result.strategy_odd))
            out.push_back(*v);
    }
    return out;
}

}  // namespace pg
