// Test-side oracles: independent, deliberately naive recomputations of the
// library's answers. They share no code with the implementation paths they
// check beyond the core data types.

#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "pg/attractors.hpp"
#include "pg/game.hpp"
#include "pg/measures.hpp"

namespace oracle {

// Least attractor set by naive closure iteration over the definition.
// `guard` restricts joinable vertices (guarded variant); the opponent joins
// only with at least one successor inside the context.
inline pg::VertexSet attractor_closure(const pg::ParityGame& g, pg::Player player,
                                       const pg::VertexSet& base, const pg::VertexSet& context,
                                       const pg::VertexSet& joinable) {
    pg::VertexSet a = base;
    bool changed = true;
    while (changed) {
        changed = false;
        joinable.for_each([&](int v) {
            if (a.test(v)) return;
            bool some = false, all = true, any_in_context = false;
            for (int w : g.successors(v)) {
                if (!context.test(w)) continue;
                any_in_context = true;
                if (a.test(w)) some = true;
                else all = false;
            }
            const bool joins =
                g.owner(v) == player ? some : (any_in_context && all);
            if (joins) {
                a.set(v);
                changed = true;
            }
        });
    }
    return a;
}

inline pg::VertexSet attractor_closure(const pg::ParityGame& g, pg::Player player,
                                       const pg::VertexSet& base, const pg::VertexSet& context) {
    return attractor_closure(g, player, base, context, context);
}

inline pg::VertexSet guarded_closure(const pg::ParityGame& g, int k, const pg::VertexSet& base,
                                     const pg::VertexSet& context) {
    pg::VertexSet joinable(g.node_count());
    context.for_each([&](int v) {
        if (g.priority(v) >= k) joinable.set(v);
    });
    return attractor_closure(g, pg::Player::Odd, base, context, joinable);
}

// Measure table at the least fixpoint, by plain repeated sweeps.
inline pg::MeasureTable exhaustive_fixpoint(const pg::ParityGame& g, const pg::MeasureDomain& dom) {
    pg::MeasureTable rho(dom, g.node_count());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.node_count(); ++v) {
            pg::Measure m = pg::lift(dom, rho, v, g);
            if (!(m == rho.at(v))) {
                rho.assign(v, std::move(m));
                changed = true;
            }
        }
    }
    return rho;
}

// All non-top measures of the domain in ascending lexicographic order.
inline std::vector<pg::Measure> enumerate_domain(const pg::MeasureDomain& dom) {
    std::vector<pg::Measure> out{pg::Measure::zero(dom)};
    pg::Measure cur = pg::Measure::zero(dom);
    for (;;) {
        int j = dom.odd_slots() - 1;
        for (; j >= 0; --j) {
            if (cur.entry(j) < dom.cap(j)) {
                cur.set_entry(j, cur.entry(j) + 1);
                break;
            }
            cur.set_entry(j, 0);
        }
        if (j < 0) return out;
        out.push_back(cur);
    }
}

// Least m satisfying the defining constraint of the per-edge update, found by
// scanning the enumerated domain; nullopt means only top satisfies it.
inline std::optional<pg::Measure> least_prog(const pg::MeasureDomain& dom, int priority,
                                             const pg::Measure& target) {
    if (target.is_top()) return std::nullopt;
    for (const pg::Measure& m : enumerate_domain(dom)) {
        const auto c = pg::cmp_upto(dom, m, target, priority);
        if (priority % 2 == 0 ? c >= 0 : c > 0) return m;
    }
    return std::nullopt;
}

// Game parity progress measure conditions, checked literally at each vertex.
inline bool is_progress_measure(const pg::ParityGame& g, const pg::MeasureDomain& dom,
                                pg::MeasureTable& rho) {
    for (int v = 0; v < g.node_count(); ++v) {
        const int p = g.priority(v);
        bool some = false, all = true;
        for (int w : g.successors(v)) {
            const bool ok = pg::cmp_upto(dom, rho.at(v), pg::prog(dom, rho, v, w, g), p) >= 0;
            some = some || ok;
            all = all && ok;
        }
        if (g.owner(v) == pg::Player::Even ? !some : !all) return false;
    }
    return true;
}

// Plays every positional opponent strategy against sigma and reports whether
// the player wins all resulting lassos from every region vertex.
inline bool wins_all_plays(const pg::ParityGame& g, pg::Player player,
                           const pg::VertexSet& region, const pg::Strategy& sigma) {
    std::vector<int> opp_verts;
    region.for_each([&](int v) {
        if (g.owner(v) != player) opp_verts.push_back(v);
    });

    std::vector<int> choice(opp_verts.size(), 0);
    std::vector<int> next(g.node_count(), -1);
    for (;;) {
        bool valid = true;
        region.for_each([&](int v) {
            if (g.owner(v) == player) {
                next[v] = sigma[v];
                if (next[v] < 0 || !region.test(next[v])) valid = false;
            }
        });
        for (size_t i = 0; i < opp_verts.size(); ++i) {
            next[opp_verts[i]] = g.successors(opp_verts[i])[choice[i]];
            if (!region.test(next[opp_verts[i]])) valid = false;  // escapes the region
        }
        if (!valid) return false;

        bool all_won = true;
        region.for_each([&](int start) {
            std::vector<int> pos(g.node_count(), -1);
            int v = start, steps = 0;
            while (pos[v] < 0) {
                pos[v] = steps++;
                v = next[v];
            }
            int min_pr = g.priority(v);
            for (int u = next[v]; u != v; u = next[u]) min_pr = std::min(min_pr, g.priority(u));
            if (pg::priority_winner(min_pr) != player) all_won = false;
        });
        if (!all_won) return false;

        size_t i = 0;
        for (; i < opp_verts.size(); ++i) {
            if (++choice[i] < static_cast<int>(g.successors(opp_verts[i]).size())) break;
            choice[i] = 0;
        }
        if (i == opp_verts.size()) return true;
    }
}

}  // namespace oracle
