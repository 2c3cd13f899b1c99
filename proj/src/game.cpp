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

#include "pg/game.hpp"

#include <algorithm>

namespace pg {

ParityGame build_game(std::vector<Player> owners, std::vector<int> priorities,
                      const std::vector<std::vector<int>>& successor_lists,
                      std::vector<std::string> labels) {
    const int n = static_cast<int>(owners.size());
    check(static_cast<int>(priorities.size()) == n &&
              static_cast<int>(successor_lists.size()) == n,
          "build_game: input lists differ in length");
    check(labels.empty() || static_cast<int>(labels.size()) == n,
          "build_game: label list length mismatch");

    ParityGame g;
    g.n_ = n;
    g.owner_ = std::move(owners);
    g.priority_ = std::move(priorities);
    g.labels_ = std::move(labels);

    g.succ_off_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) {
        if (successor_lists[v].empty()) throw empty_successor_list(v);
        for (int w : successor_lists[v])
            if (w < 0 || w >= n) throw dangling_edge(v, w);
        g.succ_off_[v + 1] = g.succ_off_[v] + static_cast<int>(successor_lists[v].size());
    }
    g.edges_.reserve(g.succ_off_[n]);
    for (int v = 0; v < n; ++v)
        g.edges_.insert(g.edges_.end(), successor_lists[v].begin(), successor_lists[v].end());

    // transpose
    g.pred_off_.assign(n + 1, 0);
    for (int w : g.edges_) ++g.pred_off_[w + 1];
    for (int v = 0; v < n; ++v) g.pred_off_[v + 1] += g.pred_off_[v];
    g.redges_.resize(g.edges_.size());
    std::vector<int> cursor(g.pred_off_.begin(), g.pred_off_.end() - 1);
    for (int v = 0; v < n; ++v)
        for (int w : g.successors(v)) g.redges_[cursor[w]++] = v;

    g.max_priority_ = -1;
    for (int v = 0; v < n; ++v) g.max_priority_ = std::max(g.max_priority_, g.priority_[v]);
    g.counts_.assign(g.max_priority_ + 1, 0);
    for (int v = 0; v < n; ++v) ++g.counts_[g.priority_[v]];
    return g;
}

SubGame subgame(const ParityGame& g, const VertexSet& sel) {
    if (sel.empty()) throw empty_set();

    std::vector<int> to_parent = sel.to_vector();
    const int m = static_cast<int>(to_parent.size());
    std::vector<int> to_local(g.node_count(), -1);
    for (int i = 0; i < m; ++i) to_local[to_parent[i]] = i;

    std::vector<Player> owners(m);
    std::vector<int> priorities(m);
    std::vector<std::vector<int>> succs(m);
    std::vector<std::string> labels;
    if (g.has_labels()) labels.resize(m);

    for (int i = 0; i < m; ++i) {
        const int v = to_parent[i];
        owners[i] = g.owner(v);
        priorities[i] = g.priority(v);
        if (g.has_labels()) labels[i] = g.label(v);
        for (int w : g.successors(v))
            if (to_local[w] >= 0) succs[i].push_back(to_local[w]);
        if (succs[i].empty()) throw not_total(v);
    }

    return {build_game(std::move(owners), std::move(priorities), succs, std::move(labels)),
            std::move(to_parent)};
}

ParityGame dualize(const ParityGame& g) {
    const int n = g.node_count();
    std::vector<Player> owners(n);
    std::vector<int> priorities(n);
    std::vector<std::vector<int>> succs(n);
    std::vector<std::string> labels;
    if (g.has_labels()) labels.resize(n);
    for (int v = 0; v < n; ++v) {
        owners[v] = opponent(g.owner(v));
        priorities[v] = g.priority(v) + 1;
        succs[v].assign(g.successors(v).begin(), g.successors(v).end());
        if (g.has_labels()) labels[v] = g.label(v);
    }
    return build_game(std::move(owners), std::move(priorities), succs, std::move(labels));
}

int min_priority(const ParityGame& g, const VertexSet& w) {
    if (w.empty()) throw empty_set();
    int best = -1;
    w.for_each([&](int v) {
        if (best < 0 || g.priority(v) < best) best = g.priority(v);
    });
    return best;
}

bool structurally_equal(const ParityGame& a, const ParityGame& b) {
    if (a.node_count() != b.node_count()) return false;
    for (int v = 0; v < a.node_count(); ++v) {
        if (a.owner(v) != b.owner(v) || a.priority(v) != b.priority(v)) return false;
        if (a.label(v) != b.label(v)) return false;
        std::vector<int> sa(a.successors(v).begin(), a.successors(v).end());
        std::vector<int> sb(b.successors(v).begin(), b.successors(v).end());
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    return true;
}

}  // namespace pg
