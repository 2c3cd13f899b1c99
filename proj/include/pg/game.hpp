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

#include <span>
#include <string>
#include <vector>

#include "pg/errors.hpp"
#include "pg/vertexset.hpp"

namespace pg {

enum class Player : uint8_t { Even = 0, Odd = 1 };

constexpr Player opponent(Player p) {
    return p == Player::Even ? Player::Odd : Player::Even;
}

constexpr Player priority_winner(int priority) {
    return priority % 2 == 0 ? Player::Even : Player::Odd;
}

// Positional strategy: strategy[v] is the chosen successor, -1 if undefined.
using Strategy = std::vector<int>;

inline bool strategy_has_entries(const Strategy& s) {
    for (int t : s)
        if (t >= 0) return true;
    return false;
}

// Immutable game arena. Vertices are dense ids 0..n-1; every vertex has at
// least one successor; pred is the transpose of succ.
class ParityGame {
  public:
    ParityGame() = default;

    int node_count() const { return n_; }
    Player owner(int v) const { return owner_[v]; }
    int priority(int v) const { return priority_[v]; }

    std::span<const int> successors(int v) const {
        return {edges_.data() + succ_off_[v], static_cast<size_t>(succ_off_[v + 1] - succ_off_[v])};
    }
    std::span<const int> predecessors(int v) const {
        return {redges_.data() + pred_off_[v], static_cast<size_t>(pred_off_[v + 1] - pred_off_[v])};
    }

    bool has_edge(int v, int w) const {
        for (int u : successors(v))
            if (u == w) return true;
        return false;
    }

    int edge_count() const { return static_cast<int>(edges_.size()); }
    int max_priority() const { return max_priority_; }

    // One larger than the largest priority present; length of measure tuples.
    int tuple_length() const { return max_priority_ + 1; }

    // Number of vertices carrying priority p.
    int priority_count(int p) const {
        return p >= 0 && p < static_cast<int>(counts_.size()) ? counts_[p] : 0;
    }

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const {
        static const std::string none;
        return has_labels() ? labels_[v] : none;
    }

    VertexSet all_vertices() const { return VertexSet::full(n_); }

    friend ParityGame build_game(std::vector<Player> owners, std::vector<int> priorities,
                                 const std::vector<std::vector<int>>& successor_lists,
                                 std::vector<std::string> labels);

  private:
    int n_ = 0;
    int max_priority_ = -1;
    std::vector<Player> owner_;
    std::vector<int> priority_;
    std::vector<int> succ_off_, edges_;
    std::vector<int> pred_off_, redges_;
    std::vector<int> counts_;
    std::vector<std::string> labels_;
};

ParityGame build_game(std::vector<Player> owners, std::vector<int> priorities,
                      const std::vector<std::vector<int>>& successor_lists,
                      std::vector<std::string> labels = {});

// Restriction of a game to a vertex set, with the map back to parent ids.
struct SubGame {
    ParityGame game;
    std::vector<int> to_parent;
};

SubGame subgame(const ParityGame& g, const VertexSet& sel);

// Shift every priority by one and swap ownership; edges unchanged.
ParityGame dualize(const ParityGame& g);

int min_priority(const ParityGame& g, const VertexSet& w);

// Same vertices, owners, priorities, labels and successor sets.
bool structurally_equal(const ParityGame& a, const ParityGame& b);

}  // namespace pg
