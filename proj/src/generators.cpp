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

#include <random>

#include "pg/generators.hpp"

namespace pg {

namespace {
constexpr Player E = Player::Even;
constexpr Player O = Player::Odd;
}  // namespace

ParityGame gen_figure1() {
    return build_game({O, E, E, O, O, O}, {0, 3, 3, 2, 0, 1},
                      {{0, 1}, {2, 0}, {3, 1}, {4, 5}, {5}, {3}},
                      {"v1", "v2", "v3", "v4", "v5", "v6"});
}

ParityGame gen_figure2(int n) {
    check(n >= 2, "family parameter must be at least 2");
    // priorities 0, 2, 1, then ascending 3..2N; 2N+1 vertices
    std::vector<int> priorities{0, 2, 1};
    for (int p = 3; p <= 2 * n; ++p) priorities.push_back(p);
    const int m = static_cast<int>(priorities.size());

    std::vector<std::vector<int>> succs(m);
    for (int v = 0; v + 1 < m; ++v) succs[v] = {v + 1};
    succs[m - 1] = {1, m - 1};  // back to the priority-2 vertex, plus a self-loop

    return build_game(std::vector<Player>(m, O), std::move(priorities), succs);
}

ParityGame gen_figure4() {
    return build_game({E, O, E, E}, {1, 2, 1, 3}, {{1}, {2, 3}, {0}, {1}},
                      {"v1", "v2", "v3", "v4"});
}

ParityGame gen_figure6() {
    return build_game({E, O, O, E, O, E, O, E, O}, {0, 4, 3, 1, 4, 5, 5, 6, 4},
                      {{2}, {2, 7}, {6}, {2, 3}, {3, 5}, {4, 6}, {5, 7, 8}, {1, 6}, {0, 8}},
                      {"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9"});
}

ParityGame gen_random(int n, int d, int min_deg, int max_deg, uint64_t seed) {
    check(n >= 1 && d >= 1 && 1 <= min_deg && min_deg <= max_deg && max_deg <= n,
          "bad random game parameters");

    // mt19937_64 with modulo draws: identical streams on every platform
    std::mt19937_64 rng(seed);
    auto below = [&](int bound) { return static_cast<int>(rng() % static_cast<uint64_t>(bound)); };

    std::vector<Player> owners(n);
    std::vector<int> priorities(n);
    std::vector<std::vector<int>> succs(n);
    std::vector<int> pool(n);

    for (int v = 0; v < n; ++v) {
        owners[v] = below(2) ? O : E;
        priorities[v] = below(d);
        const int deg = min_deg + below(max_deg - min_deg + 1);
        for (int i = 0; i < n; ++i) pool[i] = i;
        for (int i = 0; i < deg; ++i) {
            const int j = i + below(n - i);
            std::swap(pool[i], pool[j]);
            succs[v].push_back(pool[i]);
        }
    }
    return build_game(std::move(owners), std::move(priorities), succs);
}

}  // namespace pg
