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

#include <stdexcept>
#include <string>

namespace pg {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct empty_successor_list : error {
    int vertex;
    explicit empty_successor_list(int v)
        : error("vertex " + std::to_string(v) + " has no successors"), vertex(v) {}
};

struct dangling_edge : error {
    int vertex;
    int target;
    dangling_edge(int v, int w)
        : error("edge " + std::to_string(v) + " -> " + std::to_string(w) +
                " leaves the vertex range"),
          vertex(v), target(w) {}
};

struct not_total : error {
    int vertex;
    explicit not_total(int v)
        : error("vertex " + std::to_string(v) + " loses all successors in the restriction"),
          vertex(v) {}
};

struct empty_set : error {
    empty_set() : error("operation requires a non-empty vertex set") {}
};

struct domain_mismatch : error {
    domain_mismatch() : error("measures belong to different domains") {}
};

struct position_out_of_range : error {
    int position;
    explicit position_out_of_range(int i)
        : error("tuple position " + std::to_string(i) + " out of range"), position(i) {}
};

struct not_a_successor : error {
    not_a_successor(int v, int w)
        : error(std::to_string(w) + " is not a successor of " + std::to_string(v)) {}
};

struct top_measure : error {
    top_measure() : error("operation undefined on the top measure") {}
};

struct even_position : error {
    explicit even_position(int i)
        : error("position " + std::to_string(i) + " is even; entries live on odd positions") {}
};

struct base_not_in_context : error {
    base_not_in_context() : error("attractor base is not contained in the context") {}
};

struct base_violates_guard : error {
    base_violates_guard()
        : error("guarded attractor base leaves the context or contains a priority below the guard") {}
};

struct invalid_lasso : error {
    using error::error;
};

struct game_too_large : error {
    using error::error;
};

struct syntax_error : error {
    int line;
    syntax_error(int ln, const std::string& what)
        : error("line " + std::to_string(ln) + ": " + what), line(ln) {}
};

// Internal-consistency failures (solver bugs), never valid-input conditions.
struct assertion_failure : std::logic_error {
    using std::logic_error::logic_error;
};

inline void check(bool cond, const char* what) {
    if (!cond) throw assertion_failure(what);
}

}  // namespace pg
