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

#include <string>

#include "pg/spm.hpp"

namespace pg {

// Input priority semantics. Internally the winner of a play is decided by
// the parity of the least priority seen infinitely often; max-wins inputs
// are converted with p -> M - p, M the smallest even number >= max priority.
enum class Convention { MinWins, MaxWins };

// Grammar (whitespace-insensitive, ';'-terminated statements):
//   parity <max-id>;                      -- optional header
//   <id> <priority> <owner> <succ>(,<succ>)* ("<label>")? ;
// Owner 1 is Odd. Ids must cover 0..max exactly once.
ParityGame parse_game(const std::string& text, Convention convention = Convention::MinWins);

// Canonical form: header, one line per vertex in id order, successors
// ascending. Deterministic; parse(write(g)) is structurally equal to g.
std::string write_game(const ParityGame& g);

enum class SolutionFormat { Json, PgSolverSolution };

std::string write_solution(const ParityGame& g, const SolveResult& result, SolutionFormat format);

// Reads back regions and strategies (either format) for verification.
SolveResult parse_solution(const std::string& text, const ParityGame& g);

// DOT digraph: diamonds for Even owners, boxes for Odd; optional winner
// coloring and strategy-edge highlighting when a result is supplied.
std::string write_dot(const ParityGame& g, const SolveResult* result = nullptr);

}  // namespace pg
