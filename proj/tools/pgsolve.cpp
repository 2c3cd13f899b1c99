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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pg/generators.hpp"
#include "pg/io.hpp"
#include "pg/onepass.hpp"
#include "pg/verify.hpp"

namespace {

// 0 success, 1 input/usage error, 2 verification failure
constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerify = 2;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw pg::error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

pg::LiftingPolicy parse_policy(const std::string& spec) {
    if (spec == "worklist") return pg::LiftingPolicy::worklist();
    if (spec == "roundrobin") return pg::LiftingPolicy::round_robin();
    if (spec == "input") return pg::LiftingPolicy::input_order();
    if (spec.rfind("random:", 0) == 0)
        return pg::LiftingPolicy::seeded_random(std::stoull(spec.substr(7)));
    if (spec.rfind("prefer:", 0) == 0) {
        std::vector<int> ids;
        std::stringstream ss(spec.substr(7));
        std::string tok;
        while (std::getline(ss, tok, ',')) ids.push_back(std::stoi(tok));
        return pg::LiftingPolicy::prefer_list(std::move(ids));
    }
    throw pg::error("unknown policy '" + spec + "'");
}

void print_trace_event(const pg::TraceEvent& ev) {
    using Kind = pg::TraceEvent::Kind;
    std::string line(static_cast<size_t>(2 * ev.depth), ' ');
    auto set_str = [&] {
        std::string s = "{";
        for (size_t i = 0; i < ev.vertices.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(ev.vertices[i]);
        }
        return s + "}";
    };
    switch (ev.kind) {
        case Kind::FirstTop:
            line += "top at " + std::to_string(ev.vertex) + " (priority " + std::to_string(ev.k) + ")";
            break;
        case Kind::OddStrategy:
            line += "sigma(" + std::to_string(ev.vertex) + ") = " + std::to_string(ev.target);
            break;
        case Kind::Resolved: line += "resolved " + set_str(); break;
        case Kind::Irrelevant: line += "irrelevant " + set_str(); break;
        case Kind::Remainder: line += "recurse on " + set_str(); break;
        case Kind::Dominion: line += "dominion " + set_str(); break;
        case Kind::Attracted: line += "attracted " + set_str(); break;
        case Kind::FixpointNoTop: line += "fixpoint, no top"; break;
    }
    std::cerr << line << '\n';
}

pg::SolveResult run_algorithm(const std::string& algo, const pg::ParityGame& game,
                              const pg::LiftingPolicy& policy, bool trace) {
    if (algo == "spm") return pg::solve_spm(game, policy);
    if (algo == "onepass")
        return pg::solve_onepass(game, policy, trace ? print_trace_event : pg::TraceSink{});
    if (algo == "twopass") return pg::solve_two_pass(game, policy);
    if (algo == "zielonka") return pg::solve_zielonka(game);
    if (algo == "brute") return pg::solve_bruteforce(game);
    throw pg::error("unknown algorithm '" + algo + "'");
}

int cmd_solve(const std::string& input, const std::string& algo, const std::string& policy_spec,
              const std::string& convention, const std::string& format, bool stats, bool trace,
              bool no_verify) {
    const pg::LiftingPolicy policy = parse_policy(policy_spec);
    const pg::ParityGame game = pg::parse_game(
        read_input(input),
        convention == "max" ? pg::Convention::MaxWins : pg::Convention::MinWins);

    pg::SolveResult result = run_algorithm(algo, game, policy, trace);

    if (!no_verify) {
        const auto violations = pg::verify_partition(game, result);
        if (!violations.empty()) {
            for (const auto& v : violations) std::cerr << "violation: " << v.describe() << '\n';
            return kExitVerify;
        }
    }

    std::cout << pg::write_solution(game, result,
                                    format == "pgsol" ? pg::SolutionFormat::PgSolverSolution
                                                      : pg::SolutionFormat::Json);
    if (stats)
        std::cerr << "stats: lifts=" << result.stats.lifts << " progs=" << result.stats.progs
                  << " attractors=" << result.stats.attractors
                  << " lifts_dual=" << result.stats.lifts_dual
                  << " wall_ms=" << result.stats.wall_ms << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& game_path, const std::string& solution_path) {
    const pg::ParityGame game = pg::parse_game(read_input(game_path));
    const pg::SolveResult solution = pg::parse_solution(read_input(solution_path), game);
    const auto violations = pg::verify_partition(game, solution);
    for (const auto& v : violations) std::cout << "violation: " << v.describe() << '\n';
    return violations.empty() ? kExitOk : kExitVerify;
}

int cmd_gen(const std::string& family, int n, int d, int min_deg, int max_deg, uint64_t seed,
            const std::string& out_path) {
    pg::ParityGame game;
    if (family == "fig1") game = pg::gen_figure1();
    else if (family == "fig2") game = pg::gen_figure2(n);
    else if (family == "fig4") game = pg::gen_figure4();
    else if (family == "fig6") game = pg::gen_figure6();
    else if (family == "random") game = pg::gen_random(n, d, min_deg, max_deg, seed);
    else throw pg::error("unknown family '" + family + "'");

    const std::string text = pg::write_game(game);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw pg::error("cannot write " + out_path);
        out << text;
    }
    return kExitOk;
}

int cmd_bench(const std::string& family, const std::string& range, const std::string& algos,
              int repeat) {
    if (family != "fig2") throw pg::error("unknown family '" + family + "'");
    const auto dots = range.find("..");
    if (dots == std::string::npos) throw pg::error("range must be A..B");
    const int lo = std::stoi(range.substr(0, dots));
    const int hi = std::stoi(range.substr(dots + 2));
    if (lo < 2 || hi < lo) throw pg::error("bad range");

    std::vector<std::string> algo_list;
    std::stringstream ss(algos);
    std::string tok;
    while (std::getline(ss, tok, ',')) algo_list.push_back(tok);
    if (algo_list.empty()) throw pg::error("no algorithms given");

    std::cout << "family,N,algo,lifts,progs,attractors,wall_ms\n";
    for (int n = lo; n <= hi; ++n) {
        const pg::ParityGame game = pg::gen_figure2(n);
        for (const auto& algo : algo_list) {
            pg::SolveResult best;
            for (int r = 0; r < std::max(1, repeat); ++r) {
                pg::SolveResult res = run_algorithm(algo, game, pg::LiftingPolicy::worklist(), false);
                if (r == 0 || res.stats.wall_ms < best.stats.wall_ms) best = std::move(res);
            }
            std::cout << family << ',' << n << ',' << algo << ',' << best.stats.lifts << ','
                      << best.stats.progs << ',' << best.stats.attractors << ','
                      << best.stats.wall_ms << '\n';
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parity game solving toolkit"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "solve a game and print the solution");
    std::string s_input, s_algo = "onepass", s_policy = "worklist", s_convention = "min",
                s_format = "json";
    bool s_stats = false, s_trace = false, s_no_verify = false;
    solve->add_option("input", s_input, "game file, or - for standard input");
    solve->add_option("--algo", s_algo, "spm|onepass|twopass|zielonka|brute");
    solve->add_option("--policy", s_policy, "roundrobin|worklist|input|random:<seed>|prefer:<id-list>");
    solve->add_option("--convention", s_convention, "min|max priority semantics of the input");
    solve->add_option("--format", s_format, "json|pgsol");
    solve->add_flag("--stats", s_stats, "print counters to standard error");
    solve->add_flag("--trace", s_trace, "trace the one-pass solver to standard error");
    solve->add_flag("--no-verify", s_no_verify, "skip the self-check before printing");

    auto* verify = app.add_subcommand("verify", "check a solution against a game");
    std::string v_game, v_solution;
    verify->add_option("game", v_game, "game file")->required();
    verify->add_option("solution", v_solution, "solution file (json or pgsol)")->required();

    auto* gen = app.add_subcommand("gen", "generate a game");
    std::string g_family = "random", g_out;
    int g_n = 8, g_d = 4, g_min = 1, g_max = 3;
    uint64_t g_seed = 1;
    gen->add_option("--family", g_family, "fig1|fig2|fig4|fig6|random");
    gen->add_option("--N", g_n, "family parameter / vertex count");
    gen->add_option("--d", g_d, "number of priorities (random)");
    gen->add_option("--min-deg", g_min, "minimum outdegree (random)");
    gen->add_option("--max-deg", g_max, "maximum outdegree (random)");
    gen->add_option("--seed", g_seed, "random seed");
    gen->add_option("-o,--output", g_out, "output file, default standard output");

    auto* bench = app.add_subcommand("bench", "benchmark solvers on a family, CSV output");
    std::string b_family = "fig2", b_range = "4..9", b_algos = "onepass,twopass";
    int b_repeat = 1;
    bench->add_option("--family", b_family, "fig2");
    bench->add_option("--range", b_range, "A..B family parameters");
    bench->add_option("--algos", b_algos, "comma-separated algorithm list");
    bench->add_option("--repeat", b_repeat, "wall time is the best of k runs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return cmd_solve(s_input, s_algo, s_policy, s_convention, s_format, s_stats, s_trace,
                             s_no_verify);
        if (verify->parsed()) return cmd_verify(v_game, v_solution);
        if (gen->parsed()) return cmd_gen(g_family, g_n, g_d, g_min, g_max, g_seed, g_out);
        if (bench->parsed()) return cmd_bench(b_family, b_range, b_algos, b_repeat);
    } catch (const pg::assertion_failure& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitVerify;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
