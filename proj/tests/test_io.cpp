#include <doctest.h>

#include <random>

#include "pg/generators.hpp"
#include "pg/io.hpp"
#include "pg/onepass.hpp"
#include "pg/verify.hpp"

#include <json.hpp>

using namespace pg;

TEST_CASE("parsing the figure-1 encoding") {
    const std::string text =
        "parity 5; 0 0 1 0,1 \"v1\"; 1 3 0 2,0; 2 3 0 3,1; 3 2 1 4,5; 4 0 1 5; 5 1 1 3;";
    const ParityGame g = parse_game(text);
    CHECK(g.node_count() == 6);
    CHECK(g.tuple_length() == 4);
    CHECK(g.owner(0) == Player::Odd);
    CHECK(g.owner(1) == Player::Even);
    CHECK(g.label(0) == "v1");
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(1, 0));
    // same arena as the built-in fixture
    CHECK(solve_zielonka(g).win_even == VertexSet(6, {0, 1, 2}));
}

TEST_CASE("max-wins inputs are converted parity-preserving") {
    // priorities {0,1,2}, M = 2: converted to {2,1,0}
    const ParityGame g = parse_game("0 0 0 1; 1 1 0 2; 2 2 0 0;", Convention::MaxWins);
    CHECK(g.priority(0) == 2);
    CHECK(g.priority(1) == 1);
    CHECK(g.priority(2) == 0);

    std::mt19937_64 rng(67);
    for (int iter = 0; iter < 50; ++iter) {
        const ParityGame a = gen_random(5, 5, 1, 3, rng());
        const ParityGame b = parse_game(write_game(a), Convention::MaxWins);
        int maxp = 0;
        for (int v = 0; v < 5; ++v) maxp = std::max(maxp, a.priority(v));
        const int m = maxp % 2 == 0 ? maxp : maxp + 1;
        for (int v = 0; v < 5; ++v) {
            CHECK(b.priority(v) % 2 == a.priority(v) % 2);
            CHECK(b.priority(v) == m - a.priority(v));
        }
        // significance reverses: p < q iff M - p > M - q
        for (int v = 0; v < 5; ++v)
            for (int w = 0; w < 5; ++w)
                if (a.priority(v) < a.priority(w)) CHECK(b.priority(v) > b.priority(w));
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_game("0 0 0;"), empty_successor_list);
    CHECK_THROWS_AS(parse_game("0 0 0 1;"), dangling_edge);
    CHECK_THROWS_AS(parse_game("garbage"), syntax_error);
    CHECK_THROWS_AS(parse_game("0 0 0 0; 0 0 0 0;"), syntax_error);  // duplicate id
    CHECK_THROWS_AS(parse_game("1 0 0 1;"), syntax_error);           // id 0 missing
    CHECK_THROWS_AS(parse_game("0 0 7 0;"), syntax_error);           // bad owner
    CHECK_THROWS_AS(parse_game(""), syntax_error);
}

TEST_CASE("write is canonical and round-trips") {
    const ParityGame g = gen_figure1();
    CHECK(write_game(g) == write_game(g));
    CHECK(structurally_equal(parse_game(write_game(g)), g));

    std::mt19937_64 rng(71);
    for (int iter = 0; iter < 100; ++iter) {
        const ParityGame r = gen_random(2 + static_cast<int>(rng() % 8), 5, 1, 3, rng());
        CHECK(structurally_equal(parse_game(write_game(r)), r));
    }
}

TEST_CASE("labels with quotes round-trip") {
    const ParityGame g =
        build_game({Player::Even}, {0}, {{0}}, {std::string("say \"hi\" \\ back")});
    const ParityGame back = parse_game(write_game(g));
    CHECK(back.label(0) == "say \"hi\" \\ back");
    CHECK(structurally_equal(g, back));
}

TEST_CASE("json solution report") {
    const ParityGame g = gen_figure1();
    const SolveResult r = solve_onepass(g);
    const std::string text = write_solution(g, r, SolutionFormat::Json);
    const auto j = nlohmann::json::parse(text);

    CHECK(j["format"] == 1);
    CHECK(j["algorithm"] == "onepass");
    CHECK(j["regions"]["even"] == nlohmann::json({0, 1, 2}));
    CHECK(j["regions"]["odd"] == nlohmann::json({3, 4, 5}));
    CHECK(j["measures"][3] == "T");
    CHECK(j["measures"][0].get<std::string>().front() == '(');
    CHECK(j["strategies"]["odd"].size() == 3);
    CHECK(j.contains("stats"));

    // round-trip through the parser and re-verify
    const SolveResult back = parse_solution(text, g);
    CHECK(back.win_even == r.win_even);
    CHECK(back.strategy_odd == r.strategy_odd);
    CHECK(verify_partition(g, back).empty());
}

TEST_CASE("an even paradise reports an empty odd strategy map") {
    const ParityGame g = build_game({Player::Even, Player::Odd}, {0, 2}, {{1}, {0}});
    const SolveResult r = solve_two_pass(g);
    const auto j = nlohmann::json::parse(write_solution(g, r, SolutionFormat::Json));
    CHECK(j["strategies"]["odd"].is_object());
    CHECK(j["strategies"]["odd"].empty());
}

TEST_CASE("pgsol solution format") {
    const ParityGame g = gen_figure1();
    const SolveResult r = solve_onepass(g);
    const std::string text = write_solution(g, r, SolutionFormat::PgSolverSolution);
    CHECK(text.rfind("paritysol 5;\n", 0) == 0);

    const SolveResult back = parse_solution(text, g);
    CHECK(back.win_even == r.win_even);
    CHECK(back.strategy_odd == r.strategy_odd);
}

TEST_CASE("dot export") {
    const ParityGame g = gen_figure1();
    const std::string plain = write_dot(g);
    size_t diamonds = 0, edges = 0, pos = 0;
    while ((pos = plain.find("shape=diamond", pos)) != std::string::npos) {
        ++diamonds;
        pos += 1;
    }
    pos = 0;
    while ((pos = plain.find("->", pos)) != std::string::npos) {
        ++edges;
        pos += 1;
    }
    CHECK(diamonds == 2);
    CHECK(edges == 10);
    CHECK(plain.find("color=") == std::string::npos);

    const SolveResult r = solve_onepass(g);
    const std::string colored = write_dot(g, &r);
    CHECK(colored.find("color=") != std::string::npos);
    CHECK(colored.find("penwidth=2") != std::string::npos);
}
