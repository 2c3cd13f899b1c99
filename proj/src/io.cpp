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
#include <cctype>
#include <cstdint>
#include <cstring>
#include <sstream>

#include <json.hpp>

#include "pg/io.hpp"

namespace pg {

namespace {

struct Scanner {
    const std::string& text;
    size_t pos = 0;
    int line = 1;

    explicit Scanner(const std::string& text) : text(text) {}

    void skip_space() {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])))) {
            if (text[pos] == '\n') ++line;
            ++pos;
        }
    }

    bool done() {
        skip_space();
        return pos >= text.size();
    }

    bool peek_is(char c) {
        skip_space();
        return pos < text.size() && text[pos] == c;
    }

    void expect(char c, const char* what) {
        skip_space();
        if (pos >= text.size() || text[pos] != c) throw syntax_error(line, what);
        ++pos;
    }

    bool try_word(const char* w) {
        skip_space();
        const size_t len = std::strlen(w);
        if (text.compare(pos, len, w) == 0 &&
            (pos + len >= text.size() ||
             !std::isalnum(static_cast<unsigned char>(text[pos + len])))) {
            pos += len;
            return true;
        }
        return false;
    }

    long number() {
        skip_space();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw syntax_error(line, "expected a number");
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > INT32_MAX) throw syntax_error(line, "number too large");
            ++pos;
        }
        return v;
    }

    std::string quoted() {
        expect('"', "expected an opening quote");
        std::string out;
        while (pos < text.size() && text[pos] != '"') {
            if (text[pos] == '\\' && pos + 1 < text.size()) ++pos;
            if (text[pos] == '\n') ++line;
            out += text[pos++];
        }
        if (pos >= text.size()) throw syntax_error(line, "unterminated label");
        ++pos;
        return out;
    }
};

std::string escape_label(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

ParityGame parse_game(const std::string& text, Convention convention) {
    Scanner sc(text);

    struct Line {
        int priority;
        int owner;
        std::vector<int> succs;
        std::string label;
        bool has_label = false;
    };
    std::vector<std::pair<int, Line>> rows;
    long declared_max = -1;

    if (sc.try_word("parity")) {
        declared_max = sc.number();
        sc.expect(';', "expected ';' after the header");
    }

    while (!sc.done()) {
        const int id = static_cast<int>(sc.number());
        Line ln;
        ln.priority = static_cast<int>(sc.number());
        ln.owner = static_cast<int>(sc.number());
        if (ln.owner != 0 && ln.owner != 1)
            throw syntax_error(sc.line, "owner must be 0 (Even) or 1 (Odd)");
        if (sc.peek_is(';') || sc.peek_is('"')) throw empty_successor_list(id);
        for (;;) {
            ln.succs.push_back(static_cast<int>(sc.number()));
            if (sc.peek_is(',')) {
                ++sc.pos;
                continue;
            }
            break;
        }
        if (sc.peek_is('"')) {
            ln.label = sc.quoted();
            ln.has_label = true;
        }
        sc.expect(';', "expected ';' after the vertex line");
        rows.emplace_back(id, std::move(ln));
    }
    if (rows.empty()) throw syntax_error(sc.line, "no vertices");

    int max_id = -1;
    for (auto& [id, ln] : rows) max_id = std::max(max_id, id);
    if (declared_max >= 0 && declared_max != max_id)
        throw syntax_error(1, "header max id does not match the vertex lines");
    const int n = max_id + 1;
    if (static_cast<int>(rows.size()) != n) throw syntax_error(1, "vertex ids must cover 0..max");

    std::vector<Player> owners(n);
    std::vector<int> priorities(n, -1);
    std::vector<std::vector<int>> succs(n);
    std::vector<std::string> labels;
    bool any_label = false;
    for (auto& [id, ln] : rows) any_label = any_label || ln.has_label;
    if (any_label) labels.resize(n);

    std::vector<bool> seen(n, false);
    for (auto& [id, ln] : rows) {
        if (seen[id]) throw syntax_error(1, "vertex " + std::to_string(id) + " defined twice");
        seen[id] = true;
        owners[id] = ln.owner ? Player::Odd : Player::Even;
        priorities[id] = ln.priority;
        succs[id] = std::move(ln.succs);
        if (any_label) labels[id] = ln.label;
    }

    if (convention == Convention::MaxWins) {
        int maxp = 0;
        for (int p : priorities) maxp = std::max(maxp, p);
        const int m = maxp % 2 == 0 ? maxp : maxp + 1;  // smallest even >= max
        for (int& p : priorities) p = m - p;
    }

    return build_game(std::move(owners), std::move(priorities), succs, std::move(labels));
}

std::string write_game(const ParityGame& g) {
    std::ostringstream out;
    out << "parity " << g.node_count() - 1 << ";\n";
    for (int v = 0; v < g.node_count(); ++v) {
        out << v << ' ' << g.priority(v) << ' ' << (g.owner(v) == Player::Odd ? 1 : 0) << ' ';
        std::vector<int> ss(g.successors(v).begin(), g.successors(v).end());
        std::sort(ss.begin(), ss.end());
        for (size_t i = 0; i < ss.size(); ++i) {
            if (i) out << ',';
            out << ss[i];
        }
        if (g.has_labels()) out << " \"" << escape_label(g.label(v)) << '"';
        out << ";\n";
    }
    return out.str();
}

std::string write_solution(const ParityGame& g, const SolveResult& result, SolutionFormat format) {
    if (format == SolutionFormat::PgSolverSolution) {
        std::ostringstream out;
        out << "paritysol " << g.node_count() - 1 << ";\n";
        for (int v = 0; v < g.node_count(); ++v) {
            const bool even_won = result.win_even.test(v);
            out << v << ' ' << (even_won ? 0 : 1);
            const Strategy& sigma = even_won ? result.strategy_even : result.strategy_odd;
            if (g.owner(v) == (even_won ? Player::Even : Player::Odd) && sigma[v] >= 0)
                out << ' ' << sigma[v];
            out << ";\n";
        }
        return out.str();
    }

    nlohmann::ordered_json j;
    j["format"] = 1;
    j["algorithm"] = result.algorithm;
    j["policy"] = result.policy;
    j["regions"]["even"] = result.win_even.to_vector();
    j["regions"]["odd"] = result.win_odd.to_vector();
    if (result.has_even_strategy) {
        auto& m = j["strategies"]["even"] = nlohmann::ordered_json::object();
        for (int v = 0; v < g.node_count(); ++v)
            if (result.strategy_even[v] >= 0) m[std::to_string(v)] = result.strategy_even[v];
    }
    if (result.has_odd_strategy) {
        auto& m = j["strategies"]["odd"] = nlohmann::ordered_json::object();
        for (int v = 0; v < g.node_count(); ++v)
            if (result.strategy_odd[v] >= 0) m[std::to_string(v)] = result.strategy_odd[v];
    }
    if (result.measures && result.domain) {
        auto& arr = j["measures"] = nlohmann::ordered_json::array();
        for (int v = 0; v < g.node_count(); ++v)
            arr.push_back(result.measures->at(v).render(*result.domain));
    }
    j["stats"]["lifts"] = result.stats.lifts;
    j["stats"]["progs"] = result.stats.progs;
    j["stats"]["attractors"] = result.stats.attractors;
    j["stats"]["lifts_dual"] = result.stats.lifts_dual;
    j["stats"]["progs_dual"] = result.stats.progs_dual;
    j["stats"]["wall_ms"] = result.stats.wall_ms;
    return j.dump(2) + "\n";
}

SolveResult parse_solution(const std::string& text, const ParityGame& g) {
    const int n = g.node_count();
    SolveResult res;
    res.win_even = VertexSet(n);
    res.win_odd = VertexSet(n);
    res.strategy_even.assign(n, -1);
    res.strategy_odd.assign(n, -1);

    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw syntax_error(1, e.what());
        }
        auto read_region = [&](const char* key, VertexSet& set) {
            for (const auto& v : j.at("regions").at(key)) {
                const int id = v.get<int>();
                if (id < 0 || id >= n) throw syntax_error(1, "region vertex out of range");
                set.set(id);
            }
        };
        read_region("even", res.win_even);
        read_region("odd", res.win_odd);
        auto read_strategy = [&](const char* key, Strategy& sigma, bool& flag) {
            if (!j.contains("strategies") || !j["strategies"].contains(key)) return;
            flag = true;
            for (const auto& [from, to] : j["strategies"][key].items()) {
                int v;
                try {
                    v = std::stoi(from);
                } catch (const std::exception&) {
                    throw syntax_error(1, "strategy key is not a vertex id");
                }
                const int w = to.get<int>();
                if (v < 0 || v >= n || w < 0 || w >= n)
                    throw syntax_error(1, "strategy entry out of range");
                sigma[v] = w;
            }
        };
        read_strategy("even", res.strategy_even, res.has_even_strategy);
        read_strategy("odd", res.strategy_odd, res.has_odd_strategy);
        if (j.contains("algorithm")) res.algorithm = j["algorithm"].get<std::string>();
        return res;
    }

    Scanner sc(text);
    if (!sc.try_word("paritysol")) throw syntax_error(sc.line, "expected 'paritysol' header");
    sc.number();
    sc.expect(';', "expected ';' after the header");
    while (!sc.done()) {
        const int id = static_cast<int>(sc.number());
        const int winner = static_cast<int>(sc.number());
        if (id < 0 || id >= n) throw syntax_error(sc.line, "vertex id out of range");
        if (winner != 0 && winner != 1) throw syntax_error(sc.line, "winner must be 0 or 1");
        (winner == 0 ? res.win_even : res.win_odd).set(id);
        if (!sc.peek_is(';')) {
            const int t = static_cast<int>(sc.number());
            if (t < 0 || t >= n) throw syntax_error(sc.line, "strategy target out of range");
            if (winner == 0) {
                res.strategy_even[id] = t;
                res.has_even_strategy = true;
            } else {
                res.strategy_odd[id] = t;
                res.has_odd_strategy = true;
            }
        }
        sc.expect(';', "expected ';' after the solution line");
    }
    return res;
}

std::string write_dot(const ParityGame& g, const SolveResult* result) {
    std::ostringstream out;
    out << "digraph game {\n";
    for (int v = 0; v < g.node_count(); ++v) {
        out << "  n" << v << " [shape=" << (g.owner(v) == Player::Even ? "diamond" : "box")
            << ", label=\"";
        if (g.has_labels()) out << escape_label(g.label(v)) << "\\n";
        out << g.priority(v) << '"';
        if (result)
            out << ", color=" << (result->win_even.test(v) ? "blue" : "red");
        out << "];\n";
    }
    for (int v = 0; v < g.node_count(); ++v) {
        for (int w : g.successors(v)) {
            out << "  n" << v << " -> n" << w;
            if (result) {
                const bool even_won = result->win_even.test(v);
                const Strategy& sigma = even_won ? result->strategy_even : result->strategy_odd;
                if (g.owner(v) == (even_won ? Player::Even : Player::Odd) && sigma[v] == w)
                    out << " [penwidth=2, style=bold]";
            }
            out << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace pg
