#include <doctest.h>

#include <random>

#include "pg/generators.hpp"
#include "pg/measures.hpp"
#include "support.hpp"

using namespace pg;

namespace {

Measure make(const MeasureDomain& dom, std::vector<int> odd_entries) {
    Measure m = Measure::zero(dom);
    for (size_t j = 0; j < odd_entries.size(); ++j) m.set_entry(static_cast<int>(j), odd_entries[j]);
    return m;
}

// Figure-4-shaped domain: d = 4, caps n1 = 2, n3 = 1.
MeasureDomain small_domain() { return MeasureDomain(4, {2, 1}); }

}  // namespace

TEST_CASE("lexicographic order with top as maximum") {
    const MeasureDomain dom = small_domain();
    CHECK(cmp_lex(dom, make(dom, {1, 0}), make(dom, {0, 1})) > 0);
    CHECK(cmp_lex(dom, make(dom, {2, 0}), Measure::top()) < 0);
    CHECK(cmp_lex(dom, Measure::top(), Measure::top()) == 0);
    CHECK_THROWS_AS(cmp_lex(dom, make(dom, {1, 0}), Measure::zero(MeasureDomain(2, {5}))),
                    domain_mismatch);
}

TEST_CASE("prefix comparison") {
    const MeasureDomain dom = small_domain();
    CHECK(cmp_upto(dom, make(dom, {2, 0}), make(dom, {2, 1}), 1) == 0);
    CHECK(cmp_upto(dom, make(dom, {1, 2}), make(dom, {2, 0}), 1) < 0);
    CHECK(cmp_upto(dom, make(dom, {2, 0}), Measure::top(), 0) < 0);
    CHECK_THROWS_AS(cmp_upto(dom, make(dom, {0, 0}), make(dom, {0, 0}), 4), position_out_of_range);
}

TEST_CASE("prefix comparison at the last position is the full order") {
    const MeasureDomain dom = small_domain();
    std::vector<Measure> all = oracle::enumerate_domain(dom);
    all.push_back(Measure::top());
    for (const Measure& a : all)
        for (const Measure& b : all)
            CHECK(cmp_upto(dom, a, b, dom.tuple_length() - 1) == cmp_lex(dom, a, b));
}

TEST_CASE("saturation") {
    const MeasureDomain dom = small_domain();
    CHECK(is_saturated(dom, make(dom, {2, 0}), 1));
    CHECK(!is_saturated(dom, make(dom, {0, 0}), 1));
    CHECK_THROWS_AS(is_saturated(dom, Measure::top(), 1), top_measure);
    CHECK_THROWS_AS(is_saturated(dom, make(dom, {0, 0}), 2), even_position);

    const MeasureDomain fig1(gen_figure1());
    CHECK(is_saturated(fig1, make(fig1, {1, 2}), 3));  // n3 = 2
}

TEST_CASE("per-edge update on the figure-4 game") {
    const ParityGame g = gen_figure4();
    const MeasureDomain dom(g);
    REQUIRE(dom.cap(0) == 2);  // two priority-1 vertices
    REQUIRE(dom.cap(1) == 1);  // one priority-3 vertex
    MeasureTable rho(dom, g.node_count());

    rho.assign(1, make(dom, {2, 0}));  // rho(v2) = (0,2,0,0)

    // odd priority 3: least strict increase of the prefix
    CHECK(prog(dom, rho, 3, 1, g) == make(dom, {2, 1}));
    // odd priority 1 with position 1 saturated: carry escapes
    CHECK(prog(dom, rho, 0, 1, g).is_top());
    // even priority keeps the truncated value
    rho.assign(2, Measure::zero(dom));
    CHECK(prog(dom, rho, 1, 2, g) == Measure::zero(dom));

    CHECK_THROWS_AS(prog(dom, rho, 0, 3, g), not_a_successor);
}

TEST_CASE("update against a top successor is top for both parities") {
    const ParityGame g = gen_figure4();
    const MeasureDomain dom(g);
    MeasureTable rho(dom, g.node_count());
    rho.assign(2, Measure::top());
    CHECK(prog(dom, rho, 1, 2, g).is_top());  // even priority at v2
    rho.assign(0, Measure::top());
    CHECK(prog(dom, rho, 2, 0, g).is_top());  // odd priority at v3
}

TEST_CASE("figure-4 lifting order reproduces the known table") {
    const ParityGame g = gen_figure4();
    const MeasureDomain dom(g);
    MeasureTable rho(dom, g.node_count());

    for (int v : {0, 2, 1, 3, 0}) rho.assign(v, lift(dom, rho, v, g));

    CHECK(rho.at(0).is_top());
    CHECK(rho.at(1) == make(dom, {2, 0}));
    CHECK(rho.at(2) == make(dom, {2, 0}));
    CHECK(rho.at(3) == make(dom, {2, 1}));
}

TEST_CASE("lift is idempotent at a fixpoint value") {
    const ParityGame g = gen_figure1();
    const MeasureDomain dom(g);
    MeasureTable rho = oracle::exhaustive_fixpoint(g, dom);
    for (int v = 0; v < g.node_count(); ++v) CHECK(lift(dom, rho, v, g) == rho.at(v));
}

TEST_CASE("figure-1 fixpoint puts top exactly on the odd region") {
    const ParityGame g = gen_figure1();
    const MeasureDomain dom(g);
    MeasureTable rho = oracle::exhaustive_fixpoint(g, dom);
    for (int v = 0; v < 6; ++v) CHECK(rho.at(v).is_top() == (v >= 3));
}

TEST_CASE("per-edge update minimality against domain enumeration") {
    std::mt19937_64 rng(2026);
    int cases = 0;
    while (cases < 10000) {
        const int d = 2 + static_cast<int>(rng() % 4);  // 2..5
        std::vector<int> caps(d / 2);
        for (int& c : caps) c = static_cast<int>(rng() % 4);
        const MeasureDomain dom(d, caps);

        // two-vertex game: v0 with a random priority, edge to v1
        const int p = static_cast<int>(rng() % d);
        const ParityGame g =
            build_game({Player::Even, Player::Even}, {p, 0}, {{1}, {1}});
        MeasureTable rho(dom, 2);

        Measure target;
        if (rng() % 8 == 0) {
            target = Measure::top();
        } else {
            target = Measure::zero(dom);
            for (int j = 0; j < dom.odd_slots(); ++j)
                target.set_entry(j, static_cast<int>(rng() % (dom.cap(j) + 1)));
        }
        rho.assign(1, target);

        const Measure got = prog(dom, rho, 0, 1, g);
        const auto want = oracle::least_prog(dom, p, target);
        if (want) {
            CHECK(got == *want);
        } else {
            CHECK(got.is_top());
        }
        ++cases;
    }
}

TEST_CASE("updates and lifts are monotone and lifts inflationary") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 300; ++iter) {
        const ParityGame g = gen_random(5, 4, 1, 3, rng());
        const MeasureDomain dom(g);
        MeasureTable lo(dom, 5), hi(dom, 5);
        const std::vector<Measure> all = oracle::enumerate_domain(dom);
        for (int v = 0; v < 5; ++v) {
            Measure a = all[rng() % all.size()];
            Measure b = all[rng() % all.size()];
            if (rng() % 10 == 0) b = Measure::top();
            if (cmp_lex(dom, a, b) > 0) std::swap(a, b);
            lo.assign(v, a);
            hi.assign(v, b);
        }
        for (int v = 0; v < 5; ++v) {
            for (int w : g.successors(v))
                CHECK(cmp_lex(dom, prog(dom, lo, v, w, g), prog(dom, hi, v, w, g)) <= 0);
            CHECK(cmp_lex(dom, lift(dom, lo, v, g), lift(dom, hi, v, g)) <= 0);
            CHECK(cmp_lex(dom, lift(dom, lo, v, g), lo.at(v)) >= 0);
            CHECK(cmp_lex(dom, lift(dom, hi, v, g), hi.at(v)) >= 0);
        }
    }
}

TEST_CASE("even-priority updates agree on the prefix") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        const ParityGame g = gen_random(5, 4, 1, 3, rng());
        const MeasureDomain dom(g);
        MeasureTable rho(dom, 5);
        const std::vector<Measure> all = oracle::enumerate_domain(dom);
        for (int v = 0; v < 5; ++v) rho.assign(v, all[rng() % all.size()]);
        for (int v = 0; v < 5; ++v) {
            if (g.priority(v) % 2 != 0) continue;
            for (int w : g.successors(v))
                CHECK(cmp_upto(dom, prog(dom, rho, v, w, g), rho.at(w), g.priority(v)) == 0);
        }
    }
}

TEST_CASE("rendering") {
    const MeasureDomain dom = small_domain();
    CHECK(make(dom, {1, 0}).render(dom) == "(0,1,0,0)");
    CHECK(Measure::top().render(dom) == "T");
}
