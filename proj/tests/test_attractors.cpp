#include <doctest.h>

#include <random>

#include "pg/attractors.hpp"
#include "pg/generators.hpp"
#include "support.hpp"

using namespace pg;

TEST_CASE("player attractors on the figure-1 game") {
    const ParityGame g = gen_figure1();
    const VertexSet all = g.all_vertices();

    const AttractorResult even = attractor(g, Player::Even, VertexSet(6, {1}), all);
    CHECK(even.set == VertexSet(6, {1, 2}));
    CHECK(even.strategy[2] == 1);

    const AttractorResult odd = attractor(g, Player::Odd, VertexSet(6, {3}), all);
    CHECK(odd.set == VertexSet(6, {3, 4, 5}));

    const AttractorResult same = attractor(g, Player::Even, all, all);
    CHECK(same.set == all);
    CHECK(!strategy_has_entries(same.strategy));

    CHECK_THROWS_AS(attractor(g, Player::Even, VertexSet(6, {0}), VertexSet(6, {1})),
                    base_not_in_context);
}

TEST_CASE("guarded attractor respects the priority guard") {
    const ParityGame g = gen_figure1();

    // v5 has priority 0 < 1 and stays out; v4 joins through its edge to v6
    const AttractorResult r = guarded_attractor(g, 1, VertexSet(6, {5}), g.all_vertices());
    CHECK(r.set == VertexSet(6, {3, 5}));
    CHECK(r.strategy[3] == 5);
    CHECK(r.set == oracle::guarded_closure(g, 1, VertexSet(6, {5}), g.all_vertices()));
}

TEST_CASE("guarded attractor on the figure-6 game") {
    const ParityGame g = gen_figure6();
    const AttractorResult r = guarded_attractor(g, 3, VertexSet(9, {2}), g.all_vertices());
    CHECK(r.set == VertexSet(9, {1, 2}));  // v3 and v2
    CHECK(r.strategy[1] == 2);             // sigma(v2) = v3
}

TEST_CASE("guarded attractor with a vacuous guard saturates on the base") {
    const ParityGame g = gen_figure1();
    const AttractorResult r = guarded_attractor(g, 0, g.all_vertices(), g.all_vertices());
    CHECK(r.set == g.all_vertices());
}

TEST_CASE("guarded attractor validates its base") {
    const ParityGame g = gen_figure1();
    CHECK_THROWS_AS(guarded_attractor(g, 1, VertexSet(6, {4}), g.all_vertices()),
                    base_violates_guard);  // v5 has priority 0
    CHECK_THROWS_AS(guarded_attractor(g, 0, VertexSet(6, {0}), VertexSet(6, {1, 2})),
                    base_violates_guard);
}

TEST_CASE("attractor equals the closure oracle and is a fixpoint") {
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const ParityGame g = gen_random(n, 4, 1, 3, rng());
        const Player player = rng() % 2 ? Player::Odd : Player::Even;

        VertexSet base(n);
        base.set(static_cast<int>(rng() % n));
        if (rng() % 2) base.set(static_cast<int>(rng() % n));

        const AttractorResult r = attractor(g, player, base, g.all_vertices());
        const VertexSet want = oracle::attractor_closure(g, player, base, g.all_vertices());
        CHECK(r.set == want);
        // re-applying the closure from the result adds nothing
        CHECK(oracle::attractor_closure(g, player, r.set, g.all_vertices()) == r.set);

        // the complement induces a total subgame
        const VertexSet rest = g.all_vertices() - r.set;
        if (!rest.empty()) {
            bool total = true;
            rest.for_each([&](int v) {
                bool has = false;
                for (int w : g.successors(v)) has = has || rest.test(w);
                total = total && has;
            });
            CHECK(total);
        }
    }
}

TEST_CASE("guarded attractor equals the closure oracle and obeys the guard") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const ParityGame g = gen_random(n, 4, 1, 3, rng());
        const int k = static_cast<int>(rng() % 4);

        std::vector<int> eligible;
        for (int v = 0; v < n; ++v)
            if (g.priority(v) >= k) eligible.push_back(v);
        if (eligible.empty()) continue;
        VertexSet base(n);
        base.set(eligible[rng() % eligible.size()]);

        const AttractorResult r = guarded_attractor(g, k, base, g.all_vertices());
        CHECK(r.set == oracle::guarded_closure(g, k, base, g.all_vertices()));
        r.set.for_each([&](int v) { CHECK(g.priority(v) >= k); });
    }
}

TEST_CASE("attractor strategy reaches the base within |set| steps") {
    std::mt19937_64 rng(19);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const ParityGame g = gen_random(n, 4, 1, 3, rng());
        const Player player = rng() % 2 ? Player::Odd : Player::Even;
        VertexSet base(n);
        base.set(static_cast<int>(rng() % n));

        const AttractorResult r = attractor(g, player, base, g.all_vertices());
        VertexSet good = base;
        for (int round = 0; round < r.set.count(); ++round) {
            r.set.for_each([&](int v) {
                if (good.test(v)) return;
                if (g.owner(v) == player) {
                    if (good.test(r.strategy[v])) good.set(v);
                } else {
                    bool all = true;
                    for (int w : g.successors(v)) all = all && good.test(w);
                    if (all) good.set(v);
                }
            });
        }
        CHECK(good == r.set);
    }
}
