#include <doctest.h>

#include "stablematch/da.hpp"
#include "stablematch/lattice.hpp"
#include "stablematch/serialize.hpp"
#include "test_support.hpp"

using namespace stablematch;

TEST_CASE("mpda finds the man-optimal matching of the fixtures") {
    CHECK(mpda(ts::load_fixture("chain3.txt")).matching == ts::mk({1, 2, 3}));
    CHECK(mpda(ts::load_fixture("poset6.txt")).matching == ts::mk({1, 2, 3, 4, 5, 6}));
    CHECK(mpda(ts::load_fixture("preds5.txt")).matching == ts::mk({1, 2, 3, 4, 5}));
}

TEST_CASE("mpda handles empty and lopsided instances") {
    Instance empty;
    CHECK(mpda(empty).matching == Matching(0, 0));

    // Two men compete for one woman; she takes her favourite.
    Instance inst = parse_instance("men: 2\nwomen: 1\nm1: 1\nm2: 1\nw1: 2 1\n");
    CHECK(mpda(inst).matching == ts::mk({0, 1}, 1));

    Instance loners = parse_instance("men: 2\nwomen: 2\nm1:\nm2:\nw1:\nw2:\n");
    CHECK(mpda(loners).matching == Matching(2, 2));
}

TEST_CASE("mpda records rejections as the women above each man's match") {
    Instance inst = ts::load_fixture("poset6.txt");
    DAResult res = mpda(inst);
    RankTable ranks(inst);
    for (int m = 0; m < inst.num_men; ++m) {
        int matched = res.matching.man_to_woman[m];
        std::vector<int> above;
        for (int w : inst.men_prefs[m]) {
            if (w == matched) break;
            above.push_back(w);
        }
        std::vector<int> got = res.rejections[m];
        std::sort(got.begin(), got.end());
        std::sort(above.begin(), above.end());
        CHECK(got == above);
    }
    CHECK(res.stats.proposals >= 6);
    CHECK(res.stats.rotation_events == 0);
}

TEST_CASE("queue discipline does not change the outcome") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Instance inst = gen_random(6, 6, seed % 2 ? 0.5 : 1.0, seed);
        CHECK(mpda(inst, QueueDiscipline::FIFO).matching ==
              mpda(inst, QueueDiscipline::LIFO).matching);
    }
}

TEST_CASE("truncate keeps each side's lists cut at the matching") {
    Instance inst = ts::load_fixture("poset6.txt");
    Matching mu0 = mpda(inst).matching;

    Instance cut = truncate(inst, mu0, /*rejecting_woman=*/0);
    CHECK(cut.women_prefs[0] == std::vector<int>{5, 1});  // w1 keeps m6, m2 only
    // m1 keeps his full list even though w1 just dropped him: no re-normalization.
    CHECK(cut.men_prefs[0] == std::vector<int>{0, 1, 3});
    CHECK(cut.men_prefs[1] == std::vector<int>{1, 0, 2, 5});  // m2 matched to his top

    // Unmatched men lose their whole list.
    Instance one = parse_instance("men: 2\nwomen: 1\nm1: 1\nm2: 1\nw1: 2 1\n");
    Instance cut2 = truncate(one, mpda(one).matching);
    CHECK(cut2.men_prefs[0].empty());
    CHECK(cut2.men_prefs[1] == std::vector<int>{0});
}

TEST_CASE("mpda on a woman-optimal truncation reproduces the woman-optimal matching") {
    Instance inst = ts::load_fixture("poset6.txt");
    Matching wosm = ts::mk({2, 6, 4, 5, 3, 1});
    REQUIRE(is_stable(inst, wosm));
    CHECK(mpda(truncate(inst, wosm)).matching == wosm);
}

TEST_CASE("rejection chain that closes at its start yields the covering matching") {
    Instance inst = ts::load_fixture("poset6.txt");
    RejectionChain c = rejection_chain(inst, ts::mk({1, 2, 3, 4, 5, 6}), 0);
    CHECK(c.entries == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
    CHECK(c.terminal == ChainTerminal::ClosedAtStart);
    CHECK(c.outcome == ts::mk({2, 1, 3, 4, 5, 6}));
    CHECK(c.good_proposal_max == 1);
}

TEST_CASE("rejection chain can exhaust a man and leave an unstable outcome") {
    Instance inst = ts::load_fixture("poset6.txt");
    RejectionChain c = rejection_chain(inst, ts::mk({2, 1, 3, 4, 5, 6}), 1);
    CHECK(c.entries ==
          std::vector<std::pair<int, int>>{{1, 0}, {3, 3}, {4, 4}, {2, 2}, {3, 0}});
    CHECK(c.terminal == ChainTerminal::ManExhausted);
    CHECK(c.terminal_agent == 0);
    CHECK(c.good_proposal_max == 2);  // w4 heard from both m1 and m3
    CHECK(c.outcome == ts::mk({0, 1, 4, 5, 3, 6}));
    CHECK(!is_stable(inst, c.outcome));
}

TEST_CASE("rejection chain from the middle of the order reaches the top") {
    Instance inst = ts::load_fixture("poset6.txt");
    RejectionChain c = rejection_chain(inst, ts::mk({2, 1, 4, 5, 3, 6}), 0);
    CHECK(c.entries == std::vector<std::pair<int, int>>{{0, 1}, {5, 5}});
    CHECK(c.terminal == ChainTerminal::ClosedAtStart);
    CHECK(c.outcome == ts::mk({2, 6, 4, 5, 3, 1}));
    CHECK(c.good_proposal_max == 1);
}

TEST_CASE("a closed chain may still fail the covering criterion") {
    Instance inst = ts::load_fixture("chain3.txt");
    RejectionChain c = rejection_chain(inst, ts::mk({1, 2, 3}), 0);
    CHECK(c.entries == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {2, 2}});
    CHECK(c.terminal == ChainTerminal::ClosedAtStart);
    CHECK(c.outcome == ts::mk({2, 3, 1}));
    CHECK(c.good_proposal_max == 2);  // w2 heard from m1 and m3: not a cover
    CHECK(is_stable(inst, c.outcome));
}

TEST_CASE("warm-started chains agree with a cold run on the truncated instance") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Instance inst = gen_random(6, 6, seed % 2 ? 0.6 : 1.0, seed);
        for (const Matching& mu : enumerate_stable_bruteforce(inst)) {
            for (int w = 0; w < inst.num_women; ++w) {
                if (mu.woman_to_man[w] == kUnmatched) continue;
                RejectionChain c = rejection_chain(inst, mu, w);
                CHECK(mpda(truncate(inst, mu, w)).matching == c.outcome);
                CHECK((c.terminal == ChainTerminal::ClosedAtStart) ==
                      is_stable(inst, c.outcome));
                CHECK(!c.entries.empty());
                CHECK(c.entries.front().first == w);
                ++checked;
            }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("execution stats serialize with all four counters") {
    DAResult res = mpda(ts::load_fixture("poset6.txt"));
    auto j = stats_to_json(res.stats);
    CHECK(j["proposals"] == res.stats.proposals);
    CHECK(j["rejections"] == res.stats.rejections);
    CHECK(j["rotation_events"] == 0);
    CHECK(j["predecessor_edge_events"] == 0);
    CHECK(j["total"] == res.stats.total());
}
