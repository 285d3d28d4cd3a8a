#pragma once

#include <cstdint>
#include <vector>

#include "stablematch/instance.hpp"
#include "stablematch/matching.hpp"

namespace stablematch {

// Cumulative operation counters. rotation_events / predecessor_edge_events are
// only bumped by the rotation-digraph construction; the plain engine leaves
// them at zero.
struct ExecutionStats {
    std::uint64_t proposals = 0;
    std::uint64_t rejections = 0;
    std::uint64_t rotation_events = 0;
    std::uint64_t predecessor_edge_events = 0;

    std::uint64_t total() const {
        return proposals + rejections + rotation_events + predecessor_edge_events;
    }
};

// Which free man proposes next. The outcome is discipline-independent; LIFO
// exists to let tests check exactly that.
enum class QueueDiscipline { FIFO, LIFO };

struct DAResult {
    Matching matching;  // man-optimal stable matching
    // rejections[m] = women that rejected m (immediately or by later dumping
    // him), in proposal order. Equivalently: every woman strictly above m's
    // final match on his list.
    std::vector<std::vector<int>> rejections;
    ExecutionStats stats;
};

// Man-proposing deferred acceptance. Handles empty lists, unequal sides and
// non-mutual entries (a woman only accepts men present on her own list).
DAResult mpda(const Instance& inst, QueueDiscipline discipline = QueueDiscipline::FIFO);

// Preference truncation relative to a stable matching mu:
//  - every man matched in mu loses all women strictly above his match;
//  - every unmatched man loses his whole list;
//  - every woman matched in mu loses all men strictly below her match;
//  - rejecting_woman (if >= 0) additionally removes her mu-partner, i.e. keeps
//    only men strictly above him.
// Lists are deliberately NOT re-normalized: the rejecting woman's old partner
// keeps her on his list even though she no longer lists him.
Instance truncate(const Instance& inst, const Matching& mu, int rejecting_woman = -1);

enum class ChainTerminal {
    ClosedAtStart,          // chain returned to the rejecting woman: new stable matching
    AbsorbedBySingleWoman,  // a woman unmatched in mu accepted: outcome unstable
    ManExhausted,           // a displaced man ran out of list: outcome unstable
};

struct RejectionChain {
    // entries[i] = (woman, the man displaced from her). entries[0] is the
    // rejecting woman paired with her mu-partner. Women may repeat.
    std::vector<std::pair<int, int>> entries;
    ChainTerminal terminal = ChainTerminal::ClosedAtStart;
    int terminal_agent = -1;  // single woman / exhausted man for the last two terminals
    Matching outcome;         // final state, stable iff terminal == ClosedAtStart
    // Max over women of proposals received from men they strictly prefer to
    // their mu-partner (any acceptable man, for women unmatched in mu).
    int good_proposal_max = 0;
    ExecutionStats stats;
};

// Simulates MPDA on truncate(inst, mu, w) warm-started from mu with w's
// partner as the only free man. mu must be stable and w matched in it.
RejectionChain rejection_chain(const Instance& inst, const Matching& mu, int w);

}  // namespace stablematch
