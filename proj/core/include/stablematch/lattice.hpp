#pragma once

#include <vector>

#include "stablematch/instance.hpp"
#include "stablematch/matching.hpp"

namespace stablematch {

struct BlockingPair {
    int man;
    int woman;
    bool operator==(const BlockingPair&) const = default;
    bool operator<(const BlockingPair& o) const {
        return man != o.man ? man < o.man : woman < o.woman;
    }
};

// All blocking pairs of mu, sorted by (man, woman). (m, w) blocks when the
// pair is mutually acceptable and each strictly prefers the other to their
// current situation (being single is worse than any listed partner).
// Throws std::invalid_argument if mu is structurally invalid for inst
// (size mismatch, inconsistent cross-references, unacceptable partners).
std::vector<BlockingPair> blocking_pairs(const Instance& inst, const Matching& mu);

inline bool is_stable(const Instance& inst, const Matching& mu) {
    return blocking_pairs(inst, mu).empty();
}

// Woman-dominance comparison of two stable matchings: a is below b when every
// woman weakly prefers her b-partner (man-optimal = bottom). Matchings with
// different matched sets are Incomparable.
enum class Dominance { Equal, BelowStrict, AboveStrict, Incomparable };

Dominance dominance(const Instance& inst, const Matching& a, const Matching& b);

// Lattice operations under woman-dominance: join gives every woman the better
// of her two partners, meet the worse. For stable a, b the result is again a
// (stable) matching; a conflicting assignment throws std::invalid_argument.
Matching join(const Instance& inst, const Matching& a, const Matching& b);
Matching meet(const Instance& inst, const Matching& a, const Matching& b);

struct BruteforceOptions {
    int size_guard = 8;  // refuse when max(num_men, num_women) exceeds this
    bool force = false;
};

// Independent oracle: enumerates every stable matching by backtracking over
// men with incremental blocking-pair pruning. No deferred acceptance, no
// rotations. Results sorted by woman-partner vector. Throws
// std::invalid_argument when the size guard trips and force is off.
std::vector<Matching> enumerate_stable_bruteforce(const Instance& inst,
                                                  BruteforceOptions opts = {});

// Explicit dominance order over a set of stable matchings.
struct StableLattice {
    std::vector<Matching> elements;               // sorted canonically
    int bottom = -1;                              // man-optimal index
    int top = -1;                                 // woman-optimal index
    std::vector<std::vector<char>> leq;           // leq[a][b]: a below-or-equal b
    std::vector<std::pair<int, int>> cover_edges; // (a, b): b covers a
};

StableLattice build_lattice(const Instance& inst, std::vector<Matching> elements);

// Every maximal chain bottom -> top along cover edges, as index sequences,
// in lexicographic order.
std::vector<std::vector<int>> maximal_chains(const StableLattice& lat);

}  // namespace stablematch
