#pragma once

#include <vector>

#include "stablematch/da.hpp"
#include "stablematch/instance.hpp"
#include "stablematch/matching.hpp"

namespace stablematch {

// A rotation: cyclic list of (woman, man) pairs, with m_i matched to w_i
// before elimination and to w_{i+1} after. Stored in canonical form (rotated
// so the least man index comes first); cyclic order is otherwise preserved.
struct Rotation {
    std::vector<std::pair<int, int>> pairs;  // (woman, man)

    static Rotation from_cycle(std::vector<std::pair<int, int>> pairs);

    int size() const { return (int)pairs.size(); }
    bool operator==(const Rotation&) const = default;
    bool operator<(const Rotation& o) const { return pairs < o.pairs; }
};

// Applies rho to mu: each m_i moves from w_i to w_{i+1}. Throws
// std::invalid_argument unless every (w_i, m_i) is matched in mu.
Matching eliminate(const Matching& mu, const Rotation& rho);

// Rotations exposed in the stable matching mu, i.e. whose elimination yields a
// matching covering mu in the dominance order. Detected by running a
// rejection chain from each matched woman and keeping chains that close at
// their start without any woman receiving two proposals she prefers to her
// mu-partner. Sorted canonically, duplicates merged.
std::vector<Rotation> exposed_rotations(const Instance& inst, const Matching& mu);

enum class EdgeType { Type1 = 1, Type2 = 2 };

struct RotationEdge {
    int from;
    int to;
    EdgeType type;
    bool operator==(const RotationEdge&) const = default;
    bool operator<(const RotationEdge& o) const {
        if (from != o.from) return from < o.from;
        if (to != o.to) return to < o.to;
        return (int)type < (int)o.type;
    }
};

struct RotationDigraph {
    std::vector<Rotation> rotations;  // in discovery (= a valid elimination) order
    std::vector<RotationEdge> edges;  // sorted, deduplicated
    Matching man_optimal;
    Matching woman_optimal;
    ExecutionStats stats;
};

// Which still-active woman seeds the next rejection chain. Lowest is the
// default; the digraph must not depend on the choice (tested).
enum class SeedRule { LowestIndex, HighestIndex };

// Builds the full rotation poset digraph in O(n^2) total work by chaining
// warm-started rejection chains and recording type-1/type-2 predecessor edges
// as rotations are discovered.
RotationDigraph find_rotation_graph(const Instance& inst,
                                    SeedRule rule = SeedRule::LowestIndex);

// Reconstructs predecessor edges from the finished rotation list by scanning
// labelled preference lists (one pass per man). Buggy reproduces a subtle
// mistake: it accepts every type-2 label encountered after a type-1 label,
// including stale labels lying beyond the last woman the man is ever moved
// to, which fabricates reversed edges. Corrected stops honouring type-2
// labels past that end marker. Edges are (from, to) rotation indices into
// g.rotations, untyped, sorted.
enum class GiVariant { Buggy, Corrected };

std::vector<std::pair<int, int>> gi_predecessor_edges(const Instance& inst,
                                                      const RotationDigraph& g,
                                                      GiVariant variant);

}  // namespace stablematch
