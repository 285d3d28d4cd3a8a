#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "stablematch/rotations.hpp"

namespace stablematch {

// A downward-closed set of rotation indices, kept sorted ascending.
using ClosedSet = std::vector<int>;

// True iff `set` (indices into g.rotations) contains every predecessor of
// each of its members.
bool is_closed(const RotationDigraph& g, const ClosedSet& set);

struct EnumerateResult {
    std::uint64_t count = 0;  // sets emitted (i.e. min(total, cap))
    bool truncated = false;   // true when the cap cut the enumeration short
};

// Streams every closed set of g to `emit`, at most `cap` of them (cap 0 means
// no cap). Along every branch of the enumeration a set is emitted before all
// of its supersets. Order is deterministic.
EnumerateResult enumerate_closed_sets(const RotationDigraph& g,
                                      const std::function<void(const ClosedSet&)>& emit,
                                      std::uint64_t cap = 0);

// Convenience: materializes the whole family (throws when cap trips).
std::vector<ClosedSet> all_closed_sets(const RotationDigraph& g, std::uint64_t cap = 0);

// The stable matching reached by eliminating the rotations of `set` from the
// man-optimal matching in a topological order. Throws std::invalid_argument
// when `set` is not closed.
Matching matching_of_closed_set(const RotationDigraph& g, const ClosedSet& set);

// Inverse of the above: rho is in the set iff every woman in rho ranks her
// mu-partner at or above the man rho moves her to. Throws
// std::invalid_argument when mu does not correspond to a closed set.
ClosedSet closed_set_of_matching(const Instance& inst, const RotationDigraph& g,
                                 const Matching& mu);

// `order` must be a permutation of 0..k-1 putting predecessors first.
bool is_topological_sort(const RotationDigraph& g, const std::vector<int>& order);

// All topological sorts of g, lexicographically ordered, at most `cap`
// (0 = no cap; second member of the result reports truncation).
std::pair<std::vector<std::vector<int>>, bool> all_topological_sorts(
    const RotationDigraph& g, std::uint64_t cap = 0);

// Reachability pairs (u, v), u != v, sorted. Throws std::invalid_argument if
// the digraph has a cycle.
std::vector<std::pair<int, int>> transitive_closure(const RotationDigraph& g);

}  // namespace stablematch
