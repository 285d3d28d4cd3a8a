#pragma once

#include <string>

#include <json.hpp>

#include "stablematch/da.hpp"
#include "stablematch/instance.hpp"
#include "stablematch/lattice.hpp"
#include "stablematch/matching.hpp"
#include "stablematch/rotations.hpp"

namespace stablematch {

// All JSON exports use nlohmann::ordered_json so key order is stable across
// runs, and 1-based agent indices to match the text format. Rotation indices
// refer to positions in the exported "rotations" array.

nlohmann::ordered_json instance_to_json(const Instance& inst);
nlohmann::ordered_json matching_to_json(const Matching& mu);
nlohmann::ordered_json stats_to_json(const ExecutionStats& stats);
nlohmann::ordered_json rotation_to_json(const Rotation& rho);
nlohmann::ordered_json digraph_to_json(const RotationDigraph& g, bool with_stats = false);
nlohmann::ordered_json lattice_to_json(const StableLattice& lat);

// DOT graph of the rotation digraph: nodes labelled "w1m1->w2m2->...",
// edges labelled with type=1 / type=2.
std::string digraph_to_dot(const RotationDigraph& g);

// DOT Hasse diagram of the dominance order, nodes labelled with the matching.
std::string lattice_to_dot(const StableLattice& lat);

// One matched pair per line: "m1 -- w2". Singles appear as "m3 -- -" and
// "- -- w4". parse_matching accepts this format ('#' comments, blank lines
// and single lines ignored) and throws ParseError on malformed input.
std::string format_matching(const Matching& mu);
Matching parse_matching(const std::string& text, int num_men, int num_women);

// Compact one-line form "m1:w2 m2:- ..." used in human-readable listings.
std::string matching_brief(const Matching& mu);

}  // namespace stablematch
