#include "stablematch/serialize.hpp"

#include <sstream>

namespace stablematch {

using nlohmann::ordered_json;

namespace {

ordered_json one_based(const std::vector<int>& xs) {
    ordered_json arr = ordered_json::array();
    for (int x : xs) arr.push_back(x + 1);
    return arr;
}

ordered_json partner_array(const std::vector<int>& side) {
    // 1-based partner per agent, null when single.
    ordered_json arr = ordered_json::array();
    for (int p : side)
        arr.push_back(p == kUnmatched ? ordered_json(nullptr) : ordered_json(p + 1));
    return arr;
}

}  // namespace

ordered_json instance_to_json(const Instance& inst) {
    ordered_json j;
    j["men"] = inst.num_men;
    j["women"] = inst.num_women;
    ordered_json mp = ordered_json::array(), wp = ordered_json::array();
    for (const auto& list : inst.men_prefs) mp.push_back(one_based(list));
    for (const auto& list : inst.women_prefs) wp.push_back(one_based(list));
    j["men_prefs"] = std::move(mp);
    j["women_prefs"] = std::move(wp);
    return j;
}

ordered_json matching_to_json(const Matching& mu) {
    ordered_json j;
    ordered_json pairs = ordered_json::array();
    for (int m = 0; m < mu.num_men(); ++m)
        if (mu.man_to_woman[m] != kUnmatched)
            pairs.push_back({m + 1, mu.man_to_woman[m] + 1});
    j["pairs"] = std::move(pairs);
    ordered_json um = ordered_json::array(), uw = ordered_json::array();
    for (int m = 0; m < mu.num_men(); ++m)
        if (mu.man_to_woman[m] == kUnmatched) um.push_back(m + 1);
    for (int w = 0; w < mu.num_women(); ++w)
        if (mu.woman_to_man[w] == kUnmatched) uw.push_back(w + 1);
    j["unmatched_men"] = std::move(um);
    j["unmatched_women"] = std::move(uw);
    return j;
}

ordered_json stats_to_json(const ExecutionStats& stats) {
    ordered_json j;
    j["proposals"] = stats.proposals;
    j["rejections"] = stats.rejections;
    j["rotation_events"] = stats.rotation_events;
    j["predecessor_edge_events"] = stats.predecessor_edge_events;
    j["total"] = stats.total();
    return j;
}

ordered_json rotation_to_json(const Rotation& rho) {
    ordered_json arr = ordered_json::array();
    for (auto [w, m] : rho.pairs) arr.push_back({{"w", w + 1}, {"m", m + 1}});
    return arr;
}

ordered_json digraph_to_json(const RotationDigraph& g, bool with_stats) {
    ordered_json j;
    ordered_json rots = ordered_json::array();
    for (const auto& rho : g.rotations) rots.push_back(rotation_to_json(rho));
    j["rotations"] = std::move(rots);
    ordered_json edges = ordered_json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"from", e.from}, {"to", e.to}, {"type", (int)e.type}});
    j["edges"] = std::move(edges);
    j["man_optimal"] = matching_to_json(g.man_optimal);
    j["woman_optimal"] = matching_to_json(g.woman_optimal);
    if (with_stats) j["stats"] = stats_to_json(g.stats);
    return j;
}

ordered_json lattice_to_json(const StableLattice& lat) {
    ordered_json j;
    ordered_json elems = ordered_json::array();
    for (const auto& mu : lat.elements) elems.push_back(matching_to_json(mu));
    j["matchings"] = std::move(elems);
    j["bottom"] = lat.bottom;
    j["top"] = lat.top;
    ordered_json covers = ordered_json::array();
    for (auto [a, b] : lat.cover_edges) covers.push_back({a, b});
    j["cover_edges"] = std::move(covers);
    return j;
}

namespace {

std::string rotation_label(const Rotation& rho) {
    std::ostringstream out;
    for (size_t i = 0; i < rho.pairs.size(); ++i) {
        if (i) out << "->";
        out << 'w' << rho.pairs[i].first + 1 << 'm' << rho.pairs[i].second + 1;
    }
    return out.str();
}

}  // namespace

std::string digraph_to_dot(const RotationDigraph& g) {
    std::ostringstream out;
    out << "digraph rotations {\n";
    for (size_t i = 0; i < g.rotations.size(); ++i)
        out << "  r" << i << " [label=\"" << rotation_label(g.rotations[i]) << "\"];\n";
    for (const auto& e : g.edges)
        out << "  r" << e.from << " -> r" << e.to << " [label=\"type=" << (int)e.type
            << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string lattice_to_dot(const StableLattice& lat) {
    std::ostringstream out;
    out << "digraph lattice {\n  rankdir=BT;\n";
    for (size_t i = 0; i < lat.elements.size(); ++i)
        out << "  s" << i << " [label=\"" << matching_brief(lat.elements[i]) << "\"];\n";
    for (auto [a, b] : lat.cover_edges) out << "  s" << a << " -> s" << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string format_matching(const Matching& mu) {
    std::ostringstream out;
    for (int m = 0; m < mu.num_men(); ++m)
        if (mu.man_to_woman[m] != kUnmatched)
            out << 'm' << m + 1 << " -- w" << mu.man_to_woman[m] + 1 << "\n";
    for (int m = 0; m < mu.num_men(); ++m)
        if (mu.man_to_woman[m] == kUnmatched) out << 'm' << m + 1 << " -- -\n";
    for (int w = 0; w < mu.num_women(); ++w)
        if (mu.woman_to_man[w] == kUnmatched) out << "- -- w" << w + 1 << "\n";
    return out.str();
}

Matching parse_matching(const std::string& text, int num_men, int num_women) {
    Matching mu(num_men, num_women);
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
        std::istringstream line(raw);
        std::string lhs, sep, rhs;
        if (!(line >> lhs)) continue;
        if (!(line >> sep >> rhs) || sep != "--")
            throw ParseError(lineno, "expected '<man> -- <woman>'");
        std::string extra;
        if (line >> extra) throw ParseError(lineno, "trailing tokens");
        if (lhs == "-" || rhs == "-") continue;  // explicit single, nothing to record
        auto agent = [&](const std::string& tok, char tag, int limit) {
            if (tok.size() < 2 || tok[0] != tag)
                throw ParseError(lineno, "expected '" + std::string(1, tag) + "<index>'");
            int v = 0;
            try {
                size_t used = 0;
                v = std::stoi(tok.substr(1), &used);
                if (used + 1 != tok.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError(lineno, "bad agent token '" + tok + "'");
            }
            if (v < 1 || v > limit)
                throw ParseError(lineno, "agent " + tok + " out of range");
            return v - 1;
        };
        int m = agent(lhs, 'm', num_men);
        int w = agent(rhs, 'w', num_women);
        if (mu.man_to_woman[m] != kUnmatched || mu.woman_to_man[w] != kUnmatched)
            throw ParseError(lineno, "agent matched twice");
        mu.match(m, w);
    }
    return mu;
}

std::string matching_brief(const Matching& mu) {
    std::ostringstream out;
    for (int m = 0; m < mu.num_men(); ++m) {
        if (m) out << ' ';
        out << 'm' << m + 1 << ':';
        if (mu.man_to_woman[m] == kUnmatched)
            out << '-';
        else
            out << 'w' << mu.man_to_woman[m] + 1;
    }
    return out.str();
}

}  // namespace stablematch
