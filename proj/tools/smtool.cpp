// Command-line front end for the stable-matching library: solving, rotation
// digraphs, lattice enumeration, instance generation, verification, micro
// benchmarks.
//
// Exit codes: 0 success, 1 semantic "no" (e.g. unstable matching),
// 2 bad input, 3 output truncated by a cap.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "stablematch/da.hpp"
#include "stablematch/instance.hpp"
#include "stablematch/lattice.hpp"
#include "stablematch/poset.hpp"
#include "stablematch/rotations.hpp"
#include "stablematch/serialize.hpp"

using namespace stablematch;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitTruncated = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream out;
        out << std::cin.rdbuf();
        return out.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

Instance load_instance(const std::string& path) {
    std::vector<std::string> warnings;
    Instance inst = parse_instance(read_input(path), &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    return inst;
}

int cmd_solve(const std::string& path, const std::string& side, const std::string& format) {
    Instance inst = load_instance(path);
    Matching mu;
    if (side == "man") {
        mu = mpda(inst).matching;
    } else {
        mu = mpda(swap_roles(inst)).matching;
        std::swap(mu.man_to_woman, mu.woman_to_man);
    }
    if (format == "json")
        std::cout << matching_to_json(mu).dump(2) << "\n";
    else
        std::cout << format_matching(mu);
    return kExitOk;
}

int cmd_export(const std::string& path) {
    std::cout << instance_to_json(load_instance(path)).dump(2) << "\n";
    return kExitOk;
}

int cmd_rotations(const std::string& path, const std::string& format, bool stats,
                  bool gi_compare) {
    Instance inst = load_instance(path);
    RotationDigraph g = find_rotation_graph(inst);
    if (gi_compare) {
        auto corrected = gi_predecessor_edges(inst, g, GiVariant::Corrected);
        auto buggy = gi_predecessor_edges(inst, g, GiVariant::Buggy);
        std::set<std::pair<int, int>> main_edges;
        for (const auto& e : g.edges) main_edges.insert({e.from, e.to});
        auto print = [](const char* name, const std::vector<std::pair<int, int>>& es) {
            std::cout << name << ":";
            for (auto [a, b] : es) std::cout << " " << a << "->" << b;
            std::cout << "\n";
        };
        print("main", {main_edges.begin(), main_edges.end()});
        print("corrected", corrected);
        print("buggy", buggy);
        std::cout << "corrected_matches_main: "
                  << (corrected == std::vector<std::pair<int, int>>(main_edges.begin(),
                                                                    main_edges.end())
                          ? "yes"
                          : "no")
                  << "\n";
        return kExitOk;
    }
    if (format == "json") {
        std::cout << digraph_to_json(g, stats).dump(2) << "\n";
    } else {
        std::cout << digraph_to_dot(g);
        if (stats) std::cerr << stats_to_json(g.stats).dump() << "\n";
    }
    return kExitOk;
}

int cmd_lattice(const std::string& path, std::uint64_t max_output, bool oracle, bool force,
                const std::string& format) {
    Instance inst = load_instance(path);
    RotationDigraph g = find_rotation_graph(inst);
    std::vector<ClosedSet> family;
    auto res =
        enumerate_closed_sets(g, [&](const ClosedSet& s) { family.push_back(s); }, max_output);
    // Size, then lexicographic on rotation indices: a linear extension of the
    // subset (= dominance) order.
    std::sort(family.begin(), family.end(), [](const ClosedSet& a, const ClosedSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<Matching> matchings;
    matchings.reserve(family.size());
    for (const auto& s : family) matchings.push_back(matching_of_closed_set(g, s));

    if (oracle) {
        BruteforceOptions opts;
        opts.force = force;
        auto expected = enumerate_stable_bruteforce(inst, opts);  // may throw (guard)
        std::set<Matching> got(matchings.begin(), matchings.end());
        if (!res.truncated && got != std::set<Matching>(expected.begin(), expected.end()))
            throw std::logic_error("oracle disagrees with closed-set enumeration");
        std::cerr << "oracle: " << expected.size() << " stable matchings, "
                  << (res.truncated ? "partial cross-check (truncated)" : "cross-check ok")
                  << "\n";
    }

    if (format == "json") {
        nlohmann::ordered_json j;
        j["count"] = res.count;
        j["truncated"] = res.truncated;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (size_t i = 0; i < matchings.size(); ++i) {
            nlohmann::ordered_json entry;
            entry["closed_set"] = family[i];
            entry["matching"] = matching_to_json(matchings[i]);
            arr.push_back(std::move(entry));
        }
        j["stable_matchings"] = std::move(arr);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& mu : matchings) std::cout << matching_brief(mu) << "\n";
        if (res.truncated)
            std::cerr << "truncated after " << res.count << " matchings\n";
    }
    return res.truncated ? kExitTruncated : kExitOk;
}

int cmd_gen(const std::string& kind, int n, int women, double density, std::uint64_t seed,
            int k) {
    if (kind == "exponential") {
        std::cout << serialize_instance(gen_exponential(k));
    } else {
        if (women < 0) women = n;
        std::cout << serialize_instance(gen_random(n, women, density, seed));
    }
    return kExitOk;
}

int cmd_verify(const std::string& inst_path, const std::string& matching_path) {
    Instance inst = load_instance(inst_path);
    Matching mu =
        parse_matching(read_input(matching_path), inst.num_men, inst.num_women);
    auto blocks = blocking_pairs(inst, mu);  // throws on structural problems
    if (blocks.empty()) {
        std::cout << "stable\n";
        return kExitOk;
    }
    std::cout << "unstable: " << blocks.size() << " blocking pair(s)\n";
    for (auto [m, w] : blocks) std::cout << "m" << m + 1 << " -- w" << w + 1 << "\n";
    return kExitNegative;
}

int cmd_bench(const std::string& sizes_csv, int seeds) {
    std::vector<int> sizes;
    std::stringstream in(sizes_csv);
    std::string tok;
    while (std::getline(in, tok, ',')) sizes.push_back(std::stoi(tok));
    std::cout << "n,proposals,rejections,rotations,edges,ns\n";
    for (int n : sizes)
        for (int seed = 0; seed < seeds; ++seed) {
            Instance inst = gen_random(n, n, 1.0, (std::uint64_t)seed);
            auto start = std::chrono::steady_clock::now();
            RotationDigraph g = find_rotation_graph(inst);
            auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            std::cout << n << ',' << g.stats.proposals << ',' << g.stats.rejections << ','
                      << g.rotations.size() << ',' << g.edges.size() << ',' << ns << "\n";
        }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stable matching toolkit: deferred acceptance, rotations, lattices"};
    app.require_subcommand(1);

    std::string inst_path, matching_path, side = "man", format = "text";
    bool stats = false, gi_compare = false, oracle = false, force = false;
    std::uint64_t max_output = 0, seed = 0;
    int n = 8, women = -1, k = 3, seeds = 3;
    double density = 1.0;
    std::string kind = "random", sizes = "50,100,200,400,800";

    auto* solve = app.add_subcommand("solve", "side-optimal stable matching");
    solve->add_option("instance", inst_path)->required();
    solve->add_option("--side", side)->check(CLI::IsMember({"man", "woman"}));
    solve->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* exp = app.add_subcommand("export", "instance as JSON");
    exp->add_option("instance", inst_path)->required();

    auto* rot = app.add_subcommand("rotations", "rotation digraph");
    rot->add_option("instance", inst_path)->required();
    std::string rot_format = "dot";
    rot->add_option("--format", rot_format)->check(CLI::IsMember({"dot", "json"}));
    rot->add_flag("--stats", stats);
    rot->add_flag("--gi-compare", gi_compare,
                  "compare label-scan edge reconstructions against the digraph");

    auto* lat = app.add_subcommand("lattice", "all stable matchings via closed sets");
    lat->add_option("instance", inst_path)->required();
    lat->add_option("--max-output", max_output, "cap on emitted matchings (0 = none)");
    lat->add_flag("--oracle", oracle, "cross-check with the brute-force oracle");
    lat->add_flag("--force", force, "override the oracle size guard");
    std::string lat_format = "text";
    lat->add_option("--format", lat_format)->check(CLI::IsMember({"text", "json"}));

    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--kind", kind)->check(CLI::IsMember({"random", "exponential"}));
    gen->add_option("-n,--men", n);
    gen->add_option("--women", women);
    gen->add_option("--density", density);
    gen->add_option("--seed", seed);
    gen->add_option("-k", k, "blocks for --kind exponential");

    auto* verify = app.add_subcommand("verify", "check a matching for stability");
    verify->add_option("instance", inst_path)->required();
    verify->add_option("matching", matching_path)->required();

    auto* bench = app.add_subcommand("bench", "digraph construction timings as CSV");
    bench->add_option("--sizes", sizes, "comma-separated instance sizes");
    bench->add_option("--seeds", seeds, "runs per size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*solve) return cmd_solve(inst_path, side, format);
        if (*exp) return cmd_export(inst_path);
        if (*rot) return cmd_rotations(inst_path, rot_format, stats, gi_compare);
        if (*lat) return cmd_lattice(inst_path, max_output, oracle, force, lat_format);
        if (*gen) return cmd_gen(kind, n, women, density, seed, k);
        if (*verify) return cmd_verify(inst_path, matching_path);
        if (*bench) return cmd_bench(sizes, seeds);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
