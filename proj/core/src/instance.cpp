#include "stablematch/instance.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace stablematch {

void validate(const Instance& inst) {
    if (inst.num_men < 0 || inst.num_women < 0)
        throw std::invalid_argument("negative side size");
    if ((int)inst.men_prefs.size() != inst.num_men ||
        (int)inst.women_prefs.size() != inst.num_women)
        throw std::invalid_argument("preference table size does not match side size");
    auto check_side = [](const std::vector<std::vector<int>>& prefs, int limit,
                         const char* side) {
        for (const auto& list : prefs) {
            std::vector<char> seen(limit, 0);
            for (int x : list) {
                if (x < 0 || x >= limit)
                    throw std::invalid_argument(std::string(side) + ": index out of range");
                if (seen[x])
                    throw std::invalid_argument(std::string(side) + ": duplicate entry");
                seen[x] = 1;
            }
        }
    };
    check_side(inst.men_prefs, inst.num_women, "men");
    check_side(inst.women_prefs, inst.num_men, "women");
}

void normalize(Instance& inst, std::vector<std::string>* warnings) {
    validate(inst);
    std::vector<std::vector<char>> man_lists(inst.num_men,
                                             std::vector<char>(inst.num_women, 0));
    std::vector<std::vector<char>> woman_lists(inst.num_women,
                                               std::vector<char>(inst.num_men, 0));
    for (int m = 0; m < inst.num_men; ++m)
        for (int w : inst.men_prefs[m]) man_lists[m][w] = 1;
    for (int w = 0; w < inst.num_women; ++w)
        for (int m : inst.women_prefs[w]) woman_lists[w][m] = 1;

    for (int m = 0; m < inst.num_men; ++m) {
        auto& list = inst.men_prefs[m];
        auto it = std::remove_if(list.begin(), list.end(), [&](int w) {
            if (woman_lists[w][m]) return false;
            if (warnings)
                warnings->push_back("dropped w" + std::to_string(w + 1) + " from m" +
                                    std::to_string(m + 1) + "'s list (not mutual)");
            return true;
        });
        list.erase(it, list.end());
    }
    for (int w = 0; w < inst.num_women; ++w) {
        auto& list = inst.women_prefs[w];
        auto it = std::remove_if(list.begin(), list.end(), [&](int m) {
            if (man_lists[m][w]) return false;
            if (warnings)
                warnings->push_back("dropped m" + std::to_string(m + 1) + " from w" +
                                    std::to_string(w + 1) + "'s list (not mutual)");
            return true;
        });
        list.erase(it, list.end());
    }
}

namespace {

std::string strip(const std::string& s) {
    std::string out = s;
    if (auto pos = out.find('#'); pos != std::string::npos) out.erase(pos);
    auto begin = out.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    auto end = out.find_last_not_of(" \t\r\n");
    return out.substr(begin, end - begin + 1);
}

std::vector<int> parse_index_list(const std::string& body, int limit, int line) {
    std::istringstream in(body);
    std::vector<int> out;
    std::vector<char> seen(limit, 0);
    std::string tok;
    while (in >> tok) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw ParseError(line, "expected an index, got '" + tok + "'");
        }
        if (used != tok.size()) throw ParseError(line, "expected an index, got '" + tok + "'");
        if (v < 1 || v > limit)
            throw ParseError(line, "index " + tok + " out of range 1.." + std::to_string(limit));
        if (seen[v - 1])
            throw ParseError(line, "duplicate index " + tok + " (ties are not supported)");
        seen[v - 1] = 1;
        out.push_back(v - 1);
    }
    return out;
}

}  // namespace

Instance parse_instance(const std::string& text, std::vector<std::string>* warnings) {
    Instance inst;
    bool have_men = false, have_women = false;
    std::vector<char> seen_man, seen_woman;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(raw);
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(lineno, "expected '<key>: ...'");
        std::string key = strip(line.substr(0, colon));
        std::string body = line.substr(colon + 1);

        if (key == "men" || key == "women") {
            bool& have = key == "men" ? have_men : have_women;
            if (have) throw ParseError(lineno, "duplicate '" + key + ":' header");
            int n = 0;
            try {
                n = std::stoi(strip(body));
            } catch (const std::exception&) {
                throw ParseError(lineno, "expected a count after '" + key + ":'");
            }
            if (n < 0) throw ParseError(lineno, "side size must be non-negative");
            have = true;
            if (key == "men") {
                inst.num_men = n;
                inst.men_prefs.assign(n, {});
                seen_man.assign(n, 0);
            } else {
                inst.num_women = n;
                inst.women_prefs.assign(n, {});
                seen_woman.assign(n, 0);
            }
            continue;
        }

        if (key.size() < 2 || (key[0] != 'm' && key[0] != 'w'))
            throw ParseError(lineno, "unknown key '" + key + "'");
        bool is_man = key[0] == 'm';
        if ((is_man && !have_men) || (!is_man && !have_women))
            throw ParseError(lineno, "agent line before its side's size header");
        int idx = 0;
        try {
            size_t used = 0;
            idx = std::stoi(key.substr(1), &used);
            if (used + 1 != key.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError(lineno, "unknown key '" + key + "'");
        }
        int limit = is_man ? inst.num_men : inst.num_women;
        if (idx < 1 || idx > limit)
            throw ParseError(lineno, key.substr(0, 1) + std::to_string(idx) +
                                         " out of range 1.." + std::to_string(limit));
        auto& seen = is_man ? seen_man : seen_woman;
        if (seen[idx - 1]) throw ParseError(lineno, "duplicate list for " + key);
        seen[idx - 1] = 1;
        auto list = parse_index_list(body, is_man ? inst.num_women : inst.num_men, lineno);
        (is_man ? inst.men_prefs : inst.women_prefs)[idx - 1] = std::move(list);
    }
    if (!have_men) throw ParseError(lineno, "missing 'men:' header");
    if (!have_women) throw ParseError(lineno, "missing 'women:' header");
    normalize(inst, warnings);
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    out << "men: " << inst.num_men << "\n";
    out << "women: " << inst.num_women << "\n";
    auto write_side = [&](char tag, const std::vector<std::vector<int>>& prefs) {
        for (size_t i = 0; i < prefs.size(); ++i) {
            out << tag << i + 1 << ":";
            for (int x : prefs[i]) out << ' ' << x + 1;
            out << "\n";
        }
    };
    write_side('m', inst.men_prefs);
    write_side('w', inst.women_prefs);
    return out.str();
}

Instance swap_roles(const Instance& inst) {
    Instance out;
    out.num_men = inst.num_women;
    out.num_women = inst.num_men;
    out.men_prefs = inst.women_prefs;
    out.women_prefs = inst.men_prefs;
    return out;
}

Instance gen_random(int num_men, int num_women, double density, std::uint64_t seed) {
    if (density < 0.0 || density > 1.0) throw std::invalid_argument("density must be in [0,1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution accept(density);

    Instance inst;
    inst.num_men = num_men;
    inst.num_women = num_women;
    inst.men_prefs.assign(num_men, {});
    inst.women_prefs.assign(num_women, {});
    for (int m = 0; m < num_men; ++m)
        for (int w = 0; w < num_women; ++w)
            if (density >= 1.0 || accept(rng)) {
                inst.men_prefs[m].push_back(w);
                inst.women_prefs[w].push_back(m);
            }
    for (auto& list : inst.men_prefs) std::shuffle(list.begin(), list.end(), rng);
    for (auto& list : inst.women_prefs) std::shuffle(list.begin(), list.end(), rng);
    return inst;
}

Instance gen_exponential(int k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    Instance inst;
    inst.num_men = inst.num_women = 2 * k;
    inst.men_prefs.assign(2 * k, {});
    inst.women_prefs.assign(2 * k, {});
    for (int i = 0; i < k; ++i) {
        int a = 2 * i, b = 2 * i + 1;
        inst.men_prefs[a] = {a, b};
        inst.men_prefs[b] = {b, a};
        inst.women_prefs[a] = {b, a};
        inst.women_prefs[b] = {a, b};
    }
    return inst;
}

RankTable::RankTable(const Instance& inst) {
    man_rank_.assign(inst.num_men, std::vector<int>(inst.num_women, -1));
    woman_rank_.assign(inst.num_women, std::vector<int>(inst.num_men, -1));
    for (int m = 0; m < inst.num_men; ++m)
        for (size_t r = 0; r < inst.men_prefs[m].size(); ++r)
            man_rank_[m][inst.men_prefs[m][r]] = (int)r;
    for (int w = 0; w < inst.num_women; ++w)
        for (size_t r = 0; r < inst.women_prefs[w].size(); ++r)
            woman_rank_[w][inst.women_prefs[w][r]] = (int)r;
}

}  // namespace stablematch
