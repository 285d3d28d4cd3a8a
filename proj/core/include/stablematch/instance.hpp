#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stablematch {

// Two-sided preference instance. Lists hold 0-based partner indices in
// strictly decreasing preference (index 0 = favourite). Sides may have
// different sizes; lists may be empty.
struct Instance {
    int num_men = 0;
    int num_women = 0;
    std::vector<std::vector<int>> men_prefs;    // men_prefs[m] = women, best first
    std::vector<std::vector<int>> women_prefs;  // women_prefs[w] = men, best first
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Structural checks that parsing and generation must uphold: sizes match,
// indices in range, no duplicates (ties are expressed as duplicates and are
// rejected at parse time already). Throws std::invalid_argument on violation.
void validate(const Instance& inst);

// Drops every list entry that is not mutual (m lists w but w does not list m,
// or vice versa), appending one human-readable warning per dropped entry.
// Idempotent.
void normalize(Instance& inst, std::vector<std::string>* warnings = nullptr);

// Text format:
//   men: <n>
//   women: <n>
//   m<i>: <j> <j> ...      (1-based indices; bare "m<i>:" means an empty list)
//   w<j>: <i> <i> ...
// '#' starts a comment; blank lines ignored. Missing agent lines mean empty
// lists. The parser normalizes away non-mutual entries (warnings collected)
// and rejects duplicates/ties and out-of-range indices with line numbers.
Instance parse_instance(const std::string& text, std::vector<std::string>* warnings = nullptr);

std::string serialize_instance(const Instance& inst);

// Exchanges the two sides (men become women and vice versa). An involution.
Instance swap_roles(const Instance& inst);

// Mutual-by-construction random instance: each man/woman pair is mutually
// acceptable with probability `density`, and each agent ranks its acceptable
// partners in an independently shuffled order. Deterministic in `seed`.
Instance gen_random(int num_men, int num_women, double density, std::uint64_t seed);

// 2k x 2k instance made of k independent 2x2 blocks, each contributing one
// rotation with no inter-block constraints: 2^k stable matchings total.
Instance gen_exponential(int k);

// Positional ranks for O(1) preference comparisons. Rank -1 = unacceptable;
// smaller rank = more preferred.
class RankTable {
  public:
    explicit RankTable(const Instance& inst);

    int man_rank(int m, int w) const { return man_rank_[m][w]; }      // w's rank on m's list
    int woman_rank(int w, int m) const { return woman_rank_[w][m]; }  // m's rank on w's list

    // True iff w strictly prefers m1 to m2. kUnmatched / unacceptable rank
    // as worse than any listed partner; two unlisted men compare equal.
    bool woman_prefers(int w, int m1, int m2) const {
        return effective(woman_rank_[w], m1) < effective(woman_rank_[w], m2);
    }
    bool man_prefers(int m, int w1, int w2) const {
        return effective(man_rank_[m], w1) < effective(man_rank_[m], w2);
    }

  private:
    static int effective(const std::vector<int>& ranks, int who) {
        if (who < 0) return 1 << 30;
        int r = ranks[who];
        return r < 0 ? (1 << 30) : r;
    }
    std::vector<std::vector<int>> man_rank_;
    std::vector<std::vector<int>> woman_rank_;
};

}  // namespace stablematch
