#pragma once

#include <vector>

namespace stablematch {

inline constexpr int kUnmatched = -1;

// A (possibly partial) matching between num_men men and num_women women.
// Indices are 0-based internally; kUnmatched marks a single agent.
struct Matching {
    std::vector<int> man_to_woman;
    std::vector<int> woman_to_man;

    Matching() = default;
    Matching(int num_men, int num_women)
        : man_to_woman(num_men, kUnmatched), woman_to_man(num_women, kUnmatched) {}

    int num_men() const { return (int)man_to_woman.size(); }
    int num_women() const { return (int)woman_to_man.size(); }

    void match(int m, int w) {
        man_to_woman[m] = w;
        woman_to_man[w] = m;
    }
    void unmatch_man(int m) {
        if (man_to_woman[m] != kUnmatched) {
            woman_to_man[man_to_woman[m]] = kUnmatched;
            man_to_woman[m] = kUnmatched;
        }
    }

    bool operator==(const Matching&) const = default;
    bool operator<(const Matching& o) const {
        if (man_to_woman != o.man_to_woman) return man_to_woman < o.man_to_woman;
        return woman_to_man < o.woman_to_man;
    }
};

}  // namespace stablematch
