#include "stablematch/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace stablematch {

namespace {

void check_matching(const Instance& inst, const Matching& mu, const RankTable& ranks) {
    if (mu.num_men() != inst.num_men || mu.num_women() != inst.num_women)
        throw std::invalid_argument("matching size does not fit instance");
    for (int m = 0; m < inst.num_men; ++m) {
        int w = mu.man_to_woman[m];
        if (w == kUnmatched) continue;
        if (w < 0 || w >= inst.num_women || mu.woman_to_man[w] != m)
            throw std::invalid_argument("inconsistent matching cross-references");
        if (ranks.man_rank(m, w) < 0 || ranks.woman_rank(w, m) < 0)
            throw std::invalid_argument("matched pair is not mutually acceptable");
    }
    for (int w = 0; w < inst.num_women; ++w) {
        int m = mu.woman_to_man[w];
        if (m == kUnmatched) continue;
        if (m < 0 || m >= inst.num_men || mu.man_to_woman[m] != w)
            throw std::invalid_argument("inconsistent matching cross-references");
    }
}

}  // namespace

std::vector<BlockingPair> blocking_pairs(const Instance& inst, const Matching& mu) {
    RankTable ranks(inst);
    check_matching(inst, mu, ranks);
    std::vector<BlockingPair> out;
    for (int m = 0; m < inst.num_men; ++m)
        for (int w : inst.men_prefs[m]) {
            if (ranks.woman_rank(w, m) < 0) continue;  // not mutual
            if (ranks.man_prefers(m, w, mu.man_to_woman[m]) &&
                ranks.woman_prefers(w, m, mu.woman_to_man[w]))
                out.push_back({m, w});
        }
    std::sort(out.begin(), out.end());
    return out;
}

Dominance dominance(const Instance& inst, const Matching& a, const Matching& b) {
    RankTable ranks(inst);
    check_matching(inst, a, ranks);
    check_matching(inst, b, ranks);
    for (int m = 0; m < inst.num_men; ++m)
        if ((a.man_to_woman[m] == kUnmatched) != (b.man_to_woman[m] == kUnmatched))
            return Dominance::Incomparable;
    bool better = false, worse = false;  // from the women's point of view, a vs b
    for (int w = 0; w < inst.num_women; ++w) {
        int ma = a.woman_to_man[w], mb = b.woman_to_man[w];
        if ((ma == kUnmatched) != (mb == kUnmatched)) return Dominance::Incomparable;
        if (ma == mb) continue;
        if (ranks.woman_prefers(w, ma, mb))
            better = true;
        else
            worse = true;
    }
    if (better && worse) return Dominance::Incomparable;
    if (better) return Dominance::AboveStrict;
    if (worse) return Dominance::BelowStrict;
    return Dominance::Equal;
}

namespace {

Matching pick_per_woman(const Instance& inst, const Matching& a, const Matching& b,
                        bool best) {
    RankTable ranks(inst);
    check_matching(inst, a, ranks);
    check_matching(inst, b, ranks);
    Matching out(inst.num_men, inst.num_women);
    for (int w = 0; w < inst.num_women; ++w) {
        int ma = a.woman_to_man[w], mb = b.woman_to_man[w];
        if ((ma == kUnmatched) != (mb == kUnmatched))
            throw std::invalid_argument("matchings have different matched sets");
        if (ma == kUnmatched) continue;
        int pick = ranks.woman_prefers(w, ma, mb) == best ? ma : mb;
        if (out.man_to_woman[pick] != kUnmatched)
            throw std::invalid_argument("join/meet assigns one man twice");
        out.match(pick, w);
    }
    return out;
}

}  // namespace

Matching join(const Instance& inst, const Matching& a, const Matching& b) {
    return pick_per_woman(inst, a, b, true);
}

Matching meet(const Instance& inst, const Matching& a, const Matching& b) {
    return pick_per_woman(inst, a, b, false);
}

namespace {

struct BruteforceSearch {
    const Instance& inst;
    const RankTable ranks;
    Matching cur;
    std::vector<Matching> found;

    explicit BruteforceSearch(const Instance& i)
        : inst(i), ranks(i), cur(i.num_men, i.num_women) {}

    bool mutual(int m, int w) const {
        return ranks.man_rank(m, w) >= 0 && ranks.woman_rank(w, m) >= 0;
    }

    // Would (m0, some woman above w0 on his list) block, given women assigned
    // so far? Pass w0 = kUnmatched to scan his entire list (single option).
    bool better_woman_blocks(int m0, int w0) const {
        for (int w : inst.men_prefs[m0]) {
            if (w == w0) break;
            if (ranks.woman_rank(w, m0) < 0) continue;
            int holder = cur.woman_to_man[w];
            if (holder != kUnmatched && ranks.woman_prefers(w, m0, holder)) return true;
        }
        return false;
    }

    // Would some already-decided man j prefer w0 to his assignment while w0
    // prefers j to m0?
    bool decided_man_blocks(int m0, int w0) const {
        for (int j : inst.women_prefs[w0]) {
            if (j == m0) break;  // the rest rank below m0
            if (j >= m0) continue;  // not decided yet
            if (ranks.man_rank(j, w0) < 0) continue;
            if (ranks.man_prefers(j, w0, cur.man_to_woman[j])) return true;
        }
        return false;
    }

    bool leaf_ok() const {
        for (int w = 0; w < inst.num_women; ++w) {
            if (cur.woman_to_man[w] != kUnmatched) continue;
            for (int j : inst.women_prefs[w])
                if (mutual(j, w) && ranks.man_prefers(j, w, cur.man_to_woman[j]))
                    return false;
        }
        return true;
    }

    void recurse(int m) {
        if (m == inst.num_men) {
            if (leaf_ok()) found.push_back(cur);
            return;
        }
        for (int w : inst.men_prefs[m]) {
            if (ranks.woman_rank(w, m) < 0) continue;
            if (cur.woman_to_man[w] != kUnmatched) continue;
            if (better_woman_blocks(m, w) || decided_man_blocks(m, w)) continue;
            cur.match(m, w);
            recurse(m + 1);
            cur.unmatch_man(m);
        }
        if (!better_woman_blocks(m, kUnmatched)) recurse(m + 1);
    }
};

}  // namespace

std::vector<Matching> enumerate_stable_bruteforce(const Instance& inst,
                                                  BruteforceOptions opts) {
    if (std::max(inst.num_men, inst.num_women) > opts.size_guard && !opts.force)
        throw std::invalid_argument(
            "instance exceeds brute-force size guard of " + std::to_string(opts.size_guard) +
            " (override explicitly to proceed)");
    BruteforceSearch search(inst);
    search.recurse(0);
    std::sort(search.found.begin(), search.found.end());
    return search.found;
}

StableLattice build_lattice(const Instance& inst, std::vector<Matching> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    StableLattice lat;
    lat.elements = std::move(elements);
    int k = (int)lat.elements.size();
    if (k == 0) throw std::invalid_argument("empty element set");
    lat.leq.assign(k, std::vector<char>(k, 0));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            Dominance d = dominance(inst, lat.elements[a], lat.elements[b]);
            lat.leq[a][b] = (a == b) || d == Dominance::BelowStrict;
        }
    for (int a = 0; a < k; ++a) {
        bool is_bottom = true, is_top = true;
        for (int b = 0; b < k; ++b) {
            is_bottom = is_bottom && lat.leq[a][b];
            is_top = is_top && lat.leq[b][a];
        }
        if (is_bottom) lat.bottom = a;
        if (is_top) lat.top = a;
    }
    if (lat.bottom < 0 || lat.top < 0)
        throw std::invalid_argument("element set has no unique bottom/top");
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (a == b || !lat.leq[a][b]) continue;
            bool cover = true;
            for (int c = 0; c < k && cover; ++c)
                if (c != a && c != b && lat.leq[a][c] && lat.leq[c][b]) cover = false;
            if (cover) lat.cover_edges.push_back({a, b});
        }
    std::sort(lat.cover_edges.begin(), lat.cover_edges.end());
    return lat;
}

namespace {

void chain_dfs(const StableLattice& lat, int v, std::vector<int>& path,
               std::vector<std::vector<int>>& out) {
    path.push_back(v);
    if (v == lat.top) out.push_back(path);
    for (auto [a, b] : lat.cover_edges)
        if (a == v) chain_dfs(lat, b, path, out);
    path.pop_back();
}

}  // namespace

std::vector<std::vector<int>> maximal_chains(const StableLattice& lat) {
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    chain_dfs(lat, lat.bottom, path, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace stablematch
