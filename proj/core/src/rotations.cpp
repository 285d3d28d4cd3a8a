#include "stablematch/rotations.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "stablematch/lattice.hpp"

namespace stablematch {

Rotation Rotation::from_cycle(std::vector<std::pair<int, int>> pairs) {
    if (pairs.size() < 2) throw std::invalid_argument("a rotation has at least two pairs");
    size_t best = 0;
    for (size_t i = 1; i < pairs.size(); ++i)
        if (pairs[i].second < pairs[best].second) best = i;
    std::rotate(pairs.begin(), pairs.begin() + best, pairs.end());
    Rotation rho;
    rho.pairs = std::move(pairs);
    return rho;
}

Matching eliminate(const Matching& mu, const Rotation& rho) {
    for (auto [w, m] : rho.pairs)
        if (mu.woman_to_man[w] != m)
            throw std::invalid_argument("rotation is not matched in the given matching");
    Matching out = mu;
    for (auto [w, m] : rho.pairs) out.unmatch_man(m);
    for (int i = 0; i < rho.size(); ++i) {
        int m = rho.pairs[i].second;
        int w_next = rho.pairs[(i + 1) % rho.size()].first;
        out.match(m, w_next);
    }
    return out;
}

std::vector<Rotation> exposed_rotations(const Instance& inst, const Matching& mu) {
    std::set<Rotation> found;
    for (int w = 0; w < inst.num_women; ++w) {
        if (mu.woman_to_man[w] == kUnmatched) continue;
        RejectionChain chain = rejection_chain(inst, mu, w);
        if (chain.terminal != ChainTerminal::ClosedAtStart) continue;
        if (chain.good_proposal_max > 1) continue;  // not a cover of mu
        found.insert(Rotation::from_cycle(chain.entries));
    }
    return {found.begin(), found.end()};
}

namespace {

// State for the incremental rotation-digraph construction. One man-proposing
// pass computes the man-optimal matching; then, repeatedly, a still-active
// woman rejects her partner and the resulting rejection chain is followed.
// Whenever the chain re-enters itself a rotation is built in place and the
// chain keeps running from the man it freed; when it hits a dead end the
// whole chain is rolled back and its women are finalized. Rejections, list
// cursors and predecessor labels all persist across chains, which keeps the
// total work quadratic.
struct GraphBuilder {
    const Instance& inst;
    const RankTable ranks;
    RotationDigraph g;

    Matching stable;   // last stable matching reached (mu tilde)
    Matching current;  // working matching, diverges from `stable` inside a chain
    std::vector<std::vector<char>> rejected;  // rejected[m][w]: w rejected m
    std::vector<int> cursor;                  // scan position on each man's list
    std::vector<char> finalized;              // women with final partners (set S)
    int num_active;                           // women not yet finalized

    std::vector<int> pred1;                   // last rotation that moved each man
    std::vector<std::vector<int>> pred2;      // type-2 labels collected per man
    std::vector<std::vector<int>> label;      // label[w][m]: rotation, -1 if none

    // Chain state: entry i = (w_i, man displaced from w_i).
    std::vector<std::pair<int, int>> chain;
    std::vector<int> pos_in_chain;            // per woman, -1 if not in chain

    std::vector<RotationEdge> edges;

    explicit GraphBuilder(const Instance& i) : inst(i), ranks(i) {
        DAResult da = mpda(inst);
        g.man_optimal = da.matching;
        g.stats = da.stats;
        stable = da.matching;
        current = stable;
        rejected.assign(inst.num_men, std::vector<char>(inst.num_women, 0));
        for (int m = 0; m < inst.num_men; ++m)
            for (int w : da.rejections[m]) rejected[m][w] = 1;
        cursor.assign(inst.num_men, 0);
        finalized.assign(inst.num_women, 0);
        num_active = 0;
        for (int w = 0; w < inst.num_women; ++w) {
            finalized[w] = stable.woman_to_man[w] == kUnmatched;
            if (!finalized[w]) ++num_active;
        }
        pred1.assign(inst.num_men, -1);
        pred2.assign(inst.num_men, {});
        label.assign(inst.num_women, std::vector<int>(inst.num_men, -1));
        pos_in_chain.assign(inst.num_women, -1);
    }

    // First woman at or below m's cursor who would take m over her partner in
    // `stable`. Permanent rejections (and any type-2 labels found on the way)
    // are recorded while skipping. Returns kUnmatched when m's list runs out.
    int next_accepting_woman(int m) {
        const auto& list = inst.men_prefs[m];
        for (;;) {
            while (cursor[m] < (int)list.size() && rejected[m][list[cursor[m]]]) ++cursor[m];
            if (cursor[m] >= (int)list.size()) return kUnmatched;
            int w = list[cursor[m]];
            ++g.stats.proposals;
            int holder = stable.woman_to_man[w];
            if (ranks.woman_rank(w, m) >= 0 && !ranks.woman_prefers(w, holder, m)) return w;
            ++g.stats.rejections;
            rejected[m][w] = 1;
            if (label[w][m] >= 0) {
                pred2[m].push_back(label[w][m]);
                ++g.stats.predecessor_edge_events;
            }
        }
    }

    // The chain suffix starting at w forms a rotation (current already maps
    // every suffix woman to her new man). Commits it to `stable`, records its
    // predecessor edges and type-2 labels, and truncates the chain.
    void build_rotation(int w_start) {
        int from = pos_in_chain[w_start];
        int len = (int)chain.size() - from;
        std::vector<std::pair<int, int>> pairs(chain.begin() + from, chain.end());

        int rho = (int)g.rotations.size();
        g.rotations.push_back(Rotation::from_cycle(pairs));
        ++g.stats.rotation_events;

        std::vector<int> new_men(len);
        for (int i = 0; i < len; ++i) new_men[i] = current.woman_to_man[pairs[i].first];
        for (int i = 0; i < len; ++i) stable.unmatch_man(pairs[i].second);
        for (int i = 0; i < len; ++i) stable.match(new_men[i], pairs[i].first);

        for (int i = 0; i < len; ++i) {
            auto [w, old_man] = pairs[i];
            int new_man = new_men[i];
            // Type-2 labels: w jumped over every man strictly between her new
            // and old partners; each such skip is a dependency on this
            // rotation for any later rotation moving that man below w.
            int lo = ranks.woman_rank(w, new_man), hi = ranks.woman_rank(w, old_man);
            for (int r = lo + 1; r < hi; ++r) {
                int x = inst.women_prefs[w][r];
                if (ranks.man_rank(x, w) < 0) continue;
                if (label[w][x] >= 0)
                    throw std::logic_error("type-2 label written twice for one pair");
                label[w][x] = rho;
            }
        }
        for (int i = 0; i < len; ++i) {
            int m = pairs[i].second;
            if (pred1[m] >= 0) {
                edges.push_back({pred1[m], rho, EdgeType::Type1});
                ++g.stats.predecessor_edge_events;
            }
            for (int p : pred2[m]) {
                edges.push_back({p, rho, EdgeType::Type2});
                ++g.stats.predecessor_edge_events;
            }
            pred1[m] = rho;
            pred2[m].clear();
        }
        for (int i = 0; i < len; ++i) pos_in_chain[chain[from + i].first] = -1;
        chain.resize(from);
    }

    // Rejection chain seeded by `seed` rejecting her partner in `stable`.
    // Returns after building zero or more rotations (chain closed at its
    // seed) or after a dead end, which finalizes every woman it visited.
    void run_chain(int seed) {
        int m = stable.woman_to_man[seed];
        chain.push_back({seed, m});
        pos_in_chain[seed] = 0;
        current.unmatch_man(m);
        rejected[m][seed] = 1;
        ++g.stats.rejections;
        pred2[m].clear();

        while (!chain.empty()) {
            int w = next_accepting_woman(m);
            if (w == kUnmatched || finalized[w]) {
                for (const auto& entry : chain) {
                    finalized[entry.first] = 1;
                    --num_active;
                    pos_in_chain[entry.first] = -1;
                }
                chain.clear();
                current = stable;
                return;
            }
            if (pos_in_chain[w] >= 0) {
                int freed = current.woman_to_man[w];  // kUnmatched when w == seed
                current.woman_to_man[w] = m;
                if (freed != kUnmatched) current.man_to_woman[freed] = kUnmatched;
                current.man_to_woman[m] = w;
                if (freed != kUnmatched) ++g.stats.rejections;
                build_rotation(w);
                if (freed == kUnmatched) return;  // closed at the seed
                m = freed;  // freed man resumes; his pending labels stay valid
            } else {
                int displaced = current.woman_to_man[w];
                chain.push_back({w, displaced});
                pos_in_chain[w] = (int)chain.size() - 1;
                current.unmatch_man(displaced);
                current.match(m, w);
                rejected[displaced][w] = 1;
                ++g.stats.rejections;
                pred2[displaced].clear();
                m = displaced;
            }
        }
    }
};

}  // namespace

RotationDigraph find_rotation_graph(const Instance& inst, SeedRule rule) {
    GraphBuilder b(inst);
    while (b.num_active > 0) {
        int seed = kUnmatched;
        if (rule == SeedRule::LowestIndex) {
            for (int w = 0; w < inst.num_women; ++w)
                if (!b.finalized[w]) { seed = w; break; }
        } else {
            for (int w = inst.num_women - 1; w >= 0; --w)
                if (!b.finalized[w]) { seed = w; break; }
        }
        // Keep reseeding the same woman until her chain dead-ends: every
        // closed chain leaves a new stable matching that may expose more.
        while (!b.finalized[seed]) b.run_chain(seed);
    }
    std::sort(b.edges.begin(), b.edges.end());
    b.edges.erase(std::unique(b.edges.begin(), b.edges.end()), b.edges.end());
    b.g.edges = std::move(b.edges);
    b.g.woman_optimal = b.stable;
    return b.g;
}

std::vector<std::pair<int, int>> gi_predecessor_edges(const Instance& inst,
                                                      const RotationDigraph& g,
                                                      GiVariant variant) {
    RankTable ranks(inst);
    int nm = inst.num_men, nw = inst.num_women;
    std::vector<std::vector<int>> t1(nm), t2(nm);
    for (int m = 0; m < nm; ++m) {
        t1[m].assign(inst.men_prefs[m].size(), -1);
        t2[m].assign(inst.men_prefs[m].size(), -1);
    }
    // Position of the last woman each man is moved to; type-2 labels beyond
    // it are stale. Rotations arrive in elimination order, so later
    // assignments overwrite earlier ones correctly.
    std::vector<int> end_pos(nm, -1);

    for (int r = 0; r < (int)g.rotations.size(); ++r) {
        const auto& pairs = g.rotations[r].pairs;
        int sz = (int)pairs.size();
        for (int i = 0; i < sz; ++i) {
            auto [w, m] = pairs[i];
            int w_next = pairs[(i + 1) % sz].first;
            int m_prev = pairs[(i - 1 + sz) % sz].second;
            t1[m][ranks.man_rank(m, w)] = r;
            end_pos[m] = ranks.man_rank(m, w_next);
            int lo = ranks.woman_rank(w, m_prev), hi = ranks.woman_rank(w, m);
            for (int k = lo + 1; k < hi; ++k) {
                int x = inst.women_prefs[w][k];
                int pos = ranks.man_rank(x, w);
                if (pos < 0) continue;
                t2[x][pos] = r;
            }
        }
    }

    std::set<std::pair<int, int>> edges;
    for (int m = 0; m < nm; ++m) {
        int last = -1;  // most recent type-1 label while scanning down the list
        for (int pos = 0; pos < (int)t1[m].size(); ++pos) {
            if (t1[m][pos] >= 0) {
                if (last >= 0) edges.insert({last, t1[m][pos]});
                last = t1[m][pos];
            }
            if (t2[m][pos] >= 0 && last >= 0) {
                bool stale = variant == GiVariant::Corrected && pos > end_pos[m];
                if (!stale && t2[m][pos] != last) edges.insert({t2[m][pos], last});
            }
        }
    }
    return {edges.begin(), edges.end()};
}

}  // namespace stablematch
