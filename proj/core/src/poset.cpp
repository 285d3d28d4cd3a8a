#include "stablematch/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace stablematch {

namespace {

std::vector<std::vector<int>> predecessor_lists(const RotationDigraph& g) {
    std::vector<std::vector<int>> preds(g.rotations.size());
    for (const auto& e : g.edges) preds[e.to].push_back(e.from);
    for (auto& p : preds) {
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
    }
    return preds;
}

std::vector<std::vector<int>> successor_lists(const RotationDigraph& g) {
    std::vector<std::vector<int>> succs(g.rotations.size());
    for (const auto& e : g.edges) succs[e.from].push_back(e.to);
    for (auto& s : succs) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    return succs;
}

// Kahn's algorithm, smallest index first. Throws on a cycle.
std::vector<int> topological_order(const RotationDigraph& g) {
    int k = (int)g.rotations.size();
    std::vector<int> indeg(k, 0);
    auto succs = successor_lists(g);
    for (int u = 0; u < k; ++u)
        for (int v : succs[u]) ++indeg[v];
    std::vector<int> order;
    std::vector<char> ready(k, 0);
    for (;;) {
        int pick = -1;
        for (int v = 0; v < k; ++v)
            if (!ready[v] && indeg[v] == 0) { pick = v; break; }
        if (pick < 0) break;
        ready[pick] = 1;
        order.push_back(pick);
        for (int v : succs[pick]) --indeg[v];
    }
    if ((int)order.size() != k)
        throw std::invalid_argument("rotation digraph contains a cycle");
    return order;
}

}  // namespace

bool is_closed(const RotationDigraph& g, const ClosedSet& set) {
    int k = (int)g.rotations.size();
    std::vector<char> in(k, 0);
    for (int v : set) {
        if (v < 0 || v >= k) throw std::invalid_argument("rotation index out of range");
        in[v] = 1;
    }
    for (const auto& e : g.edges)
        if (in[e.to] && !in[e.from]) return false;
    return true;
}

EnumerateResult enumerate_closed_sets(const RotationDigraph& g,
                                      const std::function<void(const ClosedSet&)>& emit,
                                      std::uint64_t cap) {
    int k = (int)g.rotations.size();
    auto preds = predecessor_lists(g);
    std::vector<int> topo = topological_order(g);
    std::vector<char> chosen(k, 0);
    ClosedSet set;
    EnumerateResult res;

    // Decide membership in topological order, excluding first: along each
    // recursion branch every set precedes its proper supersets.
    auto rec = [&](auto&& self, int i) -> bool {
        if (cap && res.count == cap) {
            res.truncated = true;
            return false;
        }
        if (i == k) {
            emit(set);
            ++res.count;
            return true;
        }
        int v = topo[i];
        if (!self(self, i + 1)) return false;
        for (int p : preds[v])
            if (!chosen[p]) return true;
        chosen[v] = 1;
        set.insert(std::lower_bound(set.begin(), set.end(), v), v);
        bool go_on = self(self, i + 1);
        chosen[v] = 0;
        set.erase(std::lower_bound(set.begin(), set.end(), v));
        return go_on;
    };
    rec(rec, 0);
    return res;
}

std::vector<ClosedSet> all_closed_sets(const RotationDigraph& g, std::uint64_t cap) {
    std::vector<ClosedSet> out;
    auto res = enumerate_closed_sets(g, [&](const ClosedSet& s) { out.push_back(s); }, cap);
    if (res.truncated) throw std::runtime_error("closed-set enumeration truncated by cap");
    return out;
}

Matching matching_of_closed_set(const RotationDigraph& g, const ClosedSet& set) {
    if (!is_closed(g, set))
        throw std::invalid_argument("set of rotations is not closed under predecessors");
    std::vector<char> in(g.rotations.size(), 0);
    for (int v : set) in[v] = 1;
    Matching mu = g.man_optimal;
    // Discovery order is a valid elimination order for any closed subset.
    for (int v = 0; v < (int)g.rotations.size(); ++v)
        if (in[v]) mu = eliminate(mu, g.rotations[v]);
    return mu;
}

ClosedSet closed_set_of_matching(const Instance& inst, const RotationDigraph& g,
                                 const Matching& mu) {
    RankTable ranks(inst);
    ClosedSet set;
    for (int v = 0; v < (int)g.rotations.size(); ++v) {
        const auto& pairs = g.rotations[v].pairs;
        bool done = true;
        for (int i = 0; i < (int)pairs.size() && done; ++i) {
            int w = pairs[i].first;
            int moved_to = pairs[(i - 1 + (int)pairs.size()) % (int)pairs.size()].second;
            // w has passed rho iff her partner is the man rho moves her to,
            // or someone she likes better.
            if (ranks.woman_prefers(w, moved_to, mu.woman_to_man[w])) done = false;
        }
        if (done) set.push_back(v);
    }
    if (matching_of_closed_set(g, set) != mu)
        throw std::invalid_argument("matching does not correspond to a closed set");
    return set;
}

bool is_topological_sort(const RotationDigraph& g, const std::vector<int>& order) {
    int k = (int)g.rotations.size();
    if ((int)order.size() != k) return false;
    std::vector<int> pos(k, -1);
    for (int i = 0; i < k; ++i) {
        int v = order[i];
        if (v < 0 || v >= k || pos[v] >= 0) return false;
        pos[v] = i;
    }
    for (const auto& e : g.edges)
        if (pos[e.from] > pos[e.to]) return false;
    return true;
}

std::pair<std::vector<std::vector<int>>, bool> all_topological_sorts(
    const RotationDigraph& g, std::uint64_t cap) {
    int k = (int)g.rotations.size();
    topological_order(g);  // cycle check
    auto succs = successor_lists(g);
    std::vector<int> indeg(k, 0);
    for (int u = 0; u < k; ++u)
        for (int v : succs[u]) ++indeg[v];

    std::vector<std::vector<int>> out;
    bool truncated = false;
    std::vector<int> cur;
    std::vector<char> used(k, 0);
    auto rec = [&](auto&& self) -> bool {
        if (cap && out.size() == cap) {
            truncated = true;
            return false;
        }
        if ((int)cur.size() == k) {
            out.push_back(cur);
            return true;
        }
        for (int v = 0; v < k; ++v) {
            if (used[v] || indeg[v] != 0) continue;
            used[v] = 1;
            cur.push_back(v);
            for (int s : succs[v]) --indeg[s];
            bool go_on = self(self);
            for (int s : succs[v]) ++indeg[s];
            cur.pop_back();
            used[v] = 0;
            if (!go_on) return false;
        }
        return true;
    };
    rec(rec);
    return {out, truncated};
}

std::vector<std::pair<int, int>> transitive_closure(const RotationDigraph& g) {
    int k = (int)g.rotations.size();
    topological_order(g);  // cycle check
    auto succs = successor_lists(g);
    std::vector<std::vector<char>> reach(k, std::vector<char>(k, 0));
    // DFS from each vertex; k is O(n^2) small in practice.
    auto dfs = [&](auto&& self, int root, int v) -> void {
        for (int s : succs[v])
            if (!reach[root][s]) {
                reach[root][s] = 1;
                self(self, root, s);
            }
    };
    for (int v = 0; v < k; ++v) dfs(dfs, v, v);
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v)
            if (reach[u][v] && u != v) out.push_back({u, v});
    return out;
}

}  // namespace stablematch
