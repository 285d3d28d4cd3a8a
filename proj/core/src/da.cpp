#include "stablematch/da.hpp"

#include <deque>
#include <stdexcept>

namespace stablematch {

DAResult mpda(const Instance& inst, QueueDiscipline discipline) {
    RankTable ranks(inst);
    DAResult res;
    res.matching = Matching(inst.num_men, inst.num_women);
    res.rejections.assign(inst.num_men, {});
    std::vector<int> next(inst.num_men, 0);  // next list position to propose at

    std::deque<int> free;
    for (int m = 0; m < inst.num_men; ++m)
        if (!inst.men_prefs[m].empty()) free.push_back(m);

    while (!free.empty()) {
        int m;
        if (discipline == QueueDiscipline::FIFO) {
            m = free.front();
            free.pop_front();
        } else {
            m = free.back();
            free.pop_back();
        }
        while (next[m] < (int)inst.men_prefs[m].size()) {
            int w = inst.men_prefs[m][next[m]++];
            ++res.stats.proposals;
            int cur = res.matching.woman_to_man[w];
            // m must be on w's own list (lists can be non-mutual after
            // truncation) and beat her current partner, if any.
            if (ranks.woman_rank(w, m) < 0 || !ranks.woman_prefers(w, m, cur)) {
                ++res.stats.rejections;
                res.rejections[m].push_back(w);
                continue;
            }
            if (cur != kUnmatched) {
                ++res.stats.rejections;
                res.rejections[cur].push_back(w);
                res.matching.man_to_woman[cur] = kUnmatched;
                free.push_back(cur);
            }
            res.matching.match(m, w);
            break;
        }
    }
    return res;
}

Instance truncate(const Instance& inst, const Matching& mu, int rejecting_woman) {
    if (mu.num_men() != inst.num_men || mu.num_women() != inst.num_women)
        throw std::invalid_argument("matching size does not fit instance");
    if (rejecting_woman >= 0 && mu.woman_to_man[rejecting_woman] == kUnmatched)
        throw std::invalid_argument("rejecting woman is unmatched");

    Instance out = inst;
    for (int m = 0; m < inst.num_men; ++m) {
        int w = mu.man_to_woman[m];
        if (w == kUnmatched) {
            out.men_prefs[m].clear();
            continue;
        }
        auto& list = out.men_prefs[m];
        for (size_t i = 0; i < list.size(); ++i)
            if (list[i] == w) {
                list.erase(list.begin(), list.begin() + i);
                break;
            }
    }
    for (int w = 0; w < inst.num_women; ++w) {
        int m = mu.woman_to_man[w];
        if (m == kUnmatched) continue;
        auto& list = out.women_prefs[w];
        for (size_t i = 0; i < list.size(); ++i)
            if (list[i] == m) {
                list.resize(w == rejecting_woman ? i : i + 1);
                break;
            }
    }
    return out;
}

RejectionChain rejection_chain(const Instance& inst, const Matching& mu, int w0) {
    if (w0 < 0 || w0 >= inst.num_women) throw std::invalid_argument("bad woman index");
    if (mu.woman_to_man[w0] == kUnmatched)
        throw std::invalid_argument("rejecting woman must be matched");

    RankTable ranks(inst);
    RejectionChain chain;
    chain.outcome = mu;
    std::vector<int> good(inst.num_women, 0);

    int m = mu.woman_to_man[w0];
    chain.entries.push_back({w0, m});
    chain.outcome.unmatch_man(m);

    // m proposes down his list starting just below the woman who freed him.
    int cursor = ranks.man_rank(m, w0) + 1;
    const int n_events_cap = 4 * (inst.num_men + 1) * (inst.num_women + 1) + 16;
    for (;;) {
        if ((int)chain.stats.total() > n_events_cap)
            throw std::logic_error("rejection chain exceeded its event budget");
        if (cursor >= (int)inst.men_prefs[m].size()) {
            chain.terminal = ChainTerminal::ManExhausted;
            chain.terminal_agent = m;
            break;
        }
        int w = inst.men_prefs[m][cursor];
        ++chain.stats.proposals;
        int mu_partner = mu.woman_to_man[w];  // truncation baseline
        int cur = chain.outcome.woman_to_man[w];
        bool acceptable = ranks.woman_rank(w, m) >= 0;
        if (acceptable && ranks.woman_prefers(w, m, mu_partner)) ++good[w];

        bool accepts;
        if (!acceptable) {
            accepts = false;
        } else if (w == w0) {
            // Her mu-partner was removed from her truncated list.
            accepts = ranks.woman_prefers(w, m, mu_partner);
        } else if (mu_partner == kUnmatched) {
            accepts = true;  // single woman: any acceptable proposal sticks
        } else {
            accepts = ranks.woman_prefers(w, m, cur);
        }
        if (!accepts) {
            ++chain.stats.rejections;
            ++cursor;
            continue;
        }
        if (w == w0) {
            chain.outcome.match(m, w);
            chain.terminal = ChainTerminal::ClosedAtStart;
            break;
        }
        if (mu_partner == kUnmatched) {
            chain.outcome.match(m, w);
            chain.terminal = ChainTerminal::AbsorbedBySingleWoman;
            chain.terminal_agent = w;
            break;
        }
        ++chain.stats.rejections;  // w dumps her current partner
        chain.entries.push_back({w, cur});
        chain.outcome.unmatch_man(cur);
        chain.outcome.match(m, w);
        m = cur;
        cursor = ranks.man_rank(m, w) + 1;
    }
    for (int v : good) chain.good_proposal_max = std::max(chain.good_proposal_max, v);
    return chain;
}

}  // namespace stablematch
