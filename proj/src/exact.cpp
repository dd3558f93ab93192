#include "wvc/exact.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "wvc/reductions.hpp"

namespace wvc {

std::vector<std::size_t> heaviest_first(const std::vector<WeightedVote>& pool, std::vector<std::size_t> idx) {
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (pool[a].weight != pool[b].weight) return pool[a].weight > pool[b].weight;
        if (pool[a].prefs != pool[b].prefs) return pool[a].prefs < pool[b].prefs;
        return a < b;
    });
    return idx;
}

namespace {

ScoreTable approval_scores(const std::vector<std::string>& candidates, const std::vector<WeightedVote>& votes,
                           std::size_t width) {
    return score_election(Election{candidates, votes}, ScoringVector::approval(candidates.size(), width));
}

struct ApprovalGroup {
    std::vector<bool> mask;
    std::vector<std::size_t> voters;  // heaviest first
    std::vector<Weight> prefix;       // prefix[i] = weight of the i heaviest
};

}  // namespace

Solution solve_fixed_m_tapproval(const ControlInstance& inst) {
    inst.validate();
    if (inst.kind != ControlKind::WCCAV && inst.kind != ControlKind::WCCDV)
        throw UnsupportedRule("fixed-m enumeration handles WCCAV and WCCDV only");
    const auto m = inst.size();
    const auto width = approval_width(inst.rule, m);
    const auto p = inst.preferred;
    const bool adding = is_adding(inst.kind);
    const auto& pool = inst.pool();

    // Adding: only p-approvers help. Deleting: only voters not approving p.
    std::map<std::vector<bool>, std::vector<std::size_t>> by_mask;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        auto mask = pool[i].approval(width);
        if (mask[p] == adding) by_mask[mask].push_back(i);
    }
    std::vector<ApprovalGroup> groups;
    for (auto& [mask, members] : by_mask) {
        ApprovalGroup g{mask, heaviest_first(pool, members), {0}};
        for (auto i : g.voters) g.prefix.push_back(checked_add(g.prefix.back(), pool[i].weight));
        groups.push_back(std::move(g));
    }

    const auto base = approval_scores(inst.candidates, inst.registered, width);
    std::size_t eligible = 0;
    for (const auto& g : groups) eligible += g.voters.size();
    const auto limit = std::min(inst.budget, eligible);

    std::vector<std::size_t> counts(groups.size(), 0);
    std::vector<Weight> scores(m);
    auto check = [&]() {
        scores = base;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            const auto w = groups[g].prefix[counts[g]];
            if (w == 0) continue;
            for (std::size_t c = 0; c < m; ++c)
                if (groups[g].mask[c]) scores[c] = adding ? checked_add(scores[c], w) : checked_sub(scores[c], w);
        }
        for (std::size_t c = 0; c < m; ++c)
            if (scores[c] > scores[p]) return false;
        return true;
    };
    // exactly `remaining` more voters across groups g..
    auto search = [&](auto&& self, std::size_t g, std::size_t remaining) -> bool {
        if (g == groups.size()) return remaining == 0 && check();
        const auto cap = std::min(remaining, groups[g].voters.size());
        for (std::size_t c = 0; c <= cap; ++c) {
            counts[g] = c;
            if (self(self, g + 1, remaining - c)) return true;
        }
        counts[g] = 0;
        return false;
    };

    for (std::size_t j = 0; j <= limit; ++j) {
        if (search(search, 0, j)) {
            Solution sol{true, {}};
            for (std::size_t g = 0; g < groups.size(); ++g)
                sol.chosen.insert(sol.chosen.end(), groups[g].voters.begin(),
                                  groups[g].voters.begin() + static_cast<std::ptrdiff_t>(counts[g]));
            std::sort(sol.chosen.begin(), sol.chosen.end());
            return sol;
        }
    }
    return {false, {}};
}

// ---------------------------------------------------------------------------

TwoApprovalTrace solve_2approval_wccav(const ControlInstance& inst) {
    inst.validate();
    if (inst.kind != ControlKind::WCCAV) throw UnsupportedRule("pruning algorithm solves WCCAV only");
    const auto m = inst.size();
    if (approval_width(inst.rule, m) != 2 || !std::holds_alternative<rule::TApproval>(inst.rule))
        throw UnsupportedRule("pruning algorithm needs 2-approval");
    const auto p = inst.preferred;
    const auto k = inst.budget;
    const auto& pool = inst.unregistered;

    const auto score = approval_scores(inst.candidates, inst.registered, 2);
    std::vector<Weight> gap(m, 0);
    for (std::size_t c = 0; c < m; ++c) gap[c] = checked_sub(score[c], score[p]);

    // Each remaining voter approves p and exactly one other candidate.
    std::vector<std::size_t> all(pool.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::vector<std::size_t> W;
    std::vector<CandidateIndex> other(pool.size(), p);
    for (auto i : heaviest_first(pool, all)) {
        if (pool[i].prefs[0] == p || pool[i].prefs[1] == p) {
            W.push_back(i);
            other[i] = pool[i].prefs[0] == p ? pool[i].prefs[1] : pool[i].prefs[0];
        }
    }

    // weight of the r heaviest voters in W not approving c
    auto heaviest_without = [&](CandidateIndex c, std::size_t r) {
        Weight sum = 0;
        for (auto i : W) {
            if (r == 0) break;
            if (other[i] == c) continue;
            sum = checked_add(sum, pool[i].weight);
            --r;
        }
        return sum;
    };

    TwoApprovalTrace trace;
    const std::size_t max_passes = pool.size() * m + 1;
    bool changed = true;
    while (changed) {
        if (++trace.passes > max_passes) throw std::logic_error("2-approval pruning did not stabilise");
        changed = false;
        for (std::size_t c = 0; c < m; ++c) {
            if (c == p) continue;
            if (heaviest_without(c, k) < gap[c]) {
                trace.pruned = W;
                return trace;
            }
        }
        for (std::size_t c = 0; c < m; ++c) {
            if (c == p) continue;
            // l runs up to k: with l = k the k heaviest could all approve c
            for (std::size_t l = 1; l <= k; ++l) {
                if (heaviest_without(c, k - l) >= gap[c]) continue;
                // at most l-1 voters approving c can be added
                std::size_t kept = 0;
                std::vector<std::size_t> next;
                for (auto i : W) {
                    if (other[i] == c) {
                        if (kept >= l - 1) {
                            changed = true;
                            continue;
                        }
                        ++kept;
                    }
                    next.push_back(i);
                }
                W = std::move(next);
            }
        }
    }
    trace.pruned = W;
    if (W.size() >= k) {
        trace.solution = {true, std::vector<std::size_t>(W.begin(), W.begin() + static_cast<std::ptrdiff_t>(k))};
    } else if (verify_solution(inst, W)) {
        trace.solution = {true, W};
    }
    std::sort(trace.solution.chosen.begin(), trace.solution.chosen.end());
    return trace;
}

Solution solve_2veto_wccdv(const ControlInstance& inst) {
    inst.validate();
    if (inst.kind != ControlKind::WCCDV || !std::holds_alternative<rule::TVeto>(inst.rule) ||
        std::get<rule::TVeto>(inst.rule).t != 2)
        throw UnsupportedRule("expects a 2-veto WCCDV instance");
    const auto reduced = reduce_tveto_wccdv_to_tapproval_wccav(inst);
    const auto trace = solve_2approval_wccav(reduced.target);
    if (!trace.solution.feasible) return {false, {}};
    return reduced.map_back(trace.solution);
}

// ---------------------------------------------------------------------------

Solution solve_destructive_scoring(const ControlInstance& inst) {
    inst.validate();
    if (inst.kind != ControlKind::WDCAV && inst.kind != ControlKind::WDCDV)
        throw UnsupportedRule("destructive solver handles WDCAV and WDCDV only");
    const auto m = inst.size();
    const auto pos_vec = positional_vector(inst.rule, m);
    if (!pos_vec) throw UnsupportedRule("destructive greedy needs a positional rule");
    const auto& s = *pos_vec;
    const auto p = inst.preferred;
    const auto& pool = inst.pool();
    const bool adding = is_adding(inst.kind);

    const auto base = score_election(inst.base(), s);
    for (std::size_t c = 0; c < m; ++c)
        if (base[c] > base[p]) return {true, {}};

    std::optional<Solution> best;
    for (std::size_t c = 0; c < m; ++c) {
        if (c == p) continue;
        // gain of c over p from acting on each pool voter
        std::vector<std::pair<Weight, std::size_t>> gains;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            const auto pos = pool[i].positions();
            Weight per = checked_sub(s[pos[c]], s[pos[p]]);
            if (!adding) per = -per;
            const auto g = checked_mul(pool[i].weight, per);
            if (g > 0) gains.emplace_back(g, i);
        }
        std::stable_sort(gains.begin(), gains.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        Weight diff = checked_sub(base[c], base[p]);
        Solution sol{false, {}};
        for (const auto& [g, i] : gains) {
            if (sol.chosen.size() >= inst.budget) break;
            if (best && sol.chosen.size() + 1 >= best->chosen.size()) break;
            diff = checked_add(diff, g);
            sol.chosen.push_back(i);
            if (diff > 0) {
                sol.feasible = true;
                break;
            }
        }
        if (sol.feasible) {
            std::sort(sol.chosen.begin(), sol.chosen.end());
            best = std::move(sol);
        }
    }
    if (best) return *best;
    return {false, {}};
}

WcmSolution solve_wcm_rank_p_first(const WcmInstance& inst) {
    inst.validate();
    if (!std::holds_alternative<rule::Condorcet>(inst.rule) && !std::holds_alternative<rule::WeakCondorcet>(inst.rule))
        throw UnsupportedRule("rank-p-first is exact only for Condorcet and weakCondorcet");
    const std::vector<CandidateIndex> top{inst.preferred};
    WcmSolution sol{false, {}};
    for (auto w : inst.manipulator_weights) sol.manipulators.push_back(vote_from_top(w, top, inst.size()));
    sol.feasible = verify_wcm(inst, sol.manipulators);
    if (!sol.feasible) sol.manipulators.clear();
    return sol;
}

}  // namespace wvc
