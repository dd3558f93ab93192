#include "wvc/approx.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wvc {

void WmcInstance::validate() const {
    if (requirements.size() != elements.size())
        throw ValidationError("WMC needs one requirement per element");
    if (weights.size() != sets.size()) throw ValidationError("WMC needs one weight per set");
    for (auto r : requirements)
        if (r < 0) throw ValidationError("WMC requirements must be nonnegative");
    for (auto w : weights)
        if (w < 1) throw ValidationError("WMC set weights must be positive");
    for (const auto& s : sets)
        for (auto j : s)
            if (j >= elements.size()) throw ValidationError("WMC set references a missing element");
}

bool wmc_satisfied(const WmcInstance& w, std::span<const std::size_t> chosen) {
    auto residual = w.requirements;
    for (auto i : chosen)
        for (auto j : w.sets.at(i)) residual[j] = checked_sub(residual[j], w.weights[i]);
    return std::all_of(residual.begin(), residual.end(), [](Weight r) { return r <= 0; });
}

Solution WmcTranslation::to_solution(std::span<const std::size_t> cover) const {
    Solution s{true, {}};
    for (auto i : cover) s.chosen.push_back(set_to_pool.at(i));
    std::sort(s.chosen.begin(), s.chosen.end());
    return s;
}

namespace {

ScoreTable approval_scores(const std::vector<std::string>& candidates, const std::vector<WeightedVote>& votes,
                           std::size_t width) {
    return score_election(Election{candidates, votes}, ScoringVector::approval(candidates.size(), width));
}

Weight total_surplus(const ScoreTable& scores, CandidateIndex p) {
    Weight s = 0;
    for (std::size_t c = 0; c < scores.size(); ++c)
        if (c != p && scores[c] > scores[p]) s = checked_add(s, scores[c] - scores[p]);
    return s;
}

bool leads(const ScoreTable& scores, CandidateIndex p) {
    return std::none_of(scores.begin(), scores.end(), [&](Weight s) { return s > scores[p]; });
}

// weight desc, approval vector asc, index asc
std::vector<std::size_t> gbw_order(const std::vector<WeightedVote>& pool, std::vector<std::size_t> idx,
                                   std::size_t width) {
    std::vector<std::vector<bool>> masks(pool.size());
    for (auto i : idx) masks[i] = pool[i].approval(width);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (pool[a].weight != pool[b].weight) return pool[a].weight > pool[b].weight;
        if (masks[a] != masks[b]) return masks[a] < masks[b];
        return a < b;
    });
    return idx;
}

GreedyRun gbw(const ControlInstance& inst, bool adding) {
    inst.validate();
    const auto m = inst.size();
    const auto width = approval_width(inst.rule, m);
    const auto p = inst.preferred;
    const auto& pool = inst.pool();

    auto scores = approval_scores(inst.candidates, inst.registered, width);
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (pool[i].approval(width)[p] == adding) eligible.push_back(i);

    GreedyRun run;
    run.surplus.push_back(total_surplus(scores, p));
    for (auto i : gbw_order(pool, eligible, width)) {
        if (leads(scores, p)) break;
        const auto mask = pool[i].approval(width);
        bool addresses = false;
        for (std::size_t c = 0; c < m && !addresses; ++c)
            // adding helps against candidates the vote does not approve,
            // deleting against those it does
            addresses = c != p && scores[c] > scores[p] && mask[c] != adding;
        if (!addresses) continue;
        for (std::size_t c = 0; c < m; ++c)
            if (mask[c]) scores[c] = adding ? checked_add(scores[c], pool[i].weight) : checked_sub(scores[c], pool[i].weight);
        run.order.push_back(i);
        run.surplus.push_back(total_surplus(scores, p));
    }
    run.solution.feasible = leads(scores, p);
    if (run.solution.feasible) {
        run.solution.chosen = run.order;
        std::sort(run.solution.chosen.begin(), run.solution.chosen.end());
    }
    return run;
}

}  // namespace

GreedyRun gbw_add(const ControlInstance& inst) {
    if (inst.kind != ControlKind::WCCAV) throw UnsupportedRule("gbw_add expects WCCAV");
    return gbw(inst, true);
}

GreedyRun gbw_delete(const ControlInstance& inst) {
    if (inst.kind != ControlKind::WCCDV) throw UnsupportedRule("gbw_delete expects WCCDV");
    return gbw(inst, false);
}

// ---------------------------------------------------------------------------

WmcTranslation to_wmc(const ControlInstance& inst) {
    inst.validate();
    if (inst.kind != ControlKind::WCCAV) throw UnsupportedRule("to_wmc expects WCCAV");
    const auto m = inst.size();
    const auto width = approval_width(inst.rule, m);
    const auto p = inst.preferred;
    const auto scores = approval_scores(inst.candidates, inst.registered, width);

    WmcTranslation out;
    std::vector<std::size_t> element_of(m, m);
    for (CandidateIndex c = 0; c < m; ++c) {
        if (c == p) continue;
        element_of[c] = out.wmc.elements.size();
        out.wmc.elements.push_back(c);
        out.wmc.requirements.push_back(std::max<Weight>(0, checked_sub(scores[c], scores[p])));
    }
    for (std::size_t i = 0; i < inst.unregistered.size(); ++i) {
        const auto mask = inst.unregistered[i].approval(width);
        if (!mask[p]) continue;
        std::vector<std::size_t> set;
        for (CandidateIndex c = 0; c < m; ++c)
            if (!mask[c]) set.push_back(element_of[c]);
        out.wmc.sets.push_back(std::move(set));
        out.wmc.weights.push_back(inst.unregistered[i].weight);
        out.set_to_pool.push_back(i);
    }
    return out;
}

WmcTranslation wccdv_to_wmc(const ControlInstance& inst) {
    inst.validate();
    if (inst.kind != ControlKind::WCCDV) throw UnsupportedRule("wccdv_to_wmc expects WCCDV");
    ReducedInstance reduced;
    if (std::holds_alternative<rule::TVeto>(inst.rule))
        reduced = reduce_tveto_wccdv_to_tapproval_wccav(inst);
    else if (std::holds_alternative<rule::TApproval>(inst.rule))
        reduced = reduce_tapproval_wccdv_to_tveto_wccav(inst);
    else
        throw UnsupportedRule("wccdv_to_wmc needs t-approval or t-veto");
    auto out = to_wmc(reduced.target);
    for (auto& i : out.set_to_pool) i = reduced.back_map.at(i);
    return out;
}

std::optional<std::vector<std::size_t>> greedy_wmc(const WmcInstance& w) {
    w.validate();
    auto residual = w.requirements;
    {
        std::vector<Weight> reach(residual.size(), 0);
        for (std::size_t i = 0; i < w.sets.size(); ++i)
            for (auto j : w.sets[i]) reach[j] = checked_add(reach[j], w.weights[i]);
        for (std::size_t j = 0; j < residual.size(); ++j)
            if (residual[j] > reach[j]) return std::nullopt;
    }
    std::vector<bool> taken(w.sets.size(), false);
    std::vector<std::size_t> cover;
    auto unmet = [&] { return std::any_of(residual.begin(), residual.end(), [](Weight r) { return r > 0; }); };
    while (unmet()) {
        std::size_t best = w.sets.size();
        Weight best_gain = 0;
        for (std::size_t i = 0; i < w.sets.size(); ++i) {
            if (taken[i]) continue;
            Weight gain = 0;
            for (auto j : w.sets[i])
                if (residual[j] > 0) gain = checked_add(gain, std::min(w.weights[i], residual[j]));
            if (gain > best_gain) {
                best_gain = gain;
                best = i;
            }
        }
        if (best == w.sets.size()) return std::nullopt;
        taken[best] = true;
        cover.push_back(best);
        for (auto j : w.sets[best]) residual[j] = std::max<Weight>(0, residual[j] - w.weights[best]);
    }
    return cover;
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> GapReport::lower_bound() const {
    std::size_t best = 0;
    for (std::size_t c = 0; c < gaps.size(); ++c) {
        if (gaps[c] <= 0) continue;
        if (!lower_bounds[c]) return std::nullopt;
        best = std::max(best, *lower_bounds[c]);
    }
    return best;
}

GapReport gap_report(const ControlInstance& inst) {
    inst.validate();
    const auto m = inst.size();
    const auto width = approval_width(inst.rule, m);
    const auto p = inst.preferred;
    const bool adding = is_adding(inst.kind);
    const auto& pool = inst.pool();
    const auto scores = approval_scores(inst.candidates, inst.registered, width);

    std::vector<std::size_t> all(pool.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::vector<std::size_t> order = all;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return pool[a].weight > pool[b].weight; });

    GapReport r{std::vector<Weight>(m, 0), std::vector<std::optional<std::size_t>>(m)};
    for (CandidateIndex d = 0; d < m; ++d) {
        if (d == p || scores[d] <= scores[p]) continue;
        r.gaps[d] = scores[d] - scores[p];
        Weight closed = 0;
        std::size_t used = 0;
        for (auto i : order) {
            const auto mask = pool[i].approval(width);
            // adding: approves p, not d; deleting: approves d, not p
            const bool helps = adding ? (mask[p] && !mask[d]) : (!mask[p] && mask[d]);
            if (!helps) continue;
            closed = checked_add(closed, pool[i].weight);
            ++used;
            if (closed >= r.gaps[d]) break;
        }
        if (closed >= r.gaps[d]) r.lower_bounds[d] = used;
    }
    return r;
}

std::optional<std::size_t> unbudgeted_optimum(const ControlInstance& inst, const OracleOptions& opt) {
    auto open = inst;
    open.budget = inst.pool().size();
    const auto sol = brute_force_control_grouped(open, opt);
    if (!sol.feasible) return std::nullopt;
    return sol.chosen.size();
}

ApproxResult approx_control(const ControlInstance& inst, ApproxMethod method, const OracleOptions* oracle) {
    inst.validate();
    if (inst.kind != ControlKind::WCCAV && inst.kind != ControlKind::WCCDV)
        throw UnsupportedRule("approximation covers WCCAV and WCCDV");
    ApproxResult out;
    out.gaps = gap_report(inst);
    if (!feasibility_precheck(inst)) {
        out.solution = {false, {}};
    } else if (method == ApproxMethod::Gbw) {
        out.solution = (inst.kind == ControlKind::WCCAV ? gbw_add(inst) : gbw_delete(inst)).solution;
    } else {
        const auto tr = inst.kind == ControlKind::WCCAV ? to_wmc(inst) : wccdv_to_wmc(inst);
        const auto cover = greedy_wmc(tr.wmc);
        out.solution = cover ? tr.to_solution(*cover) : Solution{false, {}};
    }
    if (out.solution.feasible && !verify_solution(inst, out.solution))
        throw std::logic_error("approximation produced a witness that does not verify");
    if (oracle) {
        try {
            out.optimum = unbudgeted_optimum(inst, *oracle);
        } catch (const CapExceeded&) {
            out.optimum.reset();
        }
        if (out.optimum && out.solution.feasible)
            out.ratio = *out.optimum == 0 ? 1.0
                                          : static_cast<double>(out.solution.chosen.size()) /
                                                static_cast<double>(*out.optimum);
    }
    return out;
}

}  // namespace wvc
