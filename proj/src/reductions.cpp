#include "wvc/reductions.hpp"

#include <algorithm>
#include <set>

namespace wvc {

Solution ReducedInstance::map_back(const Solution& target_solution) const {
    Solution out{target_solution.feasible, {}};
    for (auto i : target_solution.chosen) out.chosen.push_back(back_map.at(i));
    std::sort(out.chosen.begin(), out.chosen.end());
    return out;
}

std::string fresh_name(const std::vector<std::string>& taken, const std::string& base) {
    const std::set<std::string> names(taken.begin(), taken.end());
    if (!names.count(base)) return base;
    for (std::size_t i = 1;; ++i) {
        auto candidate = base + "_" + std::to_string(i);
        if (!names.count(candidate)) return candidate;
    }
}

namespace {

Weight max_weight(const std::vector<WeightedVote>& votes) {
    Weight w = 1;
    for (const auto& v : votes) w = std::max(w, v.weight);
    return w;
}

CandidateIndex add_candidate(std::vector<std::string>& names, const std::string& base) {
    names.push_back(fresh_name(names, base));
    return names.size() - 1;
}

void require_wider_than_t(const ControlInstance& inst, std::size_t t) {
    if (inst.size() <= t)
        throw ConstructionError("reduction needs more than t = " + std::to_string(t) + " candidates");
}

}  // namespace

ReducedInstance reduce_tveto_wccdv_to_tapproval_wccav(const ControlInstance& inst) {
    inst.validate();
    if (inst.kind != ControlKind::WCCDV || !std::holds_alternative<rule::TVeto>(inst.rule))
        throw UnsupportedRule("expects a t-veto WCCDV instance");
    const auto t = std::get<rule::TVeto>(inst.rule).t;
    require_wider_than_t(inst, t);
    const auto m = inst.size();
    const auto& V = inst.registered;
    const auto n = V.size();
    const auto w_max = max_weight(V);

    std::vector<std::string> names = inst.candidates;
    const auto pad = (t - m % t) % t;
    for (std::size_t i = 0; i < pad; ++i) add_candidate(names, "_pad" + std::to_string(i + 1));
    // C_i: (t-1)(m-t) fresh candidates per source vote
    std::vector<std::vector<CandidateIndex>> filler(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < (t - 1) * (m - t); ++j)
            filler[i].push_back(add_candidate(names, "_f" + std::to_string(i + 1) + "_" + std::to_string(j + 1)));
    const auto m2 = names.size();

    ReducedInstance out;
    auto& target = out.target;
    target.kind = ControlKind::WCCAV;
    target.rule = rule::TApproval{t};
    target.preferred = inst.preferred;
    target.budget = inst.budget;

    // V_0: every candidate of C u D approved exactly once, at weight w_max
    for (std::size_t q = 0; q < (m + pad) / t; ++q) {
        std::vector<CandidateIndex> top;
        for (std::size_t j = 0; j < t; ++j) top.push_back(q * t + j);
        target.registered.push_back(vote_from_top(w_max, top, m2));
    }
    // V_i: one voter per candidate v_i approves, padded with t-1 fillers each
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m - t; ++j) {
            std::vector<CandidateIndex> top{V[i].prefs[j]};
            for (std::size_t f = 0; f + 1 < t; ++f) top.push_back(filler[i][j * (t - 1) + f]);
            target.registered.push_back(vote_from_top(V[i].weight, top, m2));
        }
    }
    // w_i approves exactly what v_i vetoes
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<CandidateIndex> vetoed(V[i].prefs.end() - static_cast<std::ptrdiff_t>(t), V[i].prefs.end());
        target.unregistered.push_back(vote_from_top(V[i].weight, vetoed, m2));
        out.back_map.push_back(i);
    }
    target.candidates = std::move(names);
    return out;
}

ReducedInstance reduce_tapproval_wccdv_to_tveto_wccav(const ControlInstance& inst) {
    inst.validate();
    if (inst.kind != ControlKind::WCCDV || !std::holds_alternative<rule::TApproval>(inst.rule))
        throw UnsupportedRule("expects a t-approval WCCDV instance");
    const auto t = std::get<rule::TApproval>(inst.rule).t;
    require_wider_than_t(inst, t);
    const auto m = inst.size();
    const auto& V = inst.registered;
    const auto n = V.size();
    const auto w_max = max_weight(V);

    // t <= |D| <= 2t-1 with m + |D| = s*t; m > t forces s >= 3
    const auto pad = t + (t - m % t) % t;
    const auto s = (m + pad) / t;
    std::vector<std::string> names = inst.candidates;
    std::vector<CandidateIndex> D;
    for (std::size_t i = 0; i < pad; ++i) D.push_back(add_candidate(names, "_pad" + std::to_string(i + 1)));
    const auto m2 = names.size();

    ReducedInstance out;
    auto& target = out.target;
    target.kind = ControlKind::WCCAV;
    target.rule = rule::TVeto{t};
    target.preferred = inst.preferred;
    target.budget = inst.budget;

    // V_0: every original candidate approved, every padding candidate vetoed
    // in at least half the votes (alternate the first and last t of D)
    const std::vector<CandidateIndex> low(D.begin(), D.begin() + static_cast<std::ptrdiff_t>(t));
    const std::vector<CandidateIndex> high(D.end() - static_cast<std::ptrdiff_t>(t), D.end());
    for (std::size_t q = 0; q < 4 * n * (s - 2); ++q)
        target.registered.push_back(vote_from_bottom(w_max, q % 2 == 0 ? low : high, m2));

    // V_i: v_i's top t stay on top; the rest rotate by t so each lands in
    // the vetoed block exactly once over s-1 votes
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<CandidateIndex> top(V[i].prefs.begin(), V[i].prefs.begin() + static_cast<std::ptrdiff_t>(t));
        std::vector<CandidateIndex> rest;
        for (CandidateIndex c = 0; c < m2; ++c)
            if (std::find(top.begin(), top.end(), c) == top.end()) rest.push_back(c);
        for (std::size_t r = 0; r + 1 < s; ++r) {
            WeightedVote v{V[i].weight, top};
            for (std::size_t j = 0; j < rest.size(); ++j) v.prefs.push_back(rest[(j + r * t) % rest.size()]);
            target.registered.push_back(std::move(v));
        }
    }
    // w_i vetoes exactly what v_i approves
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<CandidateIndex> top(V[i].prefs.begin(), V[i].prefs.begin() + static_cast<std::ptrdiff_t>(t));
        target.unregistered.push_back(vote_from_bottom(V[i].weight, top, m2));
        out.back_map.push_back(i);
    }
    target.candidates = std::move(names);
    return out;
}

}  // namespace wvc
