#include "wvc/control.hpp"

#include <algorithm>

namespace wvc {

std::string kind_name(ControlKind k) {
    switch (k) {
        case ControlKind::WCCAV: return "wccav";
        case ControlKind::WCCDV: return "wccdv";
        case ControlKind::WDCAV: return "wdcav";
        case ControlKind::WDCDV: return "wdcdv";
    }
    return "?";
}

void ControlInstance::validate() const {
    base().validate();
    for (const auto& v : unregistered) validate_vote(v, size());
    validate_rule(rule, size());
    if (preferred >= size()) throw ValidationError("preferred candidate index out of range");
    if (!is_adding(kind) && !unregistered.empty())
        throw ValidationError("deleting problems take no unregistered voters");
}

void WcmInstance::validate() const {
    Election{candidates, registered}.validate();
    validate_rule(rule, size());
    if (preferred >= size()) throw ValidationError("preferred candidate index out of range");
    for (auto w : manipulator_weights)
        if (w < 1) throw ValidationError("manipulator weights must be positive");
}

Election apply_solution(const ControlInstance& inst, const std::vector<std::size_t>& chosen) {
    const auto& pool = inst.pool();
    std::vector<bool> picked(pool.size(), false);
    for (auto i : chosen) {
        if (i >= pool.size()) throw ValidationError("solution index " + std::to_string(i) + " out of range");
        if (picked[i]) throw ValidationError("solution index " + std::to_string(i) + " repeated");
        picked[i] = true;
    }
    Election e{inst.candidates, {}};
    if (is_adding(inst.kind)) {
        e.votes = inst.registered;
        for (auto i : chosen) e.votes.push_back(pool[i]);
    } else {
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (!picked[i]) e.votes.push_back(pool[i]);
    }
    return e;
}

bool verify_solution(const ControlInstance& inst, const std::vector<std::size_t>& chosen) {
    const bool wins = is_winner(apply_solution(inst, chosen), inst.rule, inst.preferred);
    return is_constructive(inst.kind) ? wins : !wins;
}

bool verify_wcm(const WcmInstance& inst, const std::vector<WeightedVote>& manipulators) {
    if (manipulators.size() != inst.manipulator_weights.size()) return false;
    Election e{inst.candidates, inst.registered};
    for (std::size_t i = 0; i < manipulators.size(); ++i) {
        validate_vote(manipulators[i], inst.size());
        if (manipulators[i].weight != inst.manipulator_weights[i]) return false;
        e.votes.push_back(manipulators[i]);
    }
    return is_winner(e, inst.rule, inst.preferred);
}

std::size_t approval_width(const RuleSpec& r, std::size_t m) {
    if (auto* a = std::get_if<rule::TApproval>(&r)) return a->t;
    if (auto* v = std::get_if<rule::TVeto>(&r)) return m - v->t;
    throw UnsupportedRule("rule " + rule_name(r) + " is not t-approval or t-veto");
}

bool feasibility_precheck(const ControlInstance& inst) {
    if (inst.kind == ControlKind::WCCDV) {
        if (!positional_vector(inst.rule, inst.size()))
            throw UnsupportedRule("deleting-voters precheck needs a positional rule");
        return true;
    }
    if (inst.kind != ControlKind::WCCAV) throw UnsupportedRule("precheck covers constructive control only");
    const auto width = approval_width(inst.rule, inst.size());
    std::vector<std::size_t> approvers;
    for (std::size_t i = 0; i < inst.unregistered.size(); ++i)
        if (inst.unregistered[i].approval(width)[inst.preferred]) approvers.push_back(i);
    return verify_solution(inst, approvers);
}

}  // namespace wvc
