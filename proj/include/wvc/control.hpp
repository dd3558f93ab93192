#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wvc/election.hpp"

namespace wvc {

enum class ControlKind { WCCAV, WCCDV, WDCAV, WDCDV };

inline bool is_adding(ControlKind k) { return k == ControlKind::WCCAV || k == ControlKind::WDCAV; }
inline bool is_constructive(ControlKind k) { return k == ControlKind::WCCAV || k == ControlKind::WCCDV; }
std::string kind_name(ControlKind k);

/// Weighted control by adding or deleting voters.
///
/// The budget counts voters, not weight. For adding problems the pool is
/// `unregistered`; for deleting problems it is `registered` and
/// `unregistered` must be empty.
struct ControlInstance {
    ControlKind kind = ControlKind::WCCAV;
    RuleSpec rule = rule::TApproval{1};
    std::vector<std::string> candidates;
    std::vector<WeightedVote> registered;
    std::vector<WeightedVote> unregistered;
    CandidateIndex preferred = 0;
    std::size_t budget = 0;

    std::size_t size() const { return candidates.size(); }
    /// The voters a solution picks from.
    const std::vector<WeightedVote>& pool() const { return is_adding(kind) ? unregistered : registered; }
    Election base() const { return {candidates, registered}; }
    void validate() const;
};

/// Weighted coalitional manipulation: exactly one manipulator per weight.
struct WcmInstance {
    RuleSpec rule = rule::Condorcet{};
    std::vector<std::string> candidates;
    std::vector<WeightedVote> registered;
    CandidateIndex preferred = 0;
    std::vector<Weight> manipulator_weights;

    std::size_t size() const { return candidates.size(); }
    void validate() const;
};

/// Indices into the instance's pool.
struct Solution {
    bool feasible = false;
    std::vector<std::size_t> chosen;
};

struct WcmSolution {
    bool feasible = false;
    std::vector<WeightedVote> manipulators;
};

/// (C, V+W') or (C, V-V'). Throws ValidationError on out-of-range or
/// duplicate indices.
Election apply_solution(const ControlInstance& inst, const std::vector<std::size_t>& chosen);

/// Re-evaluates the rule from scratch on the modified election. Ignores the
/// budget; use `within_budget` for the cardinality check.
bool verify_solution(const ControlInstance& inst, const std::vector<std::size_t>& chosen);
inline bool verify_solution(const ControlInstance& inst, const Solution& sol) {
    return verify_solution(inst, sol.chosen);
}
inline bool within_budget(const ControlInstance& inst, const Solution& sol) {
    return sol.chosen.size() <= inst.budget;
}

bool verify_wcm(const WcmInstance& inst, const std::vector<WeightedVote>& manipulators);

/// Whether some solution exists at all, ignoring the budget. Constructive
/// deleting under any positional rule is always feasible; constructive adding
/// under t-approval/t-veto is feasible iff adding every pool voter who
/// approves p makes p win. Throws UnsupportedRule otherwise.
bool feasibility_precheck(const ControlInstance& inst);

/// Approval width of an approval-style rule on m candidates: t for
/// t-approval, m - t for t-veto. Throws UnsupportedRule for other rules.
std::size_t approval_width(const RuleSpec& r, std::size_t m);

}  // namespace wvc
