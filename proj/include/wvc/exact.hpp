#pragma once

#include <cstddef>

#include "wvc/control.hpp"

namespace wvc {

/// Fixed-m t-approval (or t-veto, read as (m-t)-approval) WCCAV/WCCDV by
/// enumerating how many voters to take from each approval class, always the
/// heaviest ones. Minimum-cardinality witness or infeasible within budget.
/// Exponential in C(m-1, t-1); polynomial for fixed m.
Solution solve_fixed_m_tapproval(const ControlInstance& inst);

/// Outcome of the 2-approval WCCAV pruning algorithm. `pruned` holds the
/// pool indices left after pruning; on accept, `solution.chosen` is the
/// budget-many heaviest of them (or all, when fewer remain).
struct TwoApprovalTrace {
    Solution solution;
    std::vector<std::size_t> pruned;
    std::size_t passes = 0;
};

/// Polynomial-time 2-approval WCCAV for any number of candidates.
TwoApprovalTrace solve_2approval_wccav(const ControlInstance& inst);

/// 2-veto WCCDV: reduce to 2-approval WCCAV, run the pruning algorithm, map
/// the added voters back to deleted ones.
Solution solve_2veto_wccdv(const ControlInstance& inst);

/// WDCAV/WDCDV under any positional rule: for each rival, take the voters
/// that most help the rival against p. Minimum cardinality or infeasible.
Solution solve_destructive_scoring(const ControlInstance& inst);

/// WCM for Condorcet/weakCondorcet: every manipulator ranks p first, the rest
/// by ascending index.
WcmSolution solve_wcm_rank_p_first(const WcmInstance& inst);

/// Pool indices sorted heaviest first; ties by preference order, then index.
std::vector<std::size_t> heaviest_first(const std::vector<WeightedVote>& pool, std::vector<std::size_t> idx);

}  // namespace wvc
