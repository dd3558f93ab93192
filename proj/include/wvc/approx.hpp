#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wvc/control.hpp"
#include "wvc/oracle.hpp"
#include "wvc/reductions.hpp"

namespace wvc {

/// Weighted multicover: pick the fewest sets so that every element j is
/// covered with total weight at least requirements[j]. A chosen set of weight
/// w covers each of its elements w times.
struct WmcInstance {
    /// Candidate index each element stands for (informational).
    std::vector<CandidateIndex> elements;
    std::vector<Weight> requirements;
    /// Element positions (into `elements`) of each set.
    std::vector<std::vector<std::size_t>> sets;
    std::vector<Weight> weights;

    void validate() const;
};

bool wmc_satisfied(const WmcInstance& w, std::span<const std::size_t> chosen);

/// A WMC instance whose set i stands for pool voter `set_to_pool[i]` of the
/// originating control instance.
struct WmcTranslation {
    WmcInstance wmc;
    std::vector<std::size_t> set_to_pool;

    Solution to_solution(std::span<const std::size_t> cover) const;
};

/// t-approval/t-veto WCCAV -> WMC. Elements are C - {p} with requirement
/// score(c) - score(p) clipped at 0; every pool voter approving p becomes the
/// set of candidates it does not approve.
WmcTranslation to_wmc(const ControlInstance& inst);

/// t-approval/t-veto WCCDV -> WMC through the add/delete reduction, with
/// `set_to_pool` pointing into the source instance's registered voters.
WmcTranslation wccdv_to_wmc(const ControlInstance& inst);

/// Greedy multicover: repeatedly take the set with the largest residual
/// coverage sum_j min(weight, residual_j), lowest index on ties. Sets in the
/// order taken, or nullopt when no cover exists.
std::optional<std::vector<std::size_t>> greedy_wmc(const WmcInstance& w);

/// Per-rival gaps over p and the heaviest-first number of pool voters needed
/// to close each gap on its own.
struct GapReport {
    std::vector<Weight> gaps;                           // 0 for p and for rivals not ahead
    std::vector<std::optional<std::size_t>> lower_bounds;  // set only for rivals ahead of p
    /// max over rivals ahead of p; nullopt if some gap cannot be closed
    std::optional<std::size_t> lower_bound() const;
};

GapReport gap_report(const ControlInstance& inst);

struct GreedyRun {
    Solution solution;
    /// pool indices in the order greedy took them
    std::vector<std::size_t> order;
    /// sum over rivals of max(0, score(c) - score(p)), before and after each step
    std::vector<Weight> surplus;
};

/// Greedy-by-weight WCCAV for t-approval/t-veto.
GreedyRun gbw_add(const ControlInstance& inst);
/// Greedy-by-weight WCCDV for t-approval/t-veto.
GreedyRun gbw_delete(const ControlInstance& inst);

enum class ApproxMethod { Gbw, Multicover };

struct ApproxResult {
    Solution solution;
    GapReport gaps;
    std::optional<std::size_t> optimum;  // nullopt: oracle not run or capped
    std::optional<double> ratio;
};

/// Runs a method, checks the result with `verify_solution` and, if `oracle`
/// is given, compares against the exact optimum (budget ignored).
ApproxResult approx_control(const ControlInstance& inst, ApproxMethod method,
                            const OracleOptions* oracle = nullptr);

/// Exact optimum ignoring the budget, through the grouped oracle. nullopt if
/// infeasible; throws CapExceeded.
std::optional<std::size_t> unbudgeted_optimum(const ControlInstance& inst, const OracleOptions& opt);

}  // namespace wvc
