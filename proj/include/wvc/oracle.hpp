#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wvc/control.hpp"

namespace wvc {

struct OracleOptions {
    /// Largest pool `brute_force_control` accepts.
    std::size_t pool_cap = 20;
    /// Upper bound on candidate subsets / count vectors / orderings examined.
    std::uint64_t eval_cap = 200'000'000;
};

/// Registered-voter tally plus one contribution row per pool voter, signed
/// for the direction of the problem. Subset evaluation is a sum of rows.
class TallyKernel {
public:
    explicit TallyKernel(const ControlInstance& inst);

    std::size_t width() const { return base_.size(); }
    std::size_t pool_size() const { return pool_size_; }
    std::span<const Weight> base() const { return base_; }
    std::span<const Weight> row(std::size_t i) const { return {rows_.data() + i * width(), width()}; }

    /// True iff the problem's goal holds for `tally`.
    bool goal(std::span<const Weight> tally) const;
    /// Evaluates a subset, using `scratch` (width() entries) as workspace.
    bool success(std::span<const std::size_t> subset, std::span<Weight> scratch) const;

private:
    RuleSpec rule_;
    std::size_t m_ = 0;
    CandidateIndex preferred_ = 0;
    bool constructive_ = true;
    std::size_t pool_size_ = 0;
    std::vector<Weight> base_;
    std::vector<Weight> rows_;
};

/// Exhaustive minimum-cardinality search over pool subsets of size <= budget,
/// by increasing size, lexicographic within a size. OpenMP-parallel; returns
/// exactly the witness the serial search would.
Solution brute_force_control(const ControlInstance& inst, const OracleOptions& opt = {});

/// Same search, one `verify_solution` call per subset. Reference for tests
/// and benchmarks.
Solution brute_force_control_serial(const ControlInstance& inst, const OracleOptions& opt = {});

/// Exact search that treats pool voters with identical contributions as
/// interchangeable and enumerates how many of each class to take. Same
/// verdict and optimum size as `brute_force_control`; the witness takes the
/// lowest-indexed members of each class. Not bound by `pool_cap`; the
/// evaluation cap counts only the sizes actually searched. For t-approval
/// and t-veto constructive control, votes that cannot help p are skipped.
Solution brute_force_control_grouped(const ControlInstance& inst, const OracleOptions& opt = {});

/// Exact WCM decision by enumerating every ranking for every manipulator.
WcmSolution brute_force_wcm(const WcmInstance& inst, const OracleOptions& opt = {});

/// C(n, k) saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace wvc
