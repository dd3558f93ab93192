#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wvc/control.hpp"

namespace wvc {

// ---------------------------------------------------------------------------
// Source problems and their oracles

/// Exact cover by 3-sets where every element lies in one to three sets.
/// Elements are 0..3t-1.
struct X3cInstance {
    std::size_t t = 0;
    std::vector<std::array<std::size_t, 3>> sets;

    std::size_t elements() const { return 3 * t; }
    /// How many sets contain each element.
    std::vector<std::size_t> occurrences() const;
    void validate() const;
};

/// Throws ValidationError unless all ks are positive with an even sum.
void validate_partition(const std::vector<Weight>& ks);
/// Also requires an even count and every k_i >= sum / (count + 1).
void validate_partition_prime(const std::vector<Weight>& ks);

/// Indices of a subset summing to half the total, if one exists (DP).
std::optional<std::vector<std::size_t>> solve_partition(const std::vector<Weight>& ks);
/// As above, restricted to subsets of exactly half the items.
std::optional<std::vector<std::size_t>> solve_partition_prime(const std::vector<Weight>& ks);
/// Indices of t pairwise disjoint sets, if one exists (backtracking).
std::optional<std::vector<std::size_t>> solve_x3c(const X3cInstance& src);

// ---------------------------------------------------------------------------
// Labeled instances

struct Provenance {
    std::string family;
    std::vector<std::pair<std::string, std::string>> params;

    const std::string* find(const std::string& key) const;
};

struct GeneratedInstance {
    ControlInstance control;
    bool label = false;  // ground truth from the source oracle
    Provenance provenance;
};

enum class HardMode { Wccav, Wccdv };

/// Borda with m >= 3 candidates p, a, b, ... from a Partition instance.
GeneratedInstance gen_borda_partition(const std::vector<Weight>& ks, HardMode mode, std::size_t m = 3);

/// Any scoring vector with at least three distinct values. WCCAV reduces from
/// Partition with T = 1; WCCDV reduces from Partition' with the large T.
/// `T` overrides the group size when given.
GeneratedInstance gen_scoring_partitionprime(const ScoringVector& alpha, const std::vector<Weight>& ks, HardMode mode,
                                             std::optional<Weight> T = std::nullopt);
/// Group size the WCCDV construction uses for ks.size() = t and top values g1 > g2.
Weight partition_prime_group_size(std::size_t t, Weight g1, Weight g2);

/// Condorcet-style construction with m >= 3. `rule` must be pairwise
/// (Condorcet, weakCondorcet, Copeland, Maximin).
GeneratedInstance gen_condorcet_partition(const std::vector<Weight>& ks, HardMode mode, std::size_t m = 3,
                                          RuleSpec rule = rule::Condorcet{});

/// 2-approval WCCDV from X3C'. Default weights {1, 2}; any w2 > w1 > 0 with
/// `weights`.
GeneratedInstance gen_x3c_2approval_wccdv(const X3cInstance& src,
                                          std::optional<std::pair<Weight, Weight>> weights = std::nullopt);
/// Smallest l with l * w1 > max(2 w1, w2).
Weight x3c_padding_multiplier(Weight w1, Weight w2);

/// 3-veto WCCDV from X3C', weights {1, 3}.
GeneratedInstance gen_x3c_3veto_wccdv(const X3cInstance& src);

enum class WorstCaseMode { TApprovalWccav, TVetoWccdv };

/// Instances on which greedy-by-weight takes t steps while one suffices.
/// Candidates p, a_1..a_t, d_1..d_{t-1}.
GeneratedInstance gen_gbw_worstcase(std::size_t t, WorstCaseMode mode);

/// t-approval votes over 2t candidates realizing `gaps` (2t-1 multiples of t)
/// over the last candidate, which ends up least approved. Candidate i < 2t-1
/// gets gaps[i]. Unweighted: (2t-1) * sum/t weight-1 votes. Weighted: 2t-1
/// votes per nonzero gap. Throws ValidationError for other inputs.
std::vector<WeightedVote> realize_gaps(std::size_t t, const std::vector<Weight>& gaps, bool weighted);

}  // namespace wvc
