#pragma once

#include <cstdint>
#include <random>

#include "wvc/control.hpp"
#include "wvc/generators.hpp"

namespace wvc {

using Rng = std::mt19937_64;

struct RandomSpec {
    ControlKind kind = ControlKind::WCCAV;
    RuleSpec rule = rule::TApproval{1};
    std::size_t m = 3;
    std::size_t registered = 3;
    std::size_t pool = 3;  // unregistered voters; ignored for deleting kinds
    Weight max_weight = 5;
    std::size_t budget = 3;
};

/// Uniform ranking with weight in [1, max_weight].
WeightedVote random_vote(Rng& rng, std::size_t m, Weight max_weight);
ControlInstance random_control(Rng& rng, const RandomSpec& spec);

/// n numbers in [1, max_value] with an even sum.
std::vector<Weight> random_partition(Rng& rng, std::size_t n, Weight max_value);
/// n numbers (n even) satisfying the Partition' lower bound, drawn from
/// [lo, lo + spread].
std::vector<Weight> random_partition_prime(Rng& rng, std::size_t n, Weight lo, Weight spread);
/// A valid X3C' family of n distinct sets over 3t elements. Throws
/// ValidationError if none was found after many draws.
X3cInstance random_x3c(Rng& rng, std::size_t t, std::size_t n);

}  // namespace wvc
