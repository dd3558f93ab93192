#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wvc/control.hpp"

namespace wvc {

/// A target instance plus the map from its pool back to the source pool.
struct ReducedInstance {
    ControlInstance target;
    std::vector<std::size_t> back_map;

    /// Carries a target witness to the source pool (sorted).
    Solution map_back(const Solution& target_solution) const;
};

/// t-veto WCCDV -> t-approval WCCAV. Deleting source voter v_i has the same
/// effect on the original candidates' relative scores as adding target voter
/// w_i. Throws ConstructionError unless m > t.
ReducedInstance reduce_tveto_wccdv_to_tapproval_wccav(const ControlInstance& inst);

/// t-approval WCCDV -> t-veto WCCAV. Same idea; padding candidates trail
/// every original candidate by at least n * w_max. Throws ConstructionError
/// unless m > t.
ReducedInstance reduce_tapproval_wccdv_to_tveto_wccav(const ControlInstance& inst);

/// `base`, or `base` with a numeric suffix, whichever is not in `taken`.
std::string fresh_name(const std::vector<std::string>& taken, const std::string& base);

}  // namespace wvc
