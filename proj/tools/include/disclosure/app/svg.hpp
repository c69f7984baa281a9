#pragma once

#include <string>

#include "disclosure/partition.hpp"

namespace disclosure::app {

/// Allocation regions of the two-uniform auction on [0,1]^2: blue where A
/// wins, green where B wins, white for no sale, dashed red message
/// boundaries. 1000x1000 viewport with v_B increasing upward. Throws
/// AssertionFailure if the region areas do not sum to exactly 1.
std::string allocation_svg(const IntervalPartition& pa, const IntervalPartition& pb);

}  // namespace disclosure::app
