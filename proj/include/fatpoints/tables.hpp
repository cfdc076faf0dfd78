#pragma once

#include "fatpoints/divisor.hpp"

#include <vector>

namespace fatpoints {

/// The embedded exceptional-case fixture: the 35 systems L(d,m0,5^r),
/// 12 <= d <= 33, for which no (k,b)-degeneration settles the dimension
/// directly.  Mirrored by data/table4.json.
const std::vector<QuasiHomSystem>& table4_exceptional();

} // namespace fatpoints
