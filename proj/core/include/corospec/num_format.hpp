#pragma once

namespace corospec {

// Rounds to `digits` significant decimal digits (used for stable JSON and
// golden files). digits defaults to 12.
double round_significant(double v, int digits = 12);

} // namespace corospec
