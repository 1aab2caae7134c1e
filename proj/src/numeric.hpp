// numeric.hpp: small helpers shared by the library sources (not installed).

#pragma once

#include <cmath>

namespace dephase::detail {

// x log2 x with the 0 log 0 = 0 convention; tiny negative round-off counts as 0.
inline double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// Sum over n = 1, 2 of (1 + (-1)^n chi)/2 log2(1 + (-1)^n chi).
inline double classical_from_chi(double chi) {
    return 0.5 * (xlog2x(1.0 - chi) + xlog2x(1.0 + chi));
}

}  // namespace dephase::detail
