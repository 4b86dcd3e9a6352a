#pragma once

#include <string>
#include <vector>

#include "ordtop/order.hpp"

namespace ordtop {

/// Canonical test orders, addressed by name:
///
///   finite(N)             0 < 1 < ... < N-1
///   omega_plus_one        1 < 2 < 3 < ... < 0          (0 is the top)
///   omega_plus_omega_star evens ascending, then odds descending:
///                         0 < 2 < 4 < ... < 5 < 3 < 1
///   dense_unbounded       all rationals under a fixed Calkin-Wilf coding
///
/// omega_plus_omega_star carries the parity gap certificate (evens | odds);
/// dense_unbounded carries a certificate cutting at sqrt(2). omega_plus_one
/// carries none (it is complete). Throws std::invalid_argument on an
/// unknown name.
OrderPresentation gallery(const std::string& name);

std::vector<std::string> gallery_names();

}  // namespace ordtop
