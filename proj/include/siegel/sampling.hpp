#pragma once

// Seeded random points, used by the experiment suites and the tests.

#include "siegel/point.hpp"

namespace siegel {

/// X entries uniform in [-spread, spread]; Y = L L^t for a random Cholesky
/// factor with diagonal in [0.4, 1.6] * spread_y.
SiegelPoint random_point(int g, Rng& rng, double spread = 2.0,
                         double spread_y = 1.0);

/// Rejection-samples a point of the fundamental domain directly (reduced
/// cone coordinates for Y, half-open box for X, then the height conditions).
SiegelPoint random_domain_point(int g, Rng& rng, double y_scale = 1.0);

/// Symmetric complex matrix with entries in the unit box, as a tangent.
CMat random_symmetric_tangent(int g, Rng& rng);

}  // namespace siegel
