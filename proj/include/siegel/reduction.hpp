#pragma once

// Siegel reduction: move a point into the fundamental domain by alternating
// Minkowski reduction of Y, integer translation of X, and height moves for
// violated |det(CZ+D)| >= 1 conditions (each of which strictly increases
// det Y, which is the termination witness).

#include "siegel/bound_fit.hpp"
#include "siegel/domain.hpp"
#include "siegel/point.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace siegel {

/// Minkowski reduction of a positive definite matrix, g <= 3. Returns
/// (U, U Y U^t) with det U = +-1; each row of U realizes the successive
/// minimum at its level, found by exhaustive search over a provably
/// sufficient coordinate box, with the superdiagonal sign normalized.
std::pair<IMat, RMat> minkowski_reduce(const RMat& y);

struct ReductionResult {
  SymplecticMatrix gamma;
  SiegelPoint reduced;
  long steps = 0;
  PointNorm height_in;
  MatrixHeight height_gamma;
  bool heuristic = false;
  double min_det_gain = 0.0;  // smallest det(Y) ratio across height moves
};

ReductionResult siegel_reduce(const SiegelPoint& z, long step_budget = 100000,
                              double tol = 1e-9);

/// Reduces every sample and fits log H(gamma_Z) against log h(Z).
BoundFit reduction_height_survey(const std::vector<SiegelPoint>& samples);

}  // namespace siegel
