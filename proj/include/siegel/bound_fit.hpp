#pragma once

// BoundFit: least-squares slope/intercept of log(y) against log(x), used
// everywhere a polynomial bound F <= a * G^b is witnessed empirically.

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace siegel {

struct BoundFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
  std::size_t n = 0;
};

class degenerate_fit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fits log(y) ~ slope * log(x) + intercept. Requires at least two rows with
// distinct positive x and positive y; throws degenerate_fit_error otherwise.
BoundFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace siegel
