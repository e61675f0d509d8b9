#include "siegel/bound_fit.hpp"

#include <cmath>

namespace siegel {

BoundFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("fit_loglog: size mismatch");
  if (x.size() < 2)
    throw degenerate_fit_error("fit_loglog: need at least two samples");

  std::vector<double> lx(x.size()), ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0))
      throw degenerate_fit_error("fit_loglog: nonpositive sample");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }

  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) { mx += lx[i]; my += ly[i]; }
  mx /= static_cast<double>(lx.size());
  my /= static_cast<double>(ly.size());

  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0)
    throw degenerate_fit_error("fit_loglog: all abscissae identical");

  BoundFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.n = lx.size();
  for (std::size_t i = 0; i < lx.size(); ++i) {
    double r = std::abs(ly[i] - (fit.slope * lx[i] + fit.intercept));
    if (r > fit.max_residual) fit.max_residual = r;
  }
  return fit;
}

}  // namespace siegel
