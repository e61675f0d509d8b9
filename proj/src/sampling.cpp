#include "siegel/sampling.hpp"

#include "siegel/domain.hpp"

namespace siegel {

SiegelPoint random_point(int g, Rng& rng, double spread, double spread_y) {
  RMat x(g, g), l = RMat::Zero(g, g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j <= i; ++j) {
      double v = rng.unif(-spread, spread);
      x(i, j) = Real(v);
      x(j, i) = Real(v);
      if (j < i) l(i, j) = Real(rng.unif(-0.8, 0.8) * spread_y);
    }
    l(i, i) = Real(rng.unif(0.4, 1.6) * spread_y);
  }
  RMat y = RMat(l * l.transpose());
  return make_point(x, y);
}

SiegelPoint random_domain_point(int g, Rng& rng, double y_scale) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    RMat x(g, g), y = RMat::Zero(g, g);
    double diag_prev = std::sqrt(3.0) / 2;
    for (int i = 0; i < g; ++i) {
      diag_prev *= 1.0 + rng.unif(0.0, 1.2) * y_scale;
      y(i, i) = Real(diag_prev);
    }
    for (int i = 0; i < g; ++i)
      for (int j = i + 1; j < g; ++j) {
        double lim = 0.5 * std::min(to_double(y(i, i)), to_double(y(j, j)));
        double v = rng.unif(-lim, lim);
        y(i, j) = Real(v);
        y(j, i) = Real(v);
      }
    for (int i = 0; i < g; ++i)
      for (int j = i; j < g; ++j) {
        double v = rng.unif(-0.5, 0.5);
        x(i, j) = Real(v);
        x(j, i) = Real(v);
      }
    if (!is_positive_definite(y)) continue;
    SiegelPoint z = make_point(x, y);
    if (in_fundamental_domain(z).in_domain) return z;
  }
  throw std::runtime_error("random_domain_point: rejection sampling failed");
}

CMat random_symmetric_tangent(int g, Rng& rng) {
  CMat t(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) {
      Cplx v(Real(rng.unif(-1.0, 1.0)), Real(rng.unif(-1.0, 1.0)));
      t(i, j) = v;
      t(j, i) = v;
    }
  return t;
}

}  // namespace siegel
