#pragma once

// Test-only oracles, kept independent of the library code paths they check:
// plain double / int64 arithmetic throughout.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracles {

struct Sl2 {
  long long a = 1, b = 0, c = 0, d = 1;

  bool operator==(const Sl2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  Sl2 neg() const { return {-a, -b, -c, -d}; }
};

struct CfReduction {
  Sl2 gamma;
  std::complex<double> z;
  int steps = 0;
};

// Classical continued-fraction style reduction for the modular group:
// alternate nearest-integer translation (half-open convention) and
// inversion while |z| < 1; canonicalize Re(z) <= 0 on the unit circle.
inline CfReduction cf_reduce(std::complex<double> z, double tol = 1e-9) {
  Sl2 g;
  int steps = 0;
  auto translate = [&](long long n) {
    z -= static_cast<double>(n);
    g.a -= n * g.c;
    g.b -= n * g.d;
    ++steps;
  };
  auto invert = [&]() {
    z = -1.0 / z;
    Sl2 s{-g.c, -g.d, g.a, g.b};
    g = s;
    ++steps;
  };
  for (int it = 0; it < 100000; ++it) {
    long long n = static_cast<long long>(std::floor(z.real() + 0.5));
    if (n != 0) translate(n);
    if (std::abs(z) < 1.0 - tol) invert();
    else break;
  }
  if (std::abs(std::abs(z) - 1.0) <= tol && z.real() > tol) {
    invert();
    long long n = static_cast<long long>(std::floor(z.real() + 0.5));
    if (n != 0) translate(n);
  }
  return {g, z, steps};
}

// All of SL_2(Z) with |entries| <= t, by exhaustive scan.
inline std::vector<Sl2> brute_force_sl2(long long t) {
  std::vector<Sl2> out;
  for (long long a = -t; a <= t; ++a)
    for (long long b = -t; b <= t; ++b)
      for (long long c = -t; c <= t; ++c)
        for (long long d = -t; d <= t; ++d)
          if (a * d - b * c == 1) out.push_back({a, b, c, d});
  return out;
}

// Minimal nonzero value of the binary quadratic form given by Y over integer
// vectors with coordinates up to `bound`.
inline double min_form_value_2x2(const std::array<double, 3>& y, long bound) {
  // y = (y11, y12, y22)
  double best = 1e300;
  for (long p = -bound; p <= bound; ++p)
    for (long q = -bound; q <= bound; ++q) {
      if (p == 0 && q == 0) continue;
      double v = y[0] * p * p + 2.0 * y[1] * p * q + y[2] * q * q;
      if (v < best) best = v;
    }
  return best;
}

struct Form {
  long long a, b, c;

  bool operator==(const Form& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator<(const Form& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }
};

// Reduced primitive forms of discriminant D by scanning |b| <= a <= sqrt(|D|/3).
inline std::vector<Form> exhaustive_reduced_forms(long long d) {
  std::vector<Form> out;
  for (long long b = -(long long)std::sqrt((double)(-d) / 3.0) - 1;
       b * b * 3 <= -d; ++b) {
    if (((b * b - d) % 4) != 0) continue;
    long long m = (b * b - d) / 4;
    for (long long a = std::max(std::abs(b), 1LL); a * a <= m; ++a) {
      if (m % a != 0) continue;
      long long c = m / a;
      // reduced: |b| <= a <= c with b >= 0 if |b| == a or a == c
      if (std::abs(b) > a || a > c) continue;
      if ((std::abs(b) == a || a == c) && b < 0) continue;
      if (std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c)) != 1) continue;
      out.push_back({a, b, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Analytic area of {z : |z| <= m, Im z >= 1/m} in the hyperbolic metric;
// the boundary-profile value for the identity chart.
inline double identity_chart_profile_exact(double m) {
  return 2.0 * (m * std::sqrt(m * m - 1.0 / (m * m)) +
                std::asin(1.0 / (m * m)) - std::acos(-1.0) / 2);
}

}  // namespace oracles
