#pragma once

// Points Z = X + iY of the Siegel upper half-space, the fractional-linear
// group action, and the entry/determinant norm h(Z).

#include "siegel/numeric.hpp"
#include "siegel/symplectic.hpp"

namespace siegel {

struct PointNorm {
  Real value;

  double log_value() const { return to_double(Real(mp::log(value))); }
};

/// Z = X + iY with X, Y real symmetric and Y positive definite. Carries its
/// working precision in bits; operations that lose too many digits rerun at
/// doubled precision.
class SiegelPoint {
 public:
  static constexpr unsigned kDefaultPrecision = 128;

  int g() const { return g_; }
  const RMat& x() const { return x_; }
  const RMat& y() const { return y_; }
  unsigned precision_bits() const { return precision_bits_; }

  CMat z() const;
  Real y_det() const { return rmat_det(y_); }

  friend SiegelPoint make_point(const RMat& x, const RMat& y,
                                unsigned precision_bits, double tol);

 private:
  SiegelPoint(int g, RMat x, RMat y, unsigned precision_bits)
      : g_(g), x_(std::move(x)), y_(std::move(y)),
        precision_bits_(precision_bits) {}

  int g_;
  RMat x_;
  RMat y_;
  unsigned precision_bits_;
};

/// Validates symmetry (within tol, relative to the entry scale) and positive
/// definiteness of Y; the stored parts are exactly symmetrized.
SiegelPoint make_point(const RMat& x, const RMat& y,
                       unsigned precision_bits = SiegelPoint::kDefaultPrecision,
                       double tol = 1e-9);

/// Convenience for g = 1.
SiegelPoint make_point1(double x, double y,
                        unsigned precision_bits = SiegelPoint::kDefaultPrecision);

/// (AZ+B)(CZ+D)^{-1}. Retries at doubled precision while
/// |det(CZ+D)| < 2^(-precision/2); throws precision_error past 8192 bits.
SiegelPoint act(const SymplecticMatrix& m, const SiegelPoint& z);

/// Same action for a real symplectic matrix (tolerance-checked by caller).
SiegelPoint act(const RMat& m, const SiegelPoint& z);

/// (C conj(Z) + D) Y^{-1} (C Z + D)^t, which equals Im(act(M,Z))^{-1}; this
/// is the independent route used to cross-check act.
RMat transformed_imag_inverse(const SymplecticMatrix& m, const SiegelPoint& z);
RMat transformed_imag_inverse(const RMat& m, const SiegelPoint& z);

/// Max-entry residual of
/// (C conj(Z)+D)^t (AZ+B) - (A conj(Z)+B)^t (CZ+D) = 2iY.
Real symplectic_identity_residual(const SymplecticMatrix& m, const SiegelPoint& z);

/// h(Z) = max(1, |z_ij|, det(Y)^{-1}).
PointNorm norm_h(const SiegelPoint& z);

}  // namespace siegel
