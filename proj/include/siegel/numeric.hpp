#pragma once

// Scalar types and small linear-algebra kernels shared by all modules.
//
// Integer matrices are exact (GMP). Real/complex scalars are MPFR floats
// with runtime-selectable precision; geometry code defaults to 128 bits
// and raises precision locally when a computation loses too many digits.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace siegel {

namespace mp = boost::multiprecision;

using Int  = mp::number<mp::gmp_int, mp::et_off>;
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using Cplx = std::complex<Real>;

using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RMat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using CMat = Eigen::Matrix<Cplx, Eigen::Dynamic, Eigen::Dynamic>;

class precision_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(bits * 0.30103) + 2;
}

/// Scoped override of the MPFR working precision (in bits).
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits)
      : saved_(Real::default_precision()) {
    Real::default_precision(digits10_for_bits(bits));
  }
  ~PrecisionGuard() { Real::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

inline void set_global_precision_bits(unsigned bits) {
  Real::default_precision(digits10_for_bits(bits));
}

inline double to_double(const Real& x) { return x.convert_to<double>(); }
inline double to_double(const Int& x) { return x.convert_to<double>(); }

inline Real max_abs(const RMat& m) {
  Real r = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (abs(m(i, j)) > r) r = abs(m(i, j));
  return r;
}

inline Real cplx_abs2(const Cplx& z) {
  return z.real() * z.real() + z.imag() * z.imag();
}

inline Real max_abs(const CMat& m) {
  Real r = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      Real a = sqrt(cplx_abs2(m(i, j)));
      if (a > r) r = a;
    }
  return r;
}

inline Int max_abs(const IMat& m) {
  Int r = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (abs(m(i, j)) > r) r = abs(m(i, j));
  return r;
}

inline RMat symmetrize(const RMat& m) {
  return ((m + m.transpose()) / Real(2)).eval();
}

inline bool imat_equal(const IMat& a, const IMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline bool imat_is_zero(const IMat& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) return false;
  return true;
}

// Exact integer determinant (Bareiss fraction-free elimination).
Int det_exact(IMat m);

// gcd of all k x k minors of a k x n matrix (k <= n). Equals 1 exactly when
// the rows extend to a basis of Z^n.
Int minor_gcd(const IMat& m);

// Exact adjugate; inverse of a unimodular matrix is adj / det with det = +-1.
IMat adjugate_exact(const IMat& m);

// Inverse of an integer matrix with determinant +-1. Throws if |det| != 1.
IMat unimodular_inverse(const IMat& u);

// Gauss-Jordan inverse with partial pivoting. Throws precision_error when a
// pivot underflows the current working precision.
RMat rmat_inverse(const RMat& m);
CMat cmat_inverse(const CMat& m);

Real rmat_det(RMat m);
Cplx cmat_det(CMat m);

// Cholesky-based positive definiteness test; on failure *min_eig_hint (if
// given) receives the smallest eigenvalue computed in double precision.
bool is_positive_definite(const RMat& y, double* min_eig_hint = nullptr);

/// splitmix64: tiny deterministic PRNG used for all seeded experiments.
/// Chosen over std:: distributions so that streams are reproducible
/// independently of the standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double unif() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double unif(double a, double b) { return a + (b - a) * unif(); }

  /// Uniform integer in [lo, hi] inclusive.
  long randint(long lo, long hi) {
    return lo + static_cast<long>(next_u64() %
                                  static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Derive an independent stream (for per-check sub-seeds).
  std::uint64_t fork(std::uint64_t salt) {
    Rng tmp(state_ ^ (salt * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL));
    return tmp.next_u64();
  }

 private:
  std::uint64_t state_;
};

}  // namespace siegel
