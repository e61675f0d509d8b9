#pragma once

// Membership test for the Siegel fundamental domain: bounded real parts,
// Minkowski-reduced imaginary part, and the height conditions
// |det(CZ+D)| >= 1 over a finite set of bottom-row pairs.
//
// The pair set is exact for g = 1 (the single inversion) and for g = 2
// (every bottom row of an Sp_4(Z) element with entries in {-1,0,1}, which
// covers the classical finite boundary list). For g = 3 no classical finite
// list is available at this scale; the set is saturated from bounded
// generator words and membership is flagged heuristic.

#include "siegel/point.hpp"

#include <map>
#include <vector>

#include <Eigen/Dense>

namespace siegel {

enum class DomainCondition {
  kXBound,      // |x_ij| <= 1/2
  kYOrder,      // sqrt(3)/2 <= y_11 <= ... <= y_gg
  kYOffDiag,    // |y_ij| <= min(y_ii, y_jj)/2
  kMinkowski,   // Y in the reduced cone (finite vector conditions, g <= 3)
  kDetHeight,   // |det(CZ+D)| >= 1 over the pair set
};

const char* to_string(DomainCondition c);

struct DomainReport {
  bool in_domain = false;
  bool heuristic = false;  // true iff the g=3 saturated pair set was used
  std::vector<DomainCondition> violated;
  std::map<DomainCondition, double> margins;  // >= -tol means satisfied
};

/// One height condition together with a group element realizing it; acting
/// by `mover` multiplies det(Y) by |det(CZ+D)|^{-2}.
struct DetCondition {
  IMat mover;  // full 2g x 2g symplectic matrix
  IMat c, d;   // its bottom blocks
};

const std::vector<DetCondition>& det_conditions(int g);
bool det_conditions_heuristic(int g);

/// Minkowski reduced-cone conditions for g <= 3: v^t Y v >= y_kk for every
/// v in {-1,0,1}^g with gcd(v_k,...,v_g) = 1, plus y_{k,k+1} >= 0.
struct MinkowskiCondition {
  int level;                // k
  Eigen::VectorXi vec;      // v
};

const std::vector<MinkowskiCondition>& minkowski_conditions(int g);

bool is_minkowski_reduced(const RMat& y, double tol = 1e-9);
bool is_minkowski_reduced_d(const Eigen::MatrixXd& y, double tol = 1e-9);

DomainReport in_fundamental_domain(const SiegelPoint& z, double tol = 1e-9);

/// Double-precision twin used in integrator hot loops; same condition set.
bool in_fundamental_domain_d(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y,
                             double tol = 1e-9);

}  // namespace siegel
