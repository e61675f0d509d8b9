#pragma once

// Exact arithmetic for Sp_2g over the integers: the group law, inverses via
// the block transpose identity, entry-sup heights, and a fixed generating
// set. All entries are arbitrary-precision integers; no operation rounds.

#include "siegel/numeric.hpp"

#include <vector>

namespace siegel {

/// h(M) = max(1, |m_ij|). Stored as a high-precision real so that heights
/// from long products (which overflow doubles) still have usable logs.
struct MatrixHeight {
  Real value;

  double log_value() const { return to_double(Real(mp::log(value))); }
};

IMat standard_j(int g);

/// MJM^t == J, exactly. Throws on odd dimension.
bool is_symplectic(const IMat& m);

/// ||MJM^t - J||_max <= tol for real-entried candidates.
bool is_symplectic(const RMat& m, const Real& tol);

/// Element of Sp_2g(Z). Construction verifies the defining relation, the
/// block relations AB^t = BA^t, CD^t = DC^t, AD^t - BC^t = I, and det = 1.
class SymplecticMatrix {
 public:
  explicit SymplecticMatrix(IMat entries);

  static SymplecticMatrix identity(int g);

  int g() const { return g_; }
  const IMat& entries() const { return m_; }

  IMat block_a() const { return m_.topLeftCorner(g_, g_); }
  IMat block_b() const { return m_.topRightCorner(g_, g_); }
  IMat block_c() const { return m_.bottomLeftCorner(g_, g_); }
  IMat block_d() const { return m_.bottomRightCorner(g_, g_); }

  SymplecticMatrix transpose() const { return SymplecticMatrix(m_.transpose()); }

  bool operator==(const SymplecticMatrix& o) const {
    return g_ == o.g_ && imat_equal(m_, o.m_);
  }

 private:
  int g_;
  IMat m_;
};

SymplecticMatrix sympl_mul(const SymplecticMatrix& m1, const SymplecticMatrix& m2);

// Inverse via [[D^t,-B^t],[-C^t,A^t]]; no general matrix inversion involved.
SymplecticMatrix sympl_inv(const SymplecticMatrix& m);

MatrixHeight height(const SymplecticMatrix& m);
MatrixHeight height(const IMat& m);
MatrixHeight height(const RMat& m);

/// [[I,S],[0,I]] for integer symmetric S.
SymplecticMatrix translation(const IMat& s);

/// diag(U, U^{-t}) for unimodular U.
SymplecticMatrix gl_embedding(const IMat& u);

/// Generating set in the fixed canonical order: J first, then the symmetric
/// translations T_S over the basis S = E_ii, E_ij + E_ji (row-major, i <= j),
/// then GL_g(Z) embeddings diag(U, U^{-t}) for U in {I + E_12, the adjacent
/// transpositions, diag(-1, 1, ..., 1)} (for g = 1 just U = (-1)).
std::vector<SymplecticMatrix> generators(int g);

/// Product of a uniformly chosen word of the given length over generators()
/// and their inverses. Deterministic given the Rng state.
SymplecticMatrix random_word(int g, int length, Rng& rng);

}  // namespace siegel
