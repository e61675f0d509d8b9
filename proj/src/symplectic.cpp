#include "siegel/symplectic.hpp"

namespace siegel {

IMat standard_j(int g) {
  IMat j = IMat::Zero(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    j(i, g + i) = 1;
    j(g + i, i) = -1;
  }
  return j;
}

bool is_symplectic(const IMat& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0)
    throw std::invalid_argument("is_symplectic: dimension must be even and positive");
  const int g = static_cast<int>(m.rows()) / 2;
  IMat j = standard_j(g);
  IMat r = m * j * m.transpose();
  return imat_equal(r, j);
}

bool is_symplectic(const RMat& m, const Real& tol) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0)
    throw std::invalid_argument("is_symplectic: dimension must be even and positive");
  const int g = static_cast<int>(m.rows()) / 2;
  IMat ji = standard_j(g);
  RMat j(2 * g, 2 * g);
  for (int i = 0; i < 2 * g; ++i)
    for (int k = 0; k < 2 * g; ++k) j(i, k) = Real(ji(i, k));
  RMat r = m * j * m.transpose() - j;
  return max_abs(r) <= tol;
}

SymplecticMatrix::SymplecticMatrix(IMat entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols() || m_.rows() % 2 != 0 || m_.rows() == 0)
    throw std::invalid_argument("SymplecticMatrix: dimension must be even and positive");
  g_ = static_cast<int>(m_.rows()) / 2;
  if (!is_symplectic(m_))
    throw std::invalid_argument("SymplecticMatrix: MJM^t != J");
  IMat a = block_a(), b = block_b(), c = block_c(), d = block_d();
  if (!imat_equal(IMat(a * b.transpose()), IMat(b * a.transpose())) ||
      !imat_equal(IMat(c * d.transpose()), IMat(d * c.transpose())) ||
      !imat_equal(IMat(a * d.transpose() - b * c.transpose()),
                  IMat(IMat::Identity(g_, g_))))
    throw std::invalid_argument("SymplecticMatrix: block relations violated");
  if (det_exact(m_) != 1)
    throw std::invalid_argument("SymplecticMatrix: determinant != 1");
}

SymplecticMatrix SymplecticMatrix::identity(int g) {
  return SymplecticMatrix(IMat(IMat::Identity(2 * g, 2 * g)));
}

SymplecticMatrix sympl_mul(const SymplecticMatrix& m1, const SymplecticMatrix& m2) {
  if (m1.g() != m2.g())
    throw std::invalid_argument("sympl_mul: genus mismatch");
  return SymplecticMatrix(IMat(m1.entries() * m2.entries()));
}

SymplecticMatrix sympl_inv(const SymplecticMatrix& m) {
  const int g = m.g();
  IMat inv(2 * g, 2 * g);
  inv.topLeftCorner(g, g) = m.block_d().transpose();
  inv.topRightCorner(g, g) = -m.block_b().transpose();
  inv.bottomLeftCorner(g, g) = -m.block_c().transpose();
  inv.bottomRightCorner(g, g) = m.block_a().transpose();
  return SymplecticMatrix(std::move(inv));
}

MatrixHeight height(const IMat& m) {
  Int h = max_abs(m);
  if (h < 1) h = 1;
  return MatrixHeight{Real(h)};
}

MatrixHeight height(const SymplecticMatrix& m) { return height(m.entries()); }

MatrixHeight height(const RMat& m) {
  Real h = max_abs(m);
  if (h < 1) h = 1;
  return MatrixHeight{h};
}

SymplecticMatrix translation(const IMat& s) {
  if (s.rows() != s.cols() || IMat(s.transpose()) != s)
    throw std::invalid_argument("translation: S must be square symmetric");
  const int g = static_cast<int>(s.rows());
  IMat m = IMat::Identity(2 * g, 2 * g);
  m.topRightCorner(g, g) = s;
  return SymplecticMatrix(std::move(m));
}

SymplecticMatrix gl_embedding(const IMat& u) {
  const int g = static_cast<int>(u.rows());
  IMat uinv_t = unimodular_inverse(u).transpose();
  IMat m = IMat::Zero(2 * g, 2 * g);
  m.topLeftCorner(g, g) = u;
  m.bottomRightCorner(g, g) = uinv_t;
  return SymplecticMatrix(std::move(m));
}

std::vector<SymplecticMatrix> generators(int g) {
  if (g < 1) throw std::invalid_argument("generators: g must be positive");
  std::vector<SymplecticMatrix> gens;
  gens.push_back(SymplecticMatrix(standard_j(g)));
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) {
      IMat s = IMat::Zero(g, g);
      s(i, j) = 1;
      s(j, i) = 1;
      if (i == j) s(i, i) = 1;
      gens.push_back(translation(s));
    }
  if (g == 1) {
    IMat u(1, 1);
    u(0, 0) = -1;
    gens.push_back(gl_embedding(u));
  } else {
    IMat t = IMat::Identity(g, g);
    t(0, 1) = 1;
    gens.push_back(gl_embedding(t));
    for (int i = 0; i + 1 < g; ++i) {
      IMat p = IMat::Identity(g, g);
      p(i, i) = 0;
      p(i + 1, i + 1) = 0;
      p(i, i + 1) = 1;
      p(i + 1, i) = 1;
      gens.push_back(gl_embedding(p));
    }
    IMat f = IMat::Identity(g, g);
    f(0, 0) = -1;
    gens.push_back(gl_embedding(f));
  }
  return gens;
}

SymplecticMatrix random_word(int g, int length, Rng& rng) {
  static thread_local std::vector<SymplecticMatrix> cache;
  static thread_local int cache_g = -1;
  if (cache_g != g) {
    cache = generators(g);
    cache_g = g;
  }
  SymplecticMatrix w = SymplecticMatrix::identity(g);
  for (int k = 0; k < length; ++k) {
    const auto& gen = cache[static_cast<std::size_t>(
        rng.randint(0, static_cast<long>(cache.size()) - 1))];
    bool invert = rng.randint(0, 1) == 1;
    w = sympl_mul(w, invert ? sympl_inv(gen) : gen);
  }
  return w;
}

}  // namespace siegel
