#include "siegel/numeric.hpp"

#include <Eigen/Eigenvalues>

namespace siegel {

Int det_exact(IMat m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("det_exact: matrix not square");
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index p = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        // Bareiss update: exact division by the previous pivot.
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

IMat minor_of(const IMat& m, Eigen::Index r, Eigen::Index c) {
  const Eigen::Index n = m.rows();
  IMat out(n - 1, n - 1);
  for (Eigen::Index i = 0, ii = 0; i < n; ++i) {
    if (i == r) continue;
    for (Eigen::Index j = 0, jj = 0; j < n; ++j) {
      if (j == c) continue;
      out(ii, jj++) = m(i, j);
    }
    ++ii;
  }
  return out;
}

}  // namespace

Int minor_gcd(const IMat& m) {
  const int k = static_cast<int>(m.rows());
  const int n = static_cast<int>(m.cols());
  if (k > n) throw std::invalid_argument("minor_gcd: more rows than columns");
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  Int acc = 0;
  while (true) {
    IMat sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub(i, j) = m(i, idx[static_cast<std::size_t>(j)]);
    acc = gcd(acc, det_exact(sub));
    if (acc == 1) return acc;
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return acc;
}

IMat adjugate_exact(const IMat& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("adjugate_exact: matrix not square");
  IMat adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Int c = det_exact(minor_of(m, i, j));
      adj(j, i) = ((i + j) % 2 == 0) ? c : -c;
    }
  return adj;
}

IMat unimodular_inverse(const IMat& u) {
  Int d = det_exact(u);
  if (d != 1 && d != -1)
    throw std::invalid_argument("unimodular_inverse: determinant is not +-1");
  IMat adj = adjugate_exact(u);
  if (d == -1) adj = (-adj).eval();
  return adj;
}

RMat rmat_inverse(const RMat& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("rmat_inverse: matrix not square");
  RMat a = m;
  RMat inv = RMat::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    for (Eigen::Index i = k + 1; i < n; ++i)
      if (abs(a(i, k)) > abs(a(p, k))) p = i;
    if (a(p, k) == 0) throw precision_error("rmat_inverse: singular pivot");
    if (p != k) { a.row(k).swap(a.row(p)); inv.row(k).swap(inv.row(p)); }
    Real piv = a(k, k);
    for (Eigen::Index j = 0; j < n; ++j) { a(k, j) /= piv; inv(k, j) /= piv; }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k) continue;
      Real f = a(i, k);
      if (f == 0) continue;
      for (Eigen::Index j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

CMat cmat_inverse(const CMat& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("cmat_inverse: matrix not square");
  CMat a = m;
  CMat inv = CMat::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    for (Eigen::Index i = k + 1; i < n; ++i)
      if (cplx_abs2(a(i, k)) > cplx_abs2(a(p, k))) p = i;
    if (cplx_abs2(a(p, k)) == 0) throw precision_error("cmat_inverse: singular pivot");
    if (p != k) { a.row(k).swap(a.row(p)); inv.row(k).swap(inv.row(p)); }
    Cplx piv = a(k, k);
    for (Eigen::Index j = 0; j < n; ++j) { a(k, j) /= piv; inv(k, j) /= piv; }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k) continue;
      Cplx f = a(i, k);
      if (cplx_abs2(f) == 0) continue;
      for (Eigen::Index j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

Real rmat_det(RMat m) {
  const Eigen::Index n = m.rows();
  Real det = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    for (Eigen::Index i = k + 1; i < n; ++i)
      if (abs(m(i, k)) > abs(m(p, k))) p = i;
    if (m(p, k) == 0) return Real(0);
    if (p != k) { m.row(k).swap(m.row(p)); det = -det; }
    det *= m(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      Real f = m(i, k) / m(k, k);
      for (Eigen::Index j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

Cplx cmat_det(CMat m) {
  const Eigen::Index n = m.rows();
  Cplx det(Real(1), Real(0));
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    for (Eigen::Index i = k + 1; i < n; ++i)
      if (cplx_abs2(m(i, k)) > cplx_abs2(m(p, k))) p = i;
    if (cplx_abs2(m(p, k)) == 0) return Cplx(Real(0), Real(0));
    if (p != k) { m.row(k).swap(m.row(p)); det = -det; }
    det *= m(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      Cplx f = m(i, k) / m(k, k);
      for (Eigen::Index j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

bool is_positive_definite(const RMat& y, double* min_eig_hint) {
  const Eigen::Index n = y.rows();
  RMat l = RMat::Zero(n, n);
  bool ok = true;
  for (Eigen::Index j = 0; j < n && ok; ++j) {
    Real s = y(j, j);
    for (Eigen::Index k = 0; k < j; ++k) s -= l(j, k) * l(j, k);
    if (s <= 0) { ok = false; break; }
    l(j, j) = sqrt(s);
    for (Eigen::Index i = j + 1; i < n; ++i) {
      Real t = y(i, j);
      for (Eigen::Index k = 0; k < j; ++k) t -= l(i, k) * l(j, k);
      l(i, j) = t / l(j, j);
    }
  }
  if (!ok && min_eig_hint) {
    Eigen::MatrixXd yd(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) yd(i, j) = to_double(y(i, j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(yd);
    *min_eig_hint = es.eigenvalues().minCoeff();
  }
  return ok;
}

}  // namespace siegel
