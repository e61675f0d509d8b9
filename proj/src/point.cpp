#include "siegel/point.hpp"

#include <sstream>

namespace siegel {

namespace {

RMat to_rmat(const IMat& m) {
  RMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Real(m(i, j));
  return r;
}

struct ActionBlocks {
  RMat a, b, c, d;
};

ActionBlocks split_blocks(const RMat& m) {
  const Eigen::Index g = m.rows() / 2;
  return {m.topLeftCorner(g, g), m.topRightCorner(g, g),
          m.bottomLeftCorner(g, g), m.bottomRightCorner(g, g)};
}

CMat complexify(const RMat& re, const RMat& im) {
  CMat z(re.rows(), re.cols());
  for (Eigen::Index i = 0; i < re.rows(); ++i)
    for (Eigen::Index j = 0; j < re.cols(); ++j)
      z(i, j) = Cplx(re(i, j), im(i, j));
  return z;
}

CMat complexify(const RMat& re) {
  return complexify(re, RMat::Zero(re.rows(), re.cols()));
}

SiegelPoint act_impl(const RMat& m, const SiegelPoint& zp) {
  if (m.rows() != 2 * zp.g() || m.cols() != 2 * zp.g())
    throw std::invalid_argument("act: genus mismatch");

  unsigned bits = zp.precision_bits();
  const unsigned max_bits = 8192;
  std::string last_msg;
  while (bits <= max_bits) {
    PrecisionGuard guard(bits);
    ActionBlocks blk = split_blocks(m);
    CMat z = zp.z();
    CMat num = complexify(blk.a) * z + complexify(blk.b);
    CMat den = complexify(blk.c) * z + complexify(blk.d);
    Real den_abs = sqrt(cplx_abs2(cmat_det(den)));
    Real floor_val = pow(Real(2), -static_cast<int>(bits) / 2);
    if (den_abs < floor_val) {
      std::ostringstream os;
      os << "act: |det(CZ+D)| = " << den_abs << " below 2^-" << bits / 2;
      last_msg = os.str();
      bits *= 2;
      continue;
    }
    CMat w = num * cmat_inverse(den);
    // The exact result is symmetric; fold roundoff asymmetry away.
    CMat ws = ((w + w.transpose()) / Cplx(Real(2), Real(0))).eval();
    RMat xr(zp.g(), zp.g()), yr(zp.g(), zp.g());
    for (int i = 0; i < zp.g(); ++i)
      for (int j = 0; j < zp.g(); ++j) {
        xr(i, j) = ws(i, j).real();
        yr(i, j) = ws(i, j).imag();
      }
    if (!is_positive_definite(yr)) {
      bits *= 2;
      last_msg = "act: transformed imaginary part lost definiteness";
      continue;
    }
    return make_point(xr, yr, zp.precision_bits());
  }
  throw precision_error(last_msg.empty() ? "act: precision exhausted" : last_msg);
}

}  // namespace

CMat SiegelPoint::z() const { return complexify(x_, y_); }

SiegelPoint make_point(const RMat& x, const RMat& y,
                       unsigned precision_bits, double tol) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows() ||
      x.rows() == 0)
    throw std::invalid_argument("make_point: X and Y must be square of equal size");
  const int g = static_cast<int>(x.rows());

  Real scale = max_abs(x) + max_abs(y);
  if (scale < 1) scale = 1;
  Real asym = max_abs(RMat(x - x.transpose()));
  Real asym_y = max_abs(RMat(y - y.transpose()));
  if (asym > tol * scale || asym_y > tol * scale) {
    std::ostringstream os;
    os << "make_point: asymmetry " << Real(asym > asym_y ? asym : asym_y)
       << " exceeds tolerance";
    throw std::invalid_argument(os.str());
  }

  RMat xs = symmetrize(x);
  RMat ys = symmetrize(y);
  double min_eig = 0.0;
  if (!is_positive_definite(ys, &min_eig)) {
    std::ostringstream os;
    os << "make_point: Y is not positive definite (smallest eigenvalue ~ "
       << min_eig << ")";
    throw std::invalid_argument(os.str());
  }
  return SiegelPoint(g, std::move(xs), std::move(ys), precision_bits);
}

SiegelPoint make_point1(double x, double y, unsigned precision_bits) {
  RMat xm(1, 1), ym(1, 1);
  xm(0, 0) = Real(x);
  ym(0, 0) = Real(y);
  return make_point(xm, ym, precision_bits);
}

SiegelPoint act(const SymplecticMatrix& m, const SiegelPoint& z) {
  return act_impl(to_rmat(m.entries()), z);
}

SiegelPoint act(const RMat& m, const SiegelPoint& z) { return act_impl(m, z); }

namespace {

RMat transformed_imag_inverse_impl(const RMat& m, const SiegelPoint& zp) {
  if (m.rows() != 2 * zp.g())
    throw std::invalid_argument("transformed_imag_inverse: genus mismatch");
  PrecisionGuard guard(zp.precision_bits());
  ActionBlocks blk = split_blocks(m);
  CMat z = zp.z();
  CMat zbar = z.conjugate();
  CMat cz_d = complexify(blk.c) * z + complexify(blk.d);
  CMat czbar_d = complexify(blk.c) * zbar + complexify(blk.d);
  CMat yinv = complexify(rmat_inverse(zp.y()));
  CMat out = czbar_d * yinv * cz_d.transpose();
  RMat re(zp.g(), zp.g());
  for (int i = 0; i < zp.g(); ++i)
    for (int j = 0; j < zp.g(); ++j) re(i, j) = out(i, j).real();
  return symmetrize(re);
}

}  // namespace

RMat transformed_imag_inverse(const SymplecticMatrix& m, const SiegelPoint& z) {
  return transformed_imag_inverse_impl(to_rmat(m.entries()), z);
}

RMat transformed_imag_inverse(const RMat& m, const SiegelPoint& z) {
  return transformed_imag_inverse_impl(m, z);
}

Real symplectic_identity_residual(const SymplecticMatrix& m, const SiegelPoint& zp) {
  if (m.g() != zp.g())
    throw std::invalid_argument("symplectic_identity_residual: genus mismatch");
  PrecisionGuard guard(zp.precision_bits());
  ActionBlocks blk = split_blocks(to_rmat(m.entries()));
  CMat z = zp.z();
  CMat zbar = z.conjugate();
  CMat az_b = complexify(blk.a) * z + complexify(blk.b);
  CMat azbar_b = complexify(blk.a) * zbar + complexify(blk.b);
  CMat cz_d = complexify(blk.c) * z + complexify(blk.d);
  CMat czbar_d = complexify(blk.c) * zbar + complexify(blk.d);
  CMat two_iy = complexify(RMat::Zero(zp.g(), zp.g()), RMat(2 * zp.y()));
  CMat resid = czbar_d.transpose() * az_b - azbar_b.transpose() * cz_d - two_iy;
  return max_abs(resid);
}

PointNorm norm_h(const SiegelPoint& zp) {
  Real best = 1;
  const CMat z = zp.z();
  for (int i = 0; i < zp.g(); ++i)
    for (int j = 0; j < zp.g(); ++j) {
      Real a = sqrt(cplx_abs2(z(i, j)));
      if (a > best) best = a;
    }
  Real det_inv = 1 / zp.y_det();
  if (det_inv > best) best = det_inv;
  return PointNorm{best};
}

}  // namespace siegel
