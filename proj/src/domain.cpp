#include "siegel/domain.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace siegel {

const char* to_string(DomainCondition c) {
  switch (c) {
    case DomainCondition::kXBound: return "a";
    case DomainCondition::kYOrder: return "c";
    case DomainCondition::kYOffDiag: return "d";
    case DomainCondition::kMinkowski: return "minkowski";
    case DomainCondition::kDetHeight: return "det_height";
  }
  return "?";
}

namespace {

// Row Hermite normal form; canonical representative of the left-GL_g(Z)
// orbit of a full-row-rank integer matrix.
IMat row_hnf(IMat m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < cols && r < rows; ++col) {
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index i = r; i < rows; ++i)
        if (m(i, col) != 0 &&
            (best < 0 || abs(m(i, col)) < abs(m(best, col))))
          best = i;
      if (best < 0) break;
      if (best != r) m.row(r).swap(m.row(best));
      if (m(r, col) < 0) m.row(r) = -m.row(r);
      bool cleared = true;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (m(i, col) != 0) {
          Int q = m(i, col) / m(r, col);
          m.row(i) -= q * m.row(r);
          if (m(i, col) != 0) cleared = false;
        }
      }
      if (cleared) break;
    }
    if (m(r, col) != 0) {
      for (Eigen::Index i = 0; i < r; ++i) {
        // reduce entries above the pivot into [0, pivot)
        Int q = m(i, col) / m(r, col);
        if (m(i, col) - q * m(r, col) < 0) q -= 1;
        m.row(i) -= q * m.row(r);
      }
      ++r;
    }
  }
  return m;
}

std::string key_of(const IMat& m) {
  std::string k;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      k += m(i, j).convert_to<std::string>();
      k += ',';
    }
  return k;
}

// J-pairing of two length-2g integer row vectors.
Int j_pair(const std::vector<Int>& u, const std::vector<Int>& v) {
  const int g = static_cast<int>(u.size()) / 2;
  Int s = 0;
  for (int i = 0; i < g; ++i)
    s += u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(g + i)] -
         u[static_cast<std::size_t>(g + i)] * v[static_cast<std::size_t>(i)];
  return s;
}

// Searches a symplectic completion [[A,B],[C,D]] with top entries bounded
// by `bound`, row by row in deterministic lexicographic order.
bool complete_pair(const IMat& c, const IMat& d, int bound, IMat& out) {
  const int g = static_cast<int>(c.rows());
  const int n = 2 * g;
  const int w = 2 * bound + 1;
  std::vector<std::vector<Int>> bottom(static_cast<std::size_t>(g),
                                       std::vector<Int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      bottom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c(i, j);
      bottom[static_cast<std::size_t>(i)][static_cast<std::size_t>(g + j)] = d(i, j);
    }

  long total = 1;
  for (int i = 0; i < n; ++i) total *= w;

  std::vector<std::vector<Int>> top;
  std::vector<Int> row(static_cast<std::size_t>(n));
  // choose top rows r_1..r_g one at a time; required pairings are
  // r_i J r_j^t = 0 (i<j), r_i J bottom_j^t = delta_ij
  std::function<bool(int)> place = [&](int i) -> bool {
    for (long it = 0; it < total; ++it) {
      long t = it;
      for (int j = 0; j < n; ++j) {
        row[static_cast<std::size_t>(j)] = static_cast<int>(t % w) - bound;
        t /= w;
      }
      bool ok = true;
      for (int j = 0; j < g && ok; ++j)
        if (j_pair(row, bottom[static_cast<std::size_t>(j)]) != (i == j ? 1 : 0)) ok = false;
      for (int j = 0; j < i && ok; ++j)
        if (j_pair(top[static_cast<std::size_t>(j)], row) != 0) ok = false;
      if (!ok) continue;
      top.push_back(row);
      if (i + 1 == g || place(i + 1)) return true;
      top.pop_back();
    }
    return false;
  };
  if (!place(0)) return false;

  IMat m(n, n);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = top[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  m.bottomLeftCorner(g, g) = c;
  m.bottomRightCorner(g, g) = d;
  if (!is_symplectic(m)) return false;
  out = m;
  return true;
}

std::vector<DetCondition> build_conditions_g1() {
  std::vector<DetCondition> out;
  IMat mover(2, 2);
  mover << Int(0), Int(-1), Int(1), Int(0);
  DetCondition cond;
  cond.mover = mover;
  cond.c = mover.bottomLeftCorner(1, 1);
  cond.d = mover.bottomRightCorner(1, 1);
  out.push_back(cond);
  return out;
}

// Every completable bottom-row pair (C|D) with entries in {-1,0,1} and
// C != 0, up to left-GL_2(Z) equivalence.
std::vector<DetCondition> build_conditions_g2() {
  const int g = 2;
  std::vector<std::array<int, 4>> rows;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c)
        for (int d = -1; d <= 1; ++d) rows.push_back({a, b, c, d});

  std::map<std::string, std::pair<IMat, IMat>> classes;  // hnf key -> (C, D)
  for (const auto& r3 : rows) {
    for (const auto& r4 : rows) {
      // bottom rows (C|D) = [r3; r4]; pair condition CD^t = DC^t reads
      // r3 J r4^t = 0 with J the standard form on (C|D) columns paired as
      // (c_i | d_i); equivalently det-style bilinear below.
      IMat cd(2, 4);
      cd << Int(r3[0]), Int(r3[1]), Int(r3[2]), Int(r3[3]),
            Int(r4[0]), Int(r4[1]), Int(r4[2]), Int(r4[3]);
      IMat c = cd.leftCols(2), d = cd.rightCols(2);
      if (imat_is_zero(c)) continue;
      if (!imat_equal(IMat(c * d.transpose()), IMat(d * c.transpose()))) continue;
      if (minor_gcd(cd) != 1) continue;
      IMat h = row_hnf(cd);
      classes.emplace(key_of(h), std::make_pair(IMat(h.leftCols(2)), IMat(h.rightCols(2))));
    }
  }

  std::vector<DetCondition> out;
  for (const auto& [key, pair] : classes) {
    (void)key;
    DetCondition cond;
    cond.c = pair.first;
    cond.d = pair.second;
    if (!complete_pair(cond.c, cond.d, 1, cond.mover) &&
        !complete_pair(cond.c, cond.d, 2, cond.mover))
      continue;  // no small completion; pair cannot be applied as a move
    out.push_back(cond);
  }
  return out;
}

// Saturation from bounded generator words; heuristic by construction.
std::vector<DetCondition> build_conditions_g3() {
  const int g = 3;
  std::vector<IMat> letters;
  for (const auto& gen : generators(g)) {
    letters.push_back(gen.entries());
    letters.push_back(sympl_inv(gen).entries());
  }

  std::set<std::string> seen;
  std::vector<IMat> frontier{IMat(IMat::Identity(2 * g, 2 * g))};
  seen.insert(key_of(frontier[0]));
  std::vector<IMat> ball = frontier;
  const int depth = 6;
  const Int height_cap = 2;
  for (int level = 0; level < depth; ++level) {
    std::vector<IMat> next;
    for (const auto& m : frontier) {
      for (const auto& l : letters) {
        IMat p = m * l;
        if (max_abs(p) > height_cap) continue;
        auto key = key_of(p);
        if (seen.insert(key).second) {
          next.push_back(p);
          ball.push_back(p);
        }
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }

  std::map<std::string, DetCondition> classes;
  for (const auto& m : ball) {
    IMat c = m.bottomLeftCorner(g, g), d = m.bottomRightCorner(g, g);
    if (imat_is_zero(c)) continue;
    IMat cd(g, 2 * g);
    cd.leftCols(g) = c;
    cd.rightCols(g) = d;
    auto key = key_of(row_hnf(cd));
    if (classes.count(key)) continue;
    DetCondition cond;
    cond.mover = m;
    cond.c = c;
    cond.d = d;
    classes.emplace(std::move(key), std::move(cond));
  }

  std::vector<DetCondition> out;
  out.reserve(classes.size());
  for (auto& [key, cond] : classes) {
    (void)key;
    out.push_back(std::move(cond));
  }
  return out;
}

}  // namespace

const std::vector<DetCondition>& det_conditions(int g) {
  static const std::vector<DetCondition> g1 = build_conditions_g1();
  static const std::vector<DetCondition> g2 = build_conditions_g2();
  static const std::vector<DetCondition> g3 = build_conditions_g3();
  switch (g) {
    case 1: return g1;
    case 2: return g2;
    case 3: return g3;
    default:
      throw std::invalid_argument("det_conditions: supported genus is 1..3");
  }
}

bool det_conditions_heuristic(int g) { return g >= 3; }

const std::vector<MinkowskiCondition>& minkowski_conditions(int g) {
  static std::map<int, std::vector<MinkowskiCondition>> cache;
  auto it = cache.find(g);
  if (it != cache.end()) return it->second;
  if (g < 1 || g > 3)
    throw std::invalid_argument("minkowski_conditions: supported genus is 1..3");

  std::vector<MinkowskiCondition> conds;
  std::vector<int> v(static_cast<std::size_t>(g), 0);
  const long total = static_cast<long>(std::pow(3.0, g));
  for (long it2 = 0; it2 < total; ++it2) {
    long t = it2;
    for (int i = 0; i < g; ++i) {
      v[static_cast<std::size_t>(i)] = static_cast<int>(t % 3) - 1;
      t /= 3;
    }
    // normalize sign: first nonzero entry positive (v and -v are equivalent)
    int first = -1;
    for (int i = 0; i < g; ++i)
      if (v[static_cast<std::size_t>(i)] != 0) { first = i; break; }
    if (first < 0 || v[static_cast<std::size_t>(first)] < 0) continue;
    for (int k = 0; k < g; ++k) {
      int tail_gcd = 0;
      for (int i = k; i < g; ++i) tail_gcd = std::gcd(tail_gcd, std::abs(v[static_cast<std::size_t>(i)]));
      if (tail_gcd != 1) continue;
      // v = e_k gives the trivial condition y_kk >= y_kk
      bool is_ek = true;
      for (int i = 0; i < g; ++i)
        if (v[static_cast<std::size_t>(i)] != (i == k ? 1 : 0)) { is_ek = false; break; }
      if (is_ek) continue;
      MinkowskiCondition mc;
      mc.level = k;
      mc.vec = Eigen::VectorXi(g);
      for (int i = 0; i < g; ++i) mc.vec(i) = v[static_cast<std::size_t>(i)];
      conds.push_back(mc);
    }
  }
  auto [pos, ok] = cache.emplace(g, std::move(conds));
  (void)ok;
  return pos->second;
}

namespace {

inline double to_double_any(const Real& x) { return to_double(x); }
inline double to_double_any(double x) { return x; }

template <typename Mat>
double minkowski_margin(const Mat& y) {
  const int g = static_cast<int>(y.rows());
  double margin = 1e300;
  for (const auto& mc : minkowski_conditions(g)) {
    auto q = y(0, 0) * 0;  // zero of the scalar type
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) q += y(i, j) * mc.vec(i) * mc.vec(j);
    double m = to_double_any(q - y(mc.level, mc.level));
    if (m < margin) margin = m;
  }
  for (int k = 0; k + 1 < g; ++k) {
    double m = to_double_any(y(k, k + 1));
    if (m < margin) margin = m;
  }
  return margin;
}

}  // namespace

bool is_minkowski_reduced(const RMat& y, double tol) {
  return minkowski_margin(y) >= -tol;
}

bool is_minkowski_reduced_d(const Eigen::MatrixXd& y, double tol) {
  return minkowski_margin(y) >= -tol;
}

DomainReport in_fundamental_domain(const SiegelPoint& zp, double tol) {
  const int g = zp.g();
  DomainReport rep;
  rep.heuristic = det_conditions_heuristic(g);

  // (a) real-part bound
  double xa = 0.5 - to_double(max_abs(zp.x()));
  rep.margins[DomainCondition::kXBound] = xa;

  // (c) diagonal ordering with the sqrt(3)/2 floor
  const RMat& y = zp.y();
  double yc = to_double(Real(y(0, 0) - sqrt(Real(3)) / 2));
  for (int k = 0; k + 1 < g; ++k)
    yc = std::min(yc, to_double(Real(y(k + 1, k + 1) - y(k, k))));
  rep.margins[DomainCondition::kYOrder] = yc;

  // (d) off-diagonal bound
  double yd = 1e300;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      if (i == j) continue;
      Real lim = (y(i, i) < y(j, j) ? y(i, i) : y(j, j)) / 2;
      yd = std::min(yd, to_double(Real(lim - abs(y(i, j)))));
    }
  if (g == 1) yd = 0.0;
  rep.margins[DomainCondition::kYOffDiag] = yd;

  rep.margins[DomainCondition::kMinkowski] = minkowski_margin(y);

  // height conditions
  CMat z = zp.z();
  double det_margin = 1e300;
  for (const auto& cond : det_conditions(g)) {
    CMat m(g, g);
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) {
        Cplx acc(Real(0), Real(0));
        for (int k = 0; k < g; ++k)
          acc += z(k, j) * Cplx(Real(cond.c(i, k)), Real(0));
        m(i, j) = acc + Cplx(Real(cond.d(i, j)), Real(0));
      }
    Real a = sqrt(cplx_abs2(cmat_det(m)));
    det_margin = std::min(det_margin, to_double(Real(a - 1)));
  }
  rep.margins[DomainCondition::kDetHeight] = det_margin;

  for (const auto& [cond, margin] : rep.margins)
    if (margin < -tol) rep.violated.push_back(cond);
  rep.in_domain = rep.violated.empty();
  return rep;
}

bool in_fundamental_domain_d(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y,
                             double tol) {
  const int g = static_cast<int>(x.rows());
  if (x.cwiseAbs().maxCoeff() > 0.5 + tol) return false;
  if (y(0, 0) < std::sqrt(3.0) / 2 - tol) return false;
  for (int k = 0; k + 1 < g; ++k)
    if (y(k + 1, k + 1) < y(k, k) - tol) return false;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j)
      if (i != j && std::abs(y(i, j)) > std::min(y(i, i), y(j, j)) / 2 + tol)
        return false;
  if (!is_minkowski_reduced_d(y, tol)) return false;

  Eigen::MatrixXcd z = x.cast<std::complex<double>>() +
                       std::complex<double>(0, 1) * y.cast<std::complex<double>>();
  for (const auto& cond : det_conditions(g)) {
    Eigen::MatrixXcd m(g, g);
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) {
        std::complex<double> acc = 0.0;
        for (int k = 0; k < g; ++k) acc += to_double(cond.c(i, k)) * z(k, j);
        m(i, j) = acc + to_double(cond.d(i, j));
      }
    double a;
    if (g == 1) a = std::abs(m(0, 0));
    else if (g == 2) a = std::abs(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
    else a = std::abs(m.determinant());
    if (a < 1.0 - tol) return false;
  }
  return true;
}

}  // namespace siegel
