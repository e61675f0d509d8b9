#include "siegel/reduction.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace siegel {

namespace {

// Sign-normalized lexicographic preference among equal-length vectors:
// first nonzero entry positive, then fewest nonzero mass, then larger lex,
// so that e_k beats every other tied candidate at its own level.
std::vector<int> normalize_sign(std::vector<int> v) {
  for (int x : v) {
    if (x > 0) break;
    if (x < 0) {
      for (auto& e : v) e = -e;
      break;
    }
  }
  return v;
}

bool prefer(const std::vector<int>& a, const std::vector<int>& b) {
  int sa = 0, sb = 0;
  for (int x : a) sa += std::abs(x);
  for (int x : b) sb += std::abs(x);
  if (sa != sb) return sa < sb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Real form_value(const RMat& y, const std::vector<int>& v) {
  const int g = static_cast<int>(y.rows());
  Real q = 0;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) q += y(i, j) * v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
  return q;
}

// Smallest vector at the given level: minimizes v^t Y v subject to the rows
// chosen so far plus v being extendable to a unimodular matrix.
std::vector<int> best_vector(const RMat& y, const std::vector<std::vector<int>>& rows) {
  const int g = static_cast<int>(y.rows());
  const int level = static_cast<int>(rows.size());

  // initial candidate: the first admissible basis vector
  std::vector<int> best;
  Real best_val = 0;
  auto admissible = [&](const std::vector<int>& v) {
    IMat m(level + 1, g);
    for (int i = 0; i < level; ++i)
      for (int j = 0; j < g; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    for (int j = 0; j < g; ++j) m(level, j) = v[static_cast<std::size_t>(j)];
    return minor_gcd(m) == 1;
  };
  for (int j = 0; j < g && best.empty(); ++j) {
    std::vector<int> e(static_cast<std::size_t>(g), 0);
    e[static_cast<std::size_t>(j)] = 1;
    if (admissible(e)) {
      best = e;
      best_val = form_value(y, e);
    }
  }
  if (best.empty())
    throw std::runtime_error("minkowski_reduce: no admissible basis vector");

  // conservative coordinate box from the smallest eigenvalue
  Eigen::MatrixXd yd(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) yd(i, j) = to_double(y(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(yd);
  double lambda_min = es.eigenvalues().minCoeff() * 0.9;
  if (lambda_min <= 0)
    throw std::invalid_argument("minkowski_reduce: Y not positive definite");
  long bound = static_cast<long>(std::sqrt(to_double(best_val) / lambda_min)) + 1;

  std::vector<int> v(static_cast<std::size_t>(g), 0);
  long total = 1;
  for (int i = 0; i < g; ++i) total *= 2 * bound + 1;
  for (long it = 0; it < total; ++it) {
    long t = it;
    for (int i = 0; i < g; ++i) {
      v[static_cast<std::size_t>(i)] = static_cast<int>(t % (2 * bound + 1) - bound);
      t /= 2 * bound + 1;
    }
    std::vector<int> nv = normalize_sign(v);
    bool zero = std::all_of(nv.begin(), nv.end(), [](int e) { return e == 0; });
    if (zero) continue;
    Real val = form_value(y, nv);
    if (val > best_val) continue;
    if (val == best_val && !prefer(nv, best)) continue;
    if (!admissible(nv)) continue;
    best = nv;
    best_val = val;
  }
  return best;
}

}  // namespace

namespace {

// Pairwise size-reduction and sorting sweeps. Not a complete reduction by
// itself, but leaves Y well conditioned so the exact per-level search below
// runs over a tiny coordinate box.
IMat greedy_prereduce(RMat& y) {
  const int g = static_cast<int>(y.rows());
  IMat u = IMat::Identity(g, g);
  auto apply_row_op = [&](int i, int j, const Int& q) {
    // v_i <- v_i - q v_j
    u.row(i) -= q * u.row(j);
    Real qr(q);
    RMat yi = y.row(i) - qr * y.row(j);
    y.row(i) = yi;
    RMat yc = y.col(i) - qr * y.col(j);
    y.col(i) = yc;
  };
  auto swap_rows = [&](int i, int j) {
    u.row(i).swap(u.row(j));
    y.row(i).swap(y.row(j));
    y.col(i).swap(y.col(j));
  };
  for (int sweep = 0; sweep < 1000; ++sweep) {
    bool changed = false;
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) {
        if (i == j) continue;
        Real ratio = y(i, j) / y(j, j);
        Real f = floor(ratio + Real(1) / 2);
        Int q(f);
        if (q != 0) {
          apply_row_op(i, j, q);
          changed = true;
        }
      }
    for (int i = 0; i + 1 < g; ++i)
      if (y(i + 1, i + 1) < y(i, i)) {
        swap_rows(i, i + 1);
        changed = true;
      }
    if (!changed) break;
  }
  return u;
}

}  // namespace

std::pair<IMat, RMat> minkowski_reduce(const RMat& y) {
  const int g = static_cast<int>(y.rows());
  if (g > 3)
    throw std::invalid_argument("minkowski_reduce: supported genus is 1..3");
  if (!is_positive_definite(y))
    throw std::invalid_argument("minkowski_reduce: Y not positive definite");
  if (g == 1) return {IMat::Identity(1, 1), y};

  RMat y0 = y;
  IMat u0 = greedy_prereduce(y0);

  std::vector<std::vector<int>> rows;
  for (int k = 0; k < g; ++k) rows.push_back(best_vector(y0, rows));

  IMat ubest(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) ubest(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  IMat u = ubest * u0;

  RMat yr = RMat::Zero(g, g);
  auto recompute = [&]() {
    RMat ur(g, g);
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) ur(i, j) = Real(u(i, j));
    yr = RMat(ur * y * ur.transpose());
  };
  recompute();
  for (int k = 0; k + 1 < g; ++k) {
    if (yr(k, k + 1) < 0) {
      u.row(k + 1) = -u.row(k + 1);
      recompute();
    }
  }
  if (!is_minkowski_reduced(yr, 1e-12 * to_double(max_abs(yr))))
    throw std::runtime_error("minkowski_reduce: postcondition failed");
  return {u, yr};
}

namespace {

IMat nearest_int_offset(const RMat& x) {
  // S with x + S entrywise in [-1/2, 1/2)
  const int g = static_cast<int>(x.rows());
  IMat s(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      Real f = floor(x(i, j) + Real(1) / 2);
      s(i, j) = -Int(f);
    }
  return s;
}

}  // namespace

ReductionResult siegel_reduce(const SiegelPoint& z, long step_budget, double tol) {
  const int g = z.g();
  SymplecticMatrix gamma = SymplecticMatrix::identity(g);
  SiegelPoint cur = z;
  long steps = 0;
  double min_gain = 1e300;

  auto apply = [&](const SymplecticMatrix& m) {
    gamma = sympl_mul(m, gamma);
    cur = act(gamma, z);  // recompute from the original point, no drift
    ++steps;
  };

  const auto& conditions = det_conditions(g);
  bool done = false;
  while (!done) {
    if (steps > step_budget) {
      std::ostringstream os;
      os << "siegel_reduce: step budget exceeded (" << step_budget
         << " steps, det Y = " << cur.y_det() << ", h(Z) = "
         << norm_h(z).value << ")";
      throw budget_error(os.str());
    }

    auto [u, yred] = minkowski_reduce(cur.y());
    if (!imat_equal(u, IMat(IMat::Identity(g, g)))) {
      apply(gl_embedding(u));
      continue;
    }

    IMat s = nearest_int_offset(cur.x());
    if (!imat_is_zero(s)) {
      apply(translation(s));
      continue;
    }

    // height conditions: act by the strongest violated one
    Real best = 1;
    const DetCondition* best_cond = nullptr;
    CMat zc = cur.z();
    for (const auto& cond : conditions) {
      CMat m(g, g);
      for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
          Cplx acc(Real(0), Real(0));
          for (int k = 0; k < g; ++k)
            acc += zc(k, j) * Cplx(Real(cond.c(i, k)), Real(0));
          m(i, j) = acc + Cplx(Real(cond.d(i, j)), Real(0));
        }
      Real a = sqrt(cplx_abs2(cmat_det(m)));
      if (a < best) {
        best = a;
        best_cond = &cond;
      }
    }
    if (best_cond != nullptr && best < 1 - tol) {
      double gain = 1.0 / (to_double(best) * to_double(best));
      if (gain < min_gain) min_gain = gain;
      apply(SymplecticMatrix(best_cond->mover));
      continue;
    }
    done = true;
  }

  // canonicalize the g=1 unit-circle boundary: prefer Re(z) <= 0 on |z| = 1
  if (g == 1) {
    Real az = sqrt(cplx_abs2(cur.z()(0, 0)));
    if (abs(az - 1) <= tol && cur.x()(0, 0) > tol) {
      apply(SymplecticMatrix(det_conditions(1)[0].mover));
      IMat s = nearest_int_offset(cur.x());
      if (!imat_is_zero(s)) apply(translation(s));
    }
  }

  DomainReport rep = in_fundamental_domain(cur, tol);
  if (!rep.in_domain) {
    std::ostringstream os;
    os << "siegel_reduce: final point fails membership; violated:";
    for (auto c : rep.violated) os << ' ' << to_string(c);
    throw std::runtime_error(os.str());
  }

  ReductionResult res{gamma, cur, steps, norm_h(z), height(gamma),
                      rep.heuristic, min_gain == 1e300 ? 1.0 : min_gain};
  return res;
}

BoundFit reduction_height_survey(const std::vector<SiegelPoint>& samples) {
  if (samples.empty())
    throw std::invalid_argument("reduction_height_survey: empty sample list");
  std::vector<double> hin, hgamma;
  hin.reserve(samples.size());
  hgamma.reserve(samples.size());
  for (const auto& z : samples) {
    ReductionResult r = siegel_reduce(z);
    hin.push_back(to_double(r.height_in.value));
    hgamma.push_back(to_double(r.height_gamma.value));
  }
  return fit_loglog(hin, hgamma);
}

}  // namespace siegel
