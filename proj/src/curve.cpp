#include "bhg/curve.hpp"

#include <algorithm>
#include <cmath>

namespace bhg {

namespace {

std::vector<Vector> centered_diff(const std::vector<Vector>& f, double h) {
  std::vector<Vector> out(f.size());
  for (std::size_t k = 1; k + 1 < f.size(); ++k) out[k] = (f[k + 1] - f[k - 1]) / (2.0 * h);
  return out;
}

}  // namespace

double CoeffSeries::sup_norm() const {
  double sup = 0.0;
  for (const Vector& v : values) sup = std::max(sup, v.norm());
  return sup;
}

AlgebraElement biharmonic_rhs(const CurveState& state) { return bracket(state.y, state.y2); }

DiscreteCurve integrate_curve(const CurveState& init, double h, int steps) {
  if (!(h > 0.0) || steps < 1) throw InvalidInput("integrate_curve needs h > 0 and steps >= 1");
  require_same_basis(*init.y.basis(), *init.y1.basis());
  require_same_basis(*init.y.basis(), *init.y2.basis());
  const BasisPtr basis = init.y.basis();

  DiscreteCurve out;
  out.basis = basis;
  out.t0 = init.t;
  out.h = h;
  out.F.reserve(static_cast<std::size_t>(steps) + 1);

  Vector y = init.y.coeffs(), p = init.y1.coeffs(), q = init.y2.coeffs();
  out.F.push_back(y);
  for (int k = 0; k < steps; ++k) {
    const auto rhs = [&](const Vector& yy, const Vector& qq) { return basis->bracket_coeffs(yy, qq); };
    const Vector k1y = p, k1p = q, k1q = rhs(y, q);
    const Vector k2y = p + 0.5 * h * k1p, k2p = q + 0.5 * h * k1q,
                 k2q = rhs(y + 0.5 * h * k1y, q + 0.5 * h * k1q);
    const Vector k3y = p + 0.5 * h * k2p, k3p = q + 0.5 * h * k2q,
                 k3q = rhs(y + 0.5 * h * k2y, q + 0.5 * h * k2q);
    const Vector k4y = p + h * k3p, k4p = q + h * k3q, k4q = rhs(y + h * k3y, q + h * k3q);
    y += (h / 6.0) * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
    p += (h / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    q += (h / 6.0) * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
    if (!y.allFinite() || !p.allFinite() || !q.allFinite())
      throw DivergedIntegration("curve integration left the finite range", static_cast<std::size_t>(k));
    out.F.push_back(y);
  }
  return out;
}

DiscreteCurve reconstruct_group_curve(const DiscreteCurve& curve, const GroupElement& psi0,
                                      const ReconstructOptions& opts) {
  if (curve.F.empty()) throw InvalidInput("curve has no coefficient samples");
  if (!psi0.is_unitary()) throw InvalidInput("initial group element is not unitary");
  if (psi0.dim() != curve.basis->matrix_dim()) throw InvalidInput("initial element has wrong dimension");

  DiscreteCurve out = curve;
  out.psi.clear();
  out.psi.reserve(curve.F.size());
  out.psi.push_back(psi0.matrix());
  for (std::size_t k = 0; k + 1 < curve.F.size(); ++k) {
    const Vector mid = 0.5 * (curve.F[k] + curve.F[k + 1]);
    Matrix next = out.psi.back() * expm_skew(curve.h * curve.basis->realize(mid));
    if (opts.reproject) next = polar_unitary(next);
    const double drift =
        (next.adjoint() * next - Matrix::Identity(next.rows(), next.cols())).norm();
    if (drift > opts.drift_tol)
      throw UnitarityDrift("unitarity drift " + std::to_string(drift) + " at sample " +
                           std::to_string(k + 1) + "; consider the reproject option");
    out.psi.push_back(std::move(next));
  }
  return out;
}

DiscreteCurve geodesic_curve(const GroupElement& x, const AlgebraElement& X, double h, int steps) {
  if (!(h > 0.0) || steps < 1) throw InvalidInput("geodesic_curve needs h > 0 and steps >= 1");
  if (x.dim() != X.basis()->matrix_dim()) throw InvalidInput("base point has wrong dimension");
  DiscreteCurve out;
  out.basis = X.basis();
  out.t0 = 0.0;
  out.h = h;
  const Matrix gen = X.matrix();
  for (int k = 0; k <= steps; ++k) {
    out.F.push_back(X.coeffs());
    out.psi.push_back(x.matrix() * expm_skew((k * h) * gen));
  }
  return out;
}

CoeffSeries maurer_cartan_pullback_1d(const DiscreteCurve& curve) {
  if (!curve.has_group_samples()) throw InvalidInput("curve has no group samples");
  if (curve.size() < 3) throw InsufficientSamples("need at least 3 group samples");
  CoeffSeries out;
  out.offset = 1;
  out.values.reserve(static_cast<std::size_t>(curve.size() - 2));
  for (int k = 1; k + 1 < curve.size(); ++k) {
    const Matrix raw = curve.psi[static_cast<std::size_t>(k)].inverse() *
                       (curve.psi[static_cast<std::size_t>(k + 1)] -
                        curve.psi[static_cast<std::size_t>(k - 1)]) /
                       (2.0 * curve.h);
    out.values.push_back(curve.basis->project(raw));
  }
  return out;
}

CoeffSeries codifferential_1d(const DiscreteCurve& curve) {
  if (curve.size() < 3) throw InsufficientSamples("need at least 3 samples");
  CoeffSeries out;
  out.offset = 1;
  const std::vector<Vector> d = centered_diff(curve.F, curve.h);
  for (int k = 1; k + 1 < curve.size(); ++k) out.values.push_back(-d[static_cast<std::size_t>(k)]);
  return out;
}

CoeffSeries bitension_theta_1d(const DiscreteCurve& curve) {
  const int n = curve.size();
  if (n < 7) throw InsufficientSamples("bitension needs at least 7 samples");
  const std::vector<Vector> d1 = centered_diff(curve.F, curve.h);
  const std::vector<Vector> d2 = centered_diff(d1, curve.h);
  const std::vector<Vector> d3 = centered_diff(d2, curve.h);
  CoeffSeries out;
  out.offset = 3;
  out.values.reserve(static_cast<std::size_t>(n - 6));
  for (int k = 3; k + 3 < n; ++k) {
    const std::size_t u = static_cast<std::size_t>(k);
    out.values.push_back(d3[u] - curve.basis->bracket_coeffs(curve.F[u], d2[u]));
  }
  return out;
}

HelixCurve helix_curve(double a, double s0, double s1, int samples) {
  if (!(a > 0.0)) throw InvalidParameter("helix needs a > 0");
  if (samples < 2 || !(s1 > s0)) throw InvalidInput("helix needs samples >= 2 and s1 > s0");
  const double r = std::sqrt(a * a + 1.0);
  const double c = 1.0 / r;
  HelixCurve out;
  out.curve.basis = AlgebraBasis::builtin("su2");
  out.curve.t0 = s0;
  out.curve.h = (s1 - s0) / (samples - 1);
  for (int k = 0; k < samples; ++k) {
    const double s = s0 + k * out.curve.h;
    out.path.emplace_back(a * std::cos(c * s), a * std::sin(c * s), c * s);
    Vector y(3);
    y << -a * c * std::sin(c * s), a * c * std::cos(c * s), c;
    out.curve.F.push_back(std::move(y));
  }
  return out;
}

PathJet helix_jet(double a, double s) {
  if (!(a > 0.0)) throw InvalidParameter("helix needs a > 0");
  const double c = 1.0 / std::sqrt(a * a + 1.0);
  const double u = c * s;
  PathJet j;
  j.x = {a * std::cos(u), a * std::sin(u), u};
  j.dx = {-a * c * std::sin(u), a * c * std::cos(u), c};
  j.d2x = {-a * c * c * std::cos(u), -a * c * c * std::sin(u), 0.0};
  j.d3x = {a * c * c * c * std::sin(u), -a * c * c * c * std::cos(u), 0.0};
  return j;
}

CoeffJet helix_coeff_jet(double a, double s) {
  const PathJet j = helix_jet(a, s);
  const double c = 1.0 / std::sqrt(a * a + 1.0);
  const double u = c * s;
  CoeffJet out;
  out.y = j.dx;
  out.dy = j.d2x;
  out.d2y = j.d3x;
  out.d3y = {a * std::pow(c, 4) * std::cos(u), a * std::pow(c, 4) * std::sin(u), 0.0};
  return out;
}

FrenetData frenet_apparatus(const PathJet& jet, double s, double kappa_min) {
  using Eigen::Vector3d;
  const Vector3d& x1 = jet.dx;
  const Vector3d& x2 = jet.d2x;
  const Vector3d& x3 = jet.d3x;
  const double v = x1.norm();
  if (v < kappa_min) throw DegenerateCurvature("stationary point: |x'| ~ 0");

  const double vd = x1.dot(x2) / v;
  const Vector3d e1 = x1 / v;
  const Vector3d e1_t = x2 / v - x1 * (vd / (v * v));       // d e1 / dt
  const double kappa = e1_t.norm() / v;                     // |e1'| in arc length
  if (kappa < kappa_min) throw DegenerateCurvature("curvature below threshold");
  const Vector3d e2 = e1_t / e1_t.norm();

  const double vdd = (x2.dot(x2) + x1.dot(x3)) / v - x1.dot(x2) * vd / (v * v);
  const Vector3d w_t = x3 / v - 2.0 * x2 * (vd / (v * v)) - x1 * (vdd / (v * v)) +
                       2.0 * x1 * (vd * vd / (v * v * v));  // d e1_t / dt
  const double m = e1_t.norm();
  const Vector3d e2_t = w_t / m - e1_t * (e1_t.dot(w_t) / (m * m * m));
  const Vector3d e2_prime = e2_t / v;                       // d e2 / ds

  FrenetData out;
  out.s = s;
  out.e1 = e1;
  out.e2 = e2;
  out.e3 = e1.cross(e2);
  out.kappa = kappa;
  out.tau = -(e1.cross(e2_prime)).dot(e2);                  // e3' = e1 x e2'
  return out;
}

FrenetData frenet_apparatus(std::span<const Eigen::Vector3d> path, double h, int index,
                            double kappa_min) {
  const int n = static_cast<int>(path.size());
  if (n < 5 || index < 2 || index > n - 3)
    throw InsufficientSamples("sampled Frenet frame needs two nodes on each side");
  PathJet j;
  j.x = path[static_cast<std::size_t>(index)];
  j.dx = (path[index + 1] - path[index - 1]) / (2.0 * h);
  j.d2x = (path[index + 1] - 2.0 * path[index] + path[index - 1]) / (h * h);
  j.d3x = (path[index + 2] - 2.0 * path[index + 1] + 2.0 * path[index - 1] - path[index - 2]) /
          (2.0 * h * h * h);
  return frenet_apparatus(j, 0.0, kappa_min);
}

}  // namespace bhg
