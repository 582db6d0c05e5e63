#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <vector>

#include "bhg/algebra.hpp"

namespace bhg {

/// State of the third-order curve equation F''' = [F, F''] as a first-order
/// system: y = F, y1 = F', y2 = F''.
struct CurveState {
  double t = 0.0;
  AlgebraElement y;
  AlgebraElement y1;
  AlgebraElement y2;
};

/// Uniformly sampled group-valued curve and/or its left logarithmic
/// derivative F(t) in basis coefficients.
struct DiscreteCurve {
  BasisPtr basis;
  double t0 = 0.0;
  double h = 0.0;
  std::vector<Vector> F;
  std::vector<Matrix> psi;  // empty until reconstructed

  int size() const { return static_cast<int>(F.size()); }
  double t(int k) const { return t0 + k * h; }
  bool has_group_samples() const { return !psi.empty(); }
  AlgebraElement coefficient(int k) const { return AlgebraElement(basis, F[static_cast<std::size_t>(k)]); }
};

/// Sample sequence aligned with a DiscreteCurve, valid from `offset` through
/// `offset + values.size() - 1`.
struct CoeffSeries {
  int offset = 0;
  std::vector<Vector> values;

  double sup_norm() const;
};

/// Right-hand side F''' = [F, F''] of the curve equation.
AlgebraElement biharmonic_rhs(const CurveState& state);

/// Classical RK4 on (y, y', y'') with y''' = [y, y''].
DiscreteCurve integrate_curve(const CurveState& init, double h, int steps);

struct ReconstructOptions {
  bool reproject = false;      // polar re-unitarization after every step
  double drift_tol = 1e-6;
};

/// Fills group samples by the midpoint Lie step
///   psi_{k+1} = psi_k exp(h F(t_k + h/2)),
/// with F at the midpoint from linear interpolation of the samples.
DiscreteCurve reconstruct_group_curve(const DiscreteCurve& curve, const GroupElement& psi0,
                                      const ReconstructOptions& opts = {});

/// psi(t) = x exp(tX); the coefficient samples are constant equal to X.
DiscreteCurve geodesic_curve(const GroupElement& x, const AlgebraElement& X, double h, int steps);

/// Central-difference recovery of F from group samples (one-node margin).
CoeffSeries maurer_cartan_pullback_1d(const DiscreteCurve& curve);

/// delta alpha = -F' by central differences (one-node margin).
CoeffSeries codifferential_1d(const DiscreteCurve& curve);

/// F''' - [F, F''] from the samples, all derivatives composed from the
/// centered first-difference stencil (three-node margin, >= 7 samples).
CoeffSeries bitension_theta_1d(const DiscreteCurve& curve);

/// The arc-length circular helix family
///   x(s) = (a cos(s/r), a sin(s/r), s/r),  r = sqrt(a^2 + 1),
/// together with its su(2) coefficient curve y(s) = x'(s).
struct HelixCurve {
  std::vector<Eigen::Vector3d> path;
  DiscreteCurve curve;
};
HelixCurve helix_curve(double a, double s0, double s1, int samples);

/// Position and first three derivatives of a space curve at one parameter value.
struct PathJet {
  Eigen::Vector3d x;
  Eigen::Vector3d dx;
  Eigen::Vector3d d2x;
  Eigen::Vector3d d3x;
};

PathJet helix_jet(double a, double s);

/// y(s) = x'(s) of the helix with its first three derivatives.
struct CoeffJet {
  Eigen::Vector3d y, dy, d2y, d3y;
};
CoeffJet helix_coeff_jet(double a, double s);

struct FrenetData {
  double s = 0.0;
  Eigen::Vector3d e1, e2, e3;
  double kappa = 0.0;
  double tau = 0.0;
};

/// Frenet frame, curvature and torsion from an analytic jet.  Works for any
/// regular parametrization; derivatives are rescaled to arc length internally.
FrenetData frenet_apparatus(const PathJet& jet, double s = 0.0, double kappa_min = 1e-8);

/// Same from samples, with the jet built by central differences at `index`
/// (needs two nodes on each side).
FrenetData frenet_apparatus(std::span<const Eigen::Vector3d> path, double h, int index,
                            double kappa_min = 1e-8);

}  // namespace bhg
