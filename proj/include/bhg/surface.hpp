#pragma once

#include "bhg/algebra.hpp"
#include "bhg/curve.hpp"
#include "bhg/grid_field.hpp"

namespace bhg {

/// Group-valued map on a uniform planar grid with a conformal factor mu > 0
/// (metric mu^2 (dx^2 + dy^2)).
struct GridMap {
  BasisPtr basis;
  GridSpec grid;
  ScalarField mu;
  MatrixField psi;

  /// Throws when the grid is below the 7x7 minimum, mu is not positive, or
  /// any group sample drifts from unitarity.
  void validate(double unitary_tol = 1e-10) const;
};

/// Algebra-valued 1-form A_x dx + A_y dy sampled on a grid interior.
struct GValuedOneForm {
  BasisPtr basis;
  RField Ax;
  RField Ay;
  double max_projection_defect = 0.0;  // diagnostic from the pullback

  int margin() const { return std::max(Ax.margin(), Ay.margin()); }
};

/// Algebra-valued function on a grid interior.
struct GValuedField {
  BasisPtr basis;
  RField values;
};

inline double sup_norm(const GValuedField& f) { return sup_norm(f.values); }

/// Pointwise bracket of two coefficient fields.
RField bracket_field(const AlgebraBasis& basis, const RField& a, const RField& b);
CField bracket_field(const AlgebraBasis& basis, const CField& a, const CField& b);

/// A_x = psi^{-1} d psi / dx (central differences), projected onto the basis;
/// likewise A_y.  Throws NotTangent when the projection defect exceeds 1e-3.
GValuedOneForm maurer_cartan_pullback(const GridMap& map);

/// delta alpha = -mu^{-2} (dA_x/dx + dA_y/dy).
GValuedField codifferential(const GValuedOneForm& form, const ScalarField& mu);

/// dA_y/dx - dA_x/dy + [A_x, A_y]; vanishes at O(h^2) on actual pullbacks.
GValuedField integrability_residual(const GValuedOneForm& form);

/// Trace of the symmetrized bracket 2-tensor in the orthonormal frame
/// e_i = mu^{-1} d_i:  mu^{-2} ( [a_x,b_x] - [b_x,a_x] + [a_y,b_y] - [b_y,a_y] ) / 2.
GValuedField bracket_2tensor_trace(const GValuedOneForm& alpha, const GValuedOneForm& beta,
                                   const ScalarField& mu);

/// Single independent component ([a_x, b_y] - [a_y, b_x]) / 2 of the bracket
/// 2-form, evaluated on (d/dx, d/dy).
GValuedField wedge_bracket(const GValuedOneForm& alpha, const GValuedOneForm& beta);

/// dA_x/dx + dA_y/dy; zero iff the map is harmonic.
GValuedField harmonic_residual(const GridMap& map);

/// Laplacian(delta alpha) - d/dx [A_x, delta alpha] - d/dy [A_y, delta alpha];
/// zero iff the map is biharmonic.  The Laplacian is composed from the
/// centered first-difference stencil so that the three residual formulations
/// agree to roundoff on shared data (margin 4).
GValuedField biharmonic_residual(const GridMap& map);

/// Theta = d(delta alpha) - ([A_x, delta alpha] dx + [A_y, delta alpha] dy).
GValuedOneForm theta_form(const GridMap& map);

/// delta Theta; equals -mu^{-2} biharmonic_residual to roundoff.
GValuedField delta_theta_residual(const GridMap& map);

/// delta d delta alpha + Trace([alpha, d delta alpha]), the conformally
/// weighted bitension: -mu^{-2} x biharmonic_residual.  The trace term is
/// evaluated in divergence form so all residual routes share stencils.
GValuedField bitension_theta_2d(const GridMap& map);

/// Convenience: delta alpha of a map.
GValuedField delta_alpha(const GridMap& map);

/// psi(x, y) = gamma(x) from a reconstructed curve, mu = 1.  Curve samples
/// must land on the grid x-nodes.
GridMap product_ansatz_map(const DiscreteCurve& curve, const GridSpec& grid);

/// Grid map from an analytic matrix-valued function (test and CLI helper).
GridMap grid_map_from_function(BasisPtr basis, const GridSpec& grid,
                               const std::function<Matrix(double, double)>& psi,
                               const std::function<double(double, double)>& mu = {});

}  // namespace bhg
