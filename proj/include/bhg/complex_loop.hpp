#pragma once

#include <complex>

#include "bhg/surface.hpp"

namespace bhg {

/// Complexified 1-form A_z dz + A_zbar dzbar with
///   A_z = (A_x - i A_y)/2,  A_zbar = (A_x + i A_y)/2.
struct ComplexForm {
  BasisPtr basis;
  CField Az;
  CField Azbar;

  int margin() const { return std::max(Az.margin(), Azbar.margin()); }
};

ComplexForm complexify(const GValuedOneForm& form);

/// Inverse of complexify; the imaginary parts (reality defect) are dropped.
GValuedOneForm decomplexify(const ComplexForm& form);

/// Largest violation of the reality constraints of a complexified form.
double reality_defect(const ComplexForm& form);

/// d/dz and d/dzbar from the shared centered real stencils.
CField diff_z(const CField& f);
CField diff_zbar(const CField& f);

/// delta of P dz + Q dzbar:  -2 mu^{-2} (dP/dzbar + dQ/dz).
CField codifferential_complex(const ComplexForm& form, const ScalarField& mu);

/// Complex form of the bitension 1-form:
///   (d(delta alpha)/dz - [A_z, delta alpha]) dz + (conjugate-coordinate part) dzbar.
ComplexForm theta_tilde(const GridMap& map);

/// delta of theta_tilde; matches delta_theta_residual to roundoff.
CField delta_theta_tilde_residual(const GridMap& map);

/// Spectral family  beta_lambda = (1-lambda)/2 B_z dz + (1-1/lambda)/2 B_zbar dzbar.
struct LoopSample {
  std::complex<double> lambda;
  ComplexForm form;
};

LoopSample beta_family(const ComplexForm& b, std::complex<double> lambda);

/// Coefficient of dx^dy in  d beta + [beta ^ beta]  (converted from dz^dzbar
/// by the factor -2i); vanishes for every lambda iff the base data is harmonic.
CField flatness_residual(const LoopSample& sample);

/// Which coefficient multiplies A_zbar in the second driven equation of the
/// deformed family.  `printed` uses (1-nu)/2 on both lines; `symmetric`
/// mirrors the dz line with (1-1/nu)/2.
enum class ConjugateCoefficient { printed, symmetric };

struct AlphaFamilyResiduals {
  CField driven_z;         // d(delta alpha_nu)/dz - [(1-nu)/2 A_z, delta alpha_nu] - B_z
  CField driven_zbar;      // conjugate-coordinate counterpart
  CField zero_curvature;   // d alpha_nu + [alpha_nu ^ alpha_nu], in dx^dy units
};

AlphaFamilyResiduals alpha_family_residuals(const ComplexForm& a, const ComplexForm& b,
                                            std::complex<double> nu, const ScalarField& mu,
                                            ConjugateCoefficient variant = ConjugateCoefficient::printed);

/// Verification report for the harmonic-data factorization of a map:
/// the induced fields B := components of theta_tilde must solve the harmonic
/// system when the map is biharmonic.
struct ThreeStepReport {
  double alpha_flatness_sup = 0.0;  // zero-curvature defect of the map's own pullback
  double b_divergence_sup = 0.0;    // first harmonic-system equation on B
  double b_curvature_sup = 0.0;     // second harmonic-system equation on B
  double harmonic_sup = 0.0;        // diagnostic: |dA_x/dx + dA_y/dy|

  double max_b_residual() const { return std::max(b_divergence_sup, b_curvature_sup); }
};

ThreeStepReport three_step_verify(const GridMap& map);

/// Equally spaced samples of the unit circle.
std::vector<std::complex<double>> unit_circle_samples(int count);

}  // namespace bhg
