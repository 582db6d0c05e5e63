#include "bhg/complex_loop.hpp"

#include <cmath>
#include <numbers>

namespace bhg {

namespace {

using Complex = std::complex<double>;
constexpr Complex kI{0.0, 1.0};

CField to_complex(const RField& f) {
  CField out(f.grid(), f.margin());
  for (int j = out.jbegin(); j < out.jend(); ++j)
    for (int i = out.ibegin(); i < out.iend(); ++i) out(i, j) = f(i, j).cast<Complex>();
  return out;
}

CField scale(const CField& f, Complex s) {
  CField out(f.grid(), f.margin());
  for (int j = out.jbegin(); j < out.jend(); ++j)
    for (int i = out.ibegin(); i < out.iend(); ++i) out(i, j) = s * f(i, j);
  return out;
}

void require_unit_modulus(Complex z) {
  if (std::abs(std::abs(z) - 1.0) > 1e-12)
    throw InvalidLoopParameter("loop parameter must lie on the unit circle, |z| = " +
                               std::to_string(std::abs(z)));
}

}  // namespace

ComplexForm complexify(const GValuedOneForm& form) {
  require_same_grid(form.Ax.grid(), form.Ay.grid());
  ComplexForm out;
  out.basis = form.basis;
  const int m = form.margin();
  out.Az = CField(form.Ax.grid(), m);
  out.Azbar = CField(form.Ax.grid(), m);
  for (int j = out.Az.jbegin(); j < out.Az.jend(); ++j)
    for (int i = out.Az.ibegin(); i < out.Az.iend(); ++i) {
      const CVector ax = form.Ax(i, j).cast<Complex>();
      const CVector ay = form.Ay(i, j).cast<Complex>();
      out.Az(i, j) = 0.5 * (ax - kI * ay);
      out.Azbar(i, j) = 0.5 * (ax + kI * ay);
    }
  return out;
}

GValuedOneForm decomplexify(const ComplexForm& form) {
  GValuedOneForm out;
  out.basis = form.basis;
  const int m = form.margin();
  out.Ax = RField(form.Az.grid(), m);
  out.Ay = RField(form.Az.grid(), m);
  for (int j = out.Ax.jbegin(); j < out.Ax.jend(); ++j)
    for (int i = out.Ax.ibegin(); i < out.Ax.iend(); ++i) {
      out.Ax(i, j) = (form.Az(i, j) + form.Azbar(i, j)).real();
      out.Ay(i, j) = (kI * (form.Az(i, j) - form.Azbar(i, j))).real();
    }
  return out;
}

double reality_defect(const ComplexForm& form) {
  double worst = 0.0;
  for (int j = form.Az.jbegin(); j < form.Az.jend(); ++j)
    for (int i = form.Az.ibegin(); i < form.Az.iend(); ++i) {
      worst = std::max(worst, (form.Az(i, j) + form.Azbar(i, j)).imag().norm());
      worst = std::max(worst, (kI * (form.Az(i, j) - form.Azbar(i, j))).imag().norm());
    }
  return worst;
}

CField diff_z(const CField& f) {
  const CField fx = diff_x(f);
  const CField fy = diff_y(f);
  CField out(fx.grid(), fx.margin());
  for (int j = out.jbegin(); j < out.jend(); ++j)
    for (int i = out.ibegin(); i < out.iend(); ++i) out(i, j) = 0.5 * (fx(i, j) - kI * fy(i, j));
  return out;
}

CField diff_zbar(const CField& f) {
  const CField fx = diff_x(f);
  const CField fy = diff_y(f);
  CField out(fx.grid(), fx.margin());
  for (int j = out.jbegin(); j < out.jend(); ++j)
    for (int i = out.ibegin(); i < out.iend(); ++i) out(i, j) = 0.5 * (fx(i, j) + kI * fy(i, j));
  return out;
}

CField codifferential_complex(const ComplexForm& form, const ScalarField& mu) {
  require_same_grid(form.Az.grid(), mu.grid());
  const CField pzb = diff_zbar(form.Az);
  const CField qz = diff_z(form.Azbar);
  CField out(pzb.grid(), std::max(pzb.margin(), qz.margin()));
  out.require_interior("complex codifferential");
  for (int j = out.jbegin(); j < out.jend(); ++j)
    for (int i = out.ibegin(); i < out.iend(); ++i)
      out(i, j) = -2.0 * (pzb(i, j) + qz(i, j)) / (mu(i, j) * mu(i, j));
  return out;
}

ComplexForm theta_tilde(const GridMap& map) {
  const GValuedOneForm a = maurer_cartan_pullback(map);
  const ComplexForm ac = complexify(a);
  const CField da = to_complex(codifferential(a, map.mu).values);
  ComplexForm out;
  out.basis = map.basis;
  out.Az = diff_z(da) - bracket_field(*map.basis, ac.Az, da);
  out.Azbar = diff_zbar(da) - bracket_field(*map.basis, ac.Azbar, da);
  return out;
}

CField delta_theta_tilde_residual(const GridMap& map) {
  return codifferential_complex(theta_tilde(map), map.mu);
}

LoopSample beta_family(const ComplexForm& b, Complex lambda) {
  require_unit_modulus(lambda);
  LoopSample out;
  out.lambda = lambda;
  out.form.basis = b.basis;
  out.form.Az = scale(b.Az, 0.5 * (1.0 - lambda));
  out.form.Azbar = scale(b.Azbar, 0.5 * (1.0 - 1.0 / lambda));
  return out;
}

CField flatness_residual(const LoopSample& sample) {
  const ComplexForm& f = sample.form;
  const CField qz = diff_z(f.Azbar);
  const CField pzb = diff_zbar(f.Az);
  const CField br = bracket_field(*f.basis, f.Az, f.Azbar);
  CField out(qz.grid(), std::max(qz.margin(), br.margin()));
  out.require_interior("flatness residual");
  for (int j = out.jbegin(); j < out.jend(); ++j)
    for (int i = out.ibegin(); i < out.iend(); ++i)
      out(i, j) = -2.0 * kI * (qz(i, j) - pzb(i, j) + br(i, j));
  return out;
}

AlphaFamilyResiduals alpha_family_residuals(const ComplexForm& a, const ComplexForm& b,
                                            Complex nu, const ScalarField& mu,
                                            ConjugateCoefficient variant) {
  require_unit_modulus(nu);
  require_same_grid(a.Az.grid(), b.Az.grid());
  require_same_basis(*a.basis, *b.basis);
  const Complex cz = 0.5 * (1.0 - nu);
  const Complex czb = 0.5 * (1.0 - 1.0 / nu);

  // delta of the deformed form, from its own definition.
  const CField azb = diff_zbar(a.Az);
  const CField az = diff_z(a.Azbar);
  CField da(azb.grid(), std::max(azb.margin(), az.margin()));
  da.require_interior("deformed codifferential");
  for (int j = da.jbegin(); j < da.jend(); ++j)
    for (int i = da.ibegin(); i < da.iend(); ++i)
      da(i, j) = -2.0 * (cz * azb(i, j) + czb * az(i, j)) / (mu(i, j) * mu(i, j));

  AlphaFamilyResiduals out;
  out.driven_z = diff_z(da) - bracket_field(*a.basis, scale(a.Az, cz), da);
  for (int j = out.driven_z.jbegin(); j < out.driven_z.jend(); ++j)
    for (int i = out.driven_z.ibegin(); i < out.driven_z.iend(); ++i)
      out.driven_z(i, j) -= b.Az(i, j);

  const Complex cbar = (variant == ConjugateCoefficient::printed) ? cz : czb;
  out.driven_zbar = diff_zbar(da) - bracket_field(*a.basis, scale(a.Azbar, cbar), da);
  for (int j = out.driven_zbar.jbegin(); j < out.driven_zbar.jend(); ++j)
    for (int i = out.driven_zbar.ibegin(); i < out.driven_zbar.iend(); ++i)
      out.driven_zbar(i, j) -= b.Azbar(i, j);

  ComplexForm deformed;
  deformed.basis = a.basis;
  deformed.Az = scale(a.Az, cz);
  deformed.Azbar = scale(a.Azbar, czb);
  out.zero_curvature = flatness_residual(LoopSample{nu, std::move(deformed)});
  return out;
}

ThreeStepReport three_step_verify(const GridMap& map) {
  const GValuedOneForm a = maurer_cartan_pullback(map);
  const ComplexForm ac = complexify(a);
  const CField da = to_complex(codifferential(a, map.mu).values);

  ThreeStepReport report;
  report.harmonic_sup = sup_norm(diff_x(a.Ax) + diff_y(a.Ay));

  // zero-curvature of the map's own complexified pullback
  {
    const CField az = diff_z(ac.Azbar);
    const CField azb = diff_zbar(ac.Az);
    const CField br = bracket_field(*map.basis, ac.Az, ac.Azbar);
    CField zc(az.grid(), std::max(az.margin(), br.margin()));
    for (int j = zc.jbegin(); j < zc.jend(); ++j)
      for (int i = zc.ibegin(); i < zc.iend(); ++i)
        zc(i, j) = az(i, j) - azb(i, j) + br(i, j);
    report.alpha_flatness_sup = sup_norm(zc);
  }

  // induced harmonic data B = components of theta_tilde
  const CField bz = diff_z(da) - bracket_field(*map.basis, ac.Az, da);
  const CField bzb = diff_zbar(da) - bracket_field(*map.basis, ac.Azbar, da);
  report.b_divergence_sup = sup_norm(diff_zbar(bz) + diff_z(bzb));
  {
    const CField first = diff_zbar(bz);
    const CField second = diff_z(bzb);
    const CField br = bracket_field(*map.basis, bz, bzb);
    CField eq(first.grid(), std::max(first.margin(), br.margin()));
    for (int j = eq.jbegin(); j < eq.jend(); ++j)
      for (int i = eq.ibegin(); i < eq.iend(); ++i)
        eq(i, j) = -first(i, j) + second(i, j) + br(i, j);
    report.b_curvature_sup = sup_norm(eq);
  }
  return report;
}

std::vector<Complex> unit_circle_samples(int count) {
  if (count < 1) throw InvalidInput("need at least one circle sample");
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / count;
    out.emplace_back(std::cos(phi), std::sin(phi));
  }
  return out;
}

}  // namespace bhg
