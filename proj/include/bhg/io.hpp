#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "bhg/complex_loop.hpp"
#include "bhg/curve.hpp"
#include "bhg/surface.hpp"

namespace bhg::io {

using json = nlohmann::json;

// Coefficient vectors are plain arrays of reals; matrices are nested arrays
// of [re, im] pairs.
json coeffs_to_json(const Vector& v);
Vector coeffs_from_json(const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// {"algebra", "nx", "ny", "hx", "hy", "x0", "y0",
///  "mu":  [[real]]           (ny rows of nx),
///  "psi": [[[[re,im]]]]      (ny rows of nx matrices)}
json grid_map_to_json(const GridMap& map);
GridMap grid_map_from_json(const json& j);

/// {"algebra", "t0", "h", "F": [[coeffs]], "psi": optional}
json curve_to_json(const DiscreteCurve& curve);
DiscreteCurve curve_from_json(const json& j);

/// Harmonic data for the loop family:
/// {"algebra", grid keys, "Bz": [[[ [re,im] x dim ]]], "Bzbar": ...}
struct HarmonicData {
  BasisPtr basis;
  ScalarField mu;
  ComplexForm form;
};
json harmonic_data_to_json(const HarmonicData& data, int margin_note = 0);
HarmonicData harmonic_data_from_json(const json& j);

/// Trajectory CSV: t, y_1..y_n, residual_norm (17 significant digits,
/// "nan" where the stencil margin leaves the residual undefined).
void write_trajectory_csv(std::ostream& os, const DiscreteCurve& curve,
                          const CoeffSeries& residual);

/// Residual field CSV: x, y, coeff_1..coeff_n, norm over the interior.
void write_field_csv(std::ostream& os, const GValuedField& field);
json field_to_json(const GValuedField& field);

std::string format_double(double v);  // 17 significant digits, '.' decimal

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace bhg::io
