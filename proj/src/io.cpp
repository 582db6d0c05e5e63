#include "bhg/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

namespace bhg::io {

namespace {

json complex_to_json(const std::complex<double>& z) { return json::array({z.real(), z.imag()}); }

std::complex<double> complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidInput("expected [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

json cvector_to_json(const CVector& v) {
  json out = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(complex_to_json(v(k)));
  return out;
}

CVector cvector_from_json(const json& j) {
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) v(static_cast<Eigen::Index>(k)) = complex_from_json(j[k]);
  return v;
}

GridSpec grid_from_json(const json& j) {
  GridSpec g;
  g.nx = j.at("nx").get<int>();
  g.ny = j.at("ny").get<int>();
  g.hx = j.at("hx").get<double>();
  g.hy = j.at("hy").get<double>();
  g.x0 = j.at("x0").get<double>();
  g.y0 = j.at("y0").get<double>();
  return g;
}

void grid_to_json(json& j, const GridSpec& g) {
  j["nx"] = g.nx;
  j["ny"] = g.ny;
  j["hx"] = g.hx;
  j["hy"] = g.hy;
  j["x0"] = g.x0;
  j["y0"] = g.y0;
}

}  // namespace

json coeffs_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(v(k));
  return out;
}

Vector coeffs_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("expected coefficient array");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) v(static_cast<Eigen::Index>(k)) = j[k].get<double>();
  return v;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("expected matrix rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(j[static_cast<std::size_t>(r)].size()) != cols)
      throw InvalidInput("ragged matrix rows");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = complex_from_json(j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  }
  return m;
}

json grid_map_to_json(const GridMap& map) {
  json j;
  j["algebra"] = map.basis->name();
  grid_to_json(j, map.grid);
  json mu_rows = json::array();
  json psi_rows = json::array();
  for (int row = 0; row < map.grid.ny; ++row) {
    json mu_row = json::array();
    json psi_row = json::array();
    for (int col = 0; col < map.grid.nx; ++col) {
      mu_row.push_back(map.mu(col, row));
      psi_row.push_back(matrix_to_json(map.psi(col, row)));
    }
    mu_rows.push_back(std::move(mu_row));
    psi_rows.push_back(std::move(psi_row));
  }
  j["mu"] = std::move(mu_rows);
  j["psi"] = std::move(psi_rows);
  return j;
}

GridMap grid_map_from_json(const json& j) {
  GridMap map;
  try {
    map.basis = AlgebraBasis::builtin(j.at("algebra").get<std::string>());
    map.grid = grid_from_json(j);
    map.mu = ScalarField(map.grid, 0, 1.0);
    map.psi = MatrixField(map.grid, 0);
    const json& mu = j.at("mu");
    const json& psi = j.at("psi");
    if (static_cast<int>(mu.size()) != map.grid.ny || static_cast<int>(psi.size()) != map.grid.ny)
      throw InvalidInput("field row count does not match ny");
    for (int row = 0; row < map.grid.ny; ++row) {
      const json& mu_row = mu[static_cast<std::size_t>(row)];
      const json& psi_row = psi[static_cast<std::size_t>(row)];
      if (static_cast<int>(mu_row.size()) != map.grid.nx ||
          static_cast<int>(psi_row.size()) != map.grid.nx)
        throw InvalidInput("field column count does not match nx");
      for (int col = 0; col < map.grid.nx; ++col) {
        map.mu(col, row) = mu_row[static_cast<std::size_t>(col)].get<double>();
        map.psi(col, row) = matrix_from_json(psi_row[static_cast<std::size_t>(col)]);
      }
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed grid map JSON: ") + e.what());
  }
  return map;
}

json curve_to_json(const DiscreteCurve& curve) {
  json j;
  j["algebra"] = curve.basis->name();
  j["t0"] = curve.t0;
  j["h"] = curve.h;
  json f = json::array();
  for (const Vector& v : curve.F) f.push_back(coeffs_to_json(v));
  j["F"] = std::move(f);
  if (curve.has_group_samples()) {
    json p = json::array();
    for (const Matrix& m : curve.psi) p.push_back(matrix_to_json(m));
    j["psi"] = std::move(p);
  }
  return j;
}

DiscreteCurve curve_from_json(const json& j) {
  DiscreteCurve curve;
  try {
    curve.basis = AlgebraBasis::builtin(j.at("algebra").get<std::string>());
    curve.t0 = j.at("t0").get<double>();
    curve.h = j.at("h").get<double>();
    for (const json& v : j.at("F")) curve.F.push_back(coeffs_from_json(v));
    if (j.contains("psi"))
      for (const json& m : j["psi"]) curve.psi.push_back(matrix_from_json(m));
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed curve JSON: ") + e.what());
  }
  if (!curve.psi.empty() && curve.psi.size() != curve.F.size())
    throw InvalidInput("group sample count does not match coefficient samples");
  return curve;
}

json harmonic_data_to_json(const HarmonicData& data, int margin_note) {
  json j;
  j["algebra"] = data.basis->name();
  grid_to_json(j, data.form.Az.grid());
  j["margin"] = margin_note > 0 ? margin_note : data.form.margin();
  json bz = json::array(), bzb = json::array(), mu = json::array();
  for (int row = 0; row < data.form.Az.grid().ny; ++row) {
    json bz_row = json::array(), bzb_row = json::array(), mu_row = json::array();
    for (int col = 0; col < data.form.Az.grid().nx; ++col) {
      bz_row.push_back(cvector_to_json(data.form.Az(col, row)));
      bzb_row.push_back(cvector_to_json(data.form.Azbar(col, row)));
      mu_row.push_back(data.mu(col, row));
    }
    bz.push_back(std::move(bz_row));
    bzb.push_back(std::move(bzb_row));
    mu.push_back(std::move(mu_row));
  }
  j["Bz"] = std::move(bz);
  j["Bzbar"] = std::move(bzb);
  j["mu"] = std::move(mu);
  return j;
}

HarmonicData harmonic_data_from_json(const json& j) {
  HarmonicData data;
  try {
    data.basis = AlgebraBasis::builtin(j.at("algebra").get<std::string>());
    const GridSpec grid = grid_from_json(j);
    const int margin = j.value("margin", 0);
    const int n = data.basis->dim();
    data.mu = ScalarField(grid, 0, 1.0);
    data.form.basis = data.basis;
    data.form.Az = CField(grid, margin, CVector::Zero(n));
    data.form.Azbar = CField(grid, margin, CVector::Zero(n));
    const json& bz = j.at("Bz");
    const json& bzb = j.at("Bzbar");
    for (int row = 0; row < grid.ny; ++row)
      for (int col = 0; col < grid.nx; ++col) {
        data.form.Az(col, row) =
            cvector_from_json(bz.at(static_cast<std::size_t>(row)).at(static_cast<std::size_t>(col)));
        data.form.Azbar(col, row) =
            cvector_from_json(bzb.at(static_cast<std::size_t>(row)).at(static_cast<std::size_t>(col)));
        if (j.contains("mu"))
          data.mu(col, row) =
              j["mu"].at(static_cast<std::size_t>(row)).at(static_cast<std::size_t>(col)).get<double>();
      }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed harmonic data JSON: ") + e.what());
  }
  return data;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_trajectory_csv(std::ostream& os, const DiscreteCurve& curve, const CoeffSeries& residual) {
  const int n = curve.basis->dim();
  os << "t";
  for (int k = 1; k <= n; ++k) os << ",y" << k;
  os << ",residual_norm\n";
  for (int k = 0; k < curve.size(); ++k) {
    os << format_double(curve.t(k));
    for (int s = 0; s < n; ++s) os << ',' << format_double(curve.F[static_cast<std::size_t>(k)](s));
    const int r = k - residual.offset;
    if (r >= 0 && r < static_cast<int>(residual.values.size()))
      os << ',' << format_double(residual.values[static_cast<std::size_t>(r)].norm());
    else
      os << ",nan";
    os << '\n';
  }
}

void write_field_csv(std::ostream& os, const GValuedField& field) {
  const int n = field.basis->dim();
  os << "x,y";
  for (int k = 1; k <= n; ++k) os << ",coeff_" << k;
  os << ",norm\n";
  const RField& f = field.values;
  for (int j = f.jbegin(); j < f.jend(); ++j)
    for (int i = f.ibegin(); i < f.iend(); ++i) {
      os << format_double(f.grid().x(i)) << ',' << format_double(f.grid().y(j));
      for (int s = 0; s < n; ++s) os << ',' << format_double(f(i, j)(s));
      os << ',' << format_double(f(i, j).norm()) << '\n';
    }
}

json field_to_json(const GValuedField& field) {
  json j;
  j["algebra"] = field.basis->name();
  grid_to_json(j, field.values.grid());
  j["margin"] = field.values.margin();
  json rows = json::array();
  for (int row = field.values.jbegin(); row < field.values.jend(); ++row) {
    json r = json::array();
    for (int col = field.values.ibegin(); col < field.values.iend(); ++col)
      r.push_back(coeffs_to_json(field.values(col, row)));
    rows.push_back(std::move(r));
  }
  j["values"] = std::move(rows);
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput("cannot parse '" + path + "': " + e.what());
  }
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace bhg::io
