#pragma once

#include <cmath>
#include <vector>

#include "bhg/algebra.hpp"
#include "bhg/errors.hpp"

namespace bhg {

/// Uniform rectangular grid: nodes (x0 + i hx, y0 + j hy), 0 <= i < nx, 0 <= j < ny.
struct GridSpec {
  int nx = 0;
  int ny = 0;
  double hx = 0.0;
  double hy = 0.0;
  double x0 = 0.0;
  double y0 = 0.0;

  double x(int i) const { return x0 + i * hx; }
  double y(int j) const { return y0 + j * hy; }

  friend bool operator==(const GridSpec& a, const GridSpec& b) = default;
};

inline void require_same_grid(const GridSpec& a, const GridSpec& b) {
  if (!(a == b)) throw GridMismatch("grids differ");
}

/// Value field over a grid.  Entries are meaningful on the interior
/// [margin, n-1-margin] in both directions; the frame left by stencil
/// applications is kept allocated but unused.
template <class T>
class Field {
public:
  Field() = default;
  Field(GridSpec grid, int margin, const T& init = T{})
      : grid_(grid), margin_(margin),
        data_(static_cast<std::size_t>(grid.nx) * static_cast<std::size_t>(grid.ny), init) {}

  const GridSpec& grid() const { return grid_; }
  int margin() const { return margin_; }
  void set_margin(int m) { margin_ = m; }

  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(j) * grid_.nx + i]; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(j) * grid_.nx + i]; }

  int ibegin() const { return margin_; }
  int iend() const { return grid_.nx - margin_; }
  int jbegin() const { return margin_; }
  int jend() const { return grid_.ny - margin_; }
  bool has_interior() const { return ibegin() < iend() && jbegin() < jend(); }

  void require_interior(const char* what) const {
    if (!has_interior())
      throw InsufficientMargin(std::string(what) + ": margin " + std::to_string(margin_) +
                               " leaves no interior on a " + std::to_string(grid_.nx) + "x" +
                               std::to_string(grid_.ny) + " grid");
  }

private:
  GridSpec grid_{};
  int margin_ = 0;
  std::vector<T> data_;
};

using RField = Field<Vector>;     // real algebra coefficients per node
using CField = Field<CVector>;    // complexified coefficients per node
using ScalarField = Field<double>;
using MatrixField = Field<Matrix>;

namespace detail {

template <class T>
Field<T> centered_diff(const Field<T>& f, bool in_x, const char* what) {
  Field<T> out(f.grid(), f.margin() + 1);
  out.require_interior(what);
  const double step = in_x ? f.grid().hx : f.grid().hy;
  for (int j = out.jbegin(); j < out.jend(); ++j)
    for (int i = out.ibegin(); i < out.iend(); ++i)
      out(i, j) = in_x ? (f(i + 1, j) - f(i - 1, j)) / (2.0 * step)
                       : (f(i, j + 1) - f(i, j - 1)) / (2.0 * step);
  return out;
}

}  // namespace detail

/// Second-order central x-derivative; shrinks the interior by one node.
template <class T>
Field<T> diff_x(const Field<T>& f) {
  return detail::centered_diff(f, true, "d/dx");
}

template <class T>
Field<T> diff_y(const Field<T>& f) {
  return detail::centered_diff(f, false, "d/dy");
}

template <class T>
Field<T> operator+(const Field<T>& a, const Field<T>& b) {
  require_same_grid(a.grid(), b.grid());
  Field<T> out(a.grid(), std::max(a.margin(), b.margin()));
  for (int j = out.jbegin(); j < out.jend(); ++j)
    for (int i = out.ibegin(); i < out.iend(); ++i) out(i, j) = a(i, j) + b(i, j);
  return out;
}

template <class T>
Field<T> operator-(const Field<T>& a, const Field<T>& b) {
  require_same_grid(a.grid(), b.grid());
  Field<T> out(a.grid(), std::max(a.margin(), b.margin()));
  for (int j = out.jbegin(); j < out.jend(); ++j)
    for (int i = out.ibegin(); i < out.iend(); ++i) out(i, j) = a(i, j) - b(i, j);
  return out;
}

inline double sup_norm(const RField& f) {
  f.require_interior("sup norm");
  double sup = 0.0;
  for (int j = f.jbegin(); j < f.jend(); ++j)
    for (int i = f.ibegin(); i < f.iend(); ++i) sup = std::max(sup, f(i, j).norm());
  return sup;
}

inline double sup_norm(const CField& f) {
  f.require_interior("sup norm");
  double sup = 0.0;
  for (int j = f.jbegin(); j < f.jend(); ++j)
    for (int i = f.ibegin(); i < f.iend(); ++i) sup = std::max(sup, f(i, j).norm());
  return sup;
}

}  // namespace bhg
