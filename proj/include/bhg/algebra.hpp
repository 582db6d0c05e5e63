#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "bhg/errors.hpp"

namespace bhg {

using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using CVector = Eigen::VectorXcd;

class AlgebraBasis;
using BasisPtr = std::shared_ptr<const AlgebraBasis>;

/// Orthonormal basis of a compact matrix Lie algebra.
///
/// Holds the basis matrices X_s (skew-Hermitian, traceless), the scale c of
/// the inner product <X,Y> = -c Tr(XY), and the structure constants
/// [X_t, X_s] = sum_l C^l_ts X_l stored as one dense matrix per upper index.
class AlgebraBasis {
public:
  /// Built-in algebras: "su2" ... "su8".  su2 is the standard basis
  ///   X1 = diag(i/2, -i/2), X2 = [[0,1/2],[-1/2,0]], X3 = [[0,i/2],[i/2,0]]
  /// with c = 2; higher ranks use normalized pair/diagonal generators.
  static BasisPtr builtin(const std::string& name);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(mats_.size()); }
  int matrix_dim() const { return static_cast<int>(mats_[0].rows()); }
  double inner_scale() const { return inner_scale_; }

  const Matrix& matrix(int s) const { return mats_[static_cast<std::size_t>(s)]; }

  /// C^l_ts as entry (t, s) of the l-th matrix.
  const RealMatrix& structure_matrix(int l) const { return struct_[static_cast<std::size_t>(l)]; }
  double structure(int l, int t, int s) const { return struct_[static_cast<std::size_t>(l)](t, s); }

  /// Coefficients of [x, y] through the structure constants.
  Vector bracket_coeffs(const Vector& x, const Vector& y) const;
  /// Complex-bilinear extension (complexified algebra).
  CVector bracket_coeffs(const CVector& x, const CVector& y) const;

  Matrix realize(const Vector& coeffs) const;
  Matrix realize(const CVector& coeffs) const;

  /// Orthogonal projection of an arbitrary matrix onto the basis span;
  /// the Frobenius norm of the rejected part is written to `defect`.
  Vector project(const Matrix& m, double* defect = nullptr) const;

  /// Numerical check of every construction invariant.
  struct CheckReport {
    double skew_hermitian = 0;     // max ||X_s + X_s^dagger||
    double traceless = 0;          // max |Tr X_s|
    double orthonormality = 0;     // max |<X_s,X_t> - delta|
    double antisymmetry = 0;       // max |C^l_ts + C^l_st|
    double ad_invariance = 0;      // max |C^l_ts + C^s_tl|
    double jacobi = 0;             // max Jacobi defect on the C tensor
    double bracket_vs_commutator = 0;

    double worst() const;
    bool pass(double tol = 1e-12) const { return worst() <= tol; }
  };
  CheckReport verify() const;

  AlgebraBasis(std::string name, double inner_scale, std::vector<Matrix> mats);

private:
  void orthonormalize();
  void compute_structure_constants();

  std::string name_;
  double inner_scale_;
  std::vector<Matrix> mats_;
  std::vector<RealMatrix> struct_;
};

/// True when elements over the two bases may be combined.
bool compatible(const AlgebraBasis& a, const AlgebraBasis& b);
void require_same_basis(const AlgebraBasis& a, const AlgebraBasis& b);

/// Element of a Lie algebra as a real coefficient vector over an AlgebraBasis.
class AlgebraElement {
public:
  AlgebraElement(BasisPtr basis, Vector coeffs);

  static AlgebraElement zero(BasisPtr basis);
  /// k-th basis vector X_{k+1}.
  static AlgebraElement generator(BasisPtr basis, int k);

  const BasisPtr& basis() const { return basis_; }
  const Vector& coeffs() const { return coeffs_; }
  Matrix matrix() const { return basis_->realize(coeffs_); }
  double norm() const { return coeffs_.norm(); }

  AlgebraElement operator+(const AlgebraElement& other) const;
  AlgebraElement operator-(const AlgebraElement& other) const;
  AlgebraElement operator-() const;
  AlgebraElement operator*(double s) const;

private:
  BasisPtr basis_;
  Vector coeffs_;
};

inline AlgebraElement operator*(double s, const AlgebraElement& x) { return x * s; }

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);
double inner_product(const AlgebraElement& x, const AlgebraElement& y);

/// Element of the group, stored as a dense complex matrix.
class GroupElement {
public:
  explicit GroupElement(Matrix m);
  static GroupElement identity(int n);

  const Matrix& matrix() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

  double unitarity_defect() const;              // ||psi^dagger psi - I||
  double determinant_defect() const;            // |det psi - 1|
  bool is_unitary(double tol = 1e-10) const { return unitarity_defect() <= tol; }

  GroupElement operator*(const GroupElement& other) const;

private:
  Matrix mat_;
};

/// exp(t X) as a group element.  Scaling-and-squaring with a 13-term Taylor
/// series after reducing the Frobenius norm below 1/2; adequate for the tiny
/// skew-Hermitian matrices handled here.
GroupElement exp_algebra(const AlgebraElement& x, double t = 1.0);

Matrix expm_skew(const Matrix& a);

/// Nearest unitary: psi (psi^dagger psi)^{-1/2}.
Matrix polar_unitary(const Matrix& m);

}  // namespace bhg
