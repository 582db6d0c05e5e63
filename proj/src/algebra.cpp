#include "bhg/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <regex>

namespace bhg {

namespace {

constexpr int kMaxSuRank = 8;
constexpr double kInnerScaleDefault = 2.0;

// -c Tr(AB), real part (exact for skew-Hermitian arguments).
double trace_inner(const Matrix& a, const Matrix& b, double c) {
  return -c * (a * b).trace().real();
}

std::vector<Matrix> su2_matrices() {
  const std::complex<double> i(0.0, 1.0);
  Matrix x1(2, 2), x2(2, 2), x3(2, 2);
  x1 << 0.5 * i, 0.0, 0.0, -0.5 * i;
  x2 << 0.0, 0.5, -0.5, 0.0;
  x3 << 0.0, 0.5 * i, 0.5 * i, 0.0;
  return {x1, x2, x3};
}

// Normalized pair and diagonal generators of su(n), orthonormal under -c Tr.
std::vector<Matrix> sun_matrices(int n, double c) {
  std::vector<Matrix> out;
  const std::complex<double> i(0.0, 1.0);
  const double s = 1.0 / std::sqrt(2.0 * c);
  for (int q = 1; q < n; ++q) {
    for (int p = 0; p < q; ++p) {
      Matrix re = Matrix::Zero(n, n);
      re(p, q) = s;
      re(q, p) = -s;
      out.push_back(re);
      Matrix im = Matrix::Zero(n, n);
      im(p, q) = i * s;
      im(q, p) = i * s;
      out.push_back(im);
    }
  }
  for (int k = 1; k < n; ++k) {
    Matrix d = Matrix::Zero(n, n);
    const double scale = 1.0 / std::sqrt(c * k * (k + 1.0));
    for (int j = 0; j < k; ++j) d(j, j) = i * scale;
    d(k, k) = -i * static_cast<double>(k) * scale;
    out.push_back(d);
  }
  return out;
}

}  // namespace

AlgebraBasis::AlgebraBasis(std::string name, double inner_scale, std::vector<Matrix> mats)
    : name_(std::move(name)), inner_scale_(inner_scale), mats_(std::move(mats)) {
  if (mats_.empty() || inner_scale_ <= 0.0) throw InvalidInput("empty basis or non-positive inner scale");
  orthonormalize();
  compute_structure_constants();
  const CheckReport report = verify();
  if (!report.pass(1e-12))
    throw InvalidInput("basis '" + name_ + "' fails construction invariants (worst defect " +
                       std::to_string(report.worst()) + ")");
}

BasisPtr AlgebraBasis::builtin(const std::string& name) {
  static const std::regex pattern("su([0-9]+)");
  std::smatch m;
  if (!std::regex_match(name, m, pattern)) throw UnknownAlgebra("unknown algebra '" + name + "'");
  const int n = std::stoi(m[1].str());
  if (n < 2 || n > kMaxSuRank)
    throw UnknownAlgebra("unknown algebra '" + name + "' (supported: su2..su" +
                         std::to_string(kMaxSuRank) + ")");
  auto mats = (n == 2) ? su2_matrices() : sun_matrices(n, kInnerScaleDefault);
  return std::make_shared<const AlgebraBasis>(name, kInnerScaleDefault, std::move(mats));
}

void AlgebraBasis::orthonormalize() {
  // Modified Gram-Schmidt against -c Tr.  The generators are orthonormal by
  // construction; this pass only cleans residual roundoff.
  for (std::size_t s = 0; s < mats_.size(); ++s) {
    for (std::size_t t = 0; t < s; ++t)
      mats_[s] -= trace_inner(mats_[s], mats_[t], inner_scale_) * mats_[t];
    const double nrm = trace_inner(mats_[s], mats_[s], inner_scale_);
    if (nrm <= 0.0) throw InvalidInput("degenerate basis matrix during orthonormalization");
    mats_[s] /= std::sqrt(nrm);
  }
}

void AlgebraBasis::compute_structure_constants() {
  const int n = dim();
  struct_.assign(static_cast<std::size_t>(n), RealMatrix::Zero(n, n));
  for (int t = 0; t < n; ++t) {
    for (int s = 0; s < t; ++s) {
      const Matrix br = mats_[static_cast<std::size_t>(t)] * mats_[static_cast<std::size_t>(s)] -
                        mats_[static_cast<std::size_t>(s)] * mats_[static_cast<std::size_t>(t)];
      for (int l = 0; l < n; ++l) {
        const double c = trace_inner(br, mats_[static_cast<std::size_t>(l)], inner_scale_);
        struct_[static_cast<std::size_t>(l)](t, s) = c;
        struct_[static_cast<std::size_t>(l)](s, t) = -c;
      }
    }
  }
}

Vector AlgebraBasis::bracket_coeffs(const Vector& x, const Vector& y) const {
  const int n = dim();
  Vector out(n);
  for (int l = 0; l < n; ++l) out(l) = x.dot(struct_[static_cast<std::size_t>(l)] * y);
  return out;
}

CVector AlgebraBasis::bracket_coeffs(const CVector& x, const CVector& y) const {
  const int n = dim();
  CVector out(n);
  for (int l = 0; l < n; ++l)
    out(l) = x.transpose() * (struct_[static_cast<std::size_t>(l)] * y);
  return out;
}

Matrix AlgebraBasis::realize(const Vector& coeffs) const {
  Matrix out = Matrix::Zero(matrix_dim(), matrix_dim());
  for (int s = 0; s < dim(); ++s) out += coeffs(s) * mats_[static_cast<std::size_t>(s)];
  return out;
}

Matrix AlgebraBasis::realize(const CVector& coeffs) const {
  Matrix out = Matrix::Zero(matrix_dim(), matrix_dim());
  for (int s = 0; s < dim(); ++s) out += coeffs(s) * mats_[static_cast<std::size_t>(s)];
  return out;
}

Vector AlgebraBasis::project(const Matrix& m, double* defect) const {
  Vector coeffs(dim());
  for (int s = 0; s < dim(); ++s)
    coeffs(s) = -inner_scale_ * (m * mats_[static_cast<std::size_t>(s)]).trace().real();
  if (defect != nullptr) *defect = (m - realize(coeffs)).norm();
  return coeffs;
}

double AlgebraBasis::CheckReport::worst() const {
  return std::max({skew_hermitian, traceless, orthonormality, antisymmetry, ad_invariance, jacobi,
                   bracket_vs_commutator});
}

AlgebraBasis::CheckReport AlgebraBasis::verify() const {
  CheckReport r;
  const int n = dim();
  for (int s = 0; s < n; ++s) {
    const Matrix& x = mats_[static_cast<std::size_t>(s)];
    r.skew_hermitian = std::max(r.skew_hermitian, (x + x.adjoint()).norm());
    r.traceless = std::max(r.traceless, std::abs(x.trace()));
    for (int t = 0; t < n; ++t) {
      const double ip = trace_inner(x, mats_[static_cast<std::size_t>(t)], inner_scale_);
      r.orthonormality = std::max(r.orthonormality, std::abs(ip - (s == t ? 1.0 : 0.0)));
    }
  }
  for (int l = 0; l < n; ++l)
    for (int t = 0; t < n; ++t)
      for (int s = 0; s < n; ++s) {
        r.antisymmetry = std::max(r.antisymmetry, std::abs(structure(l, t, s) + structure(l, s, t)));
        r.ad_invariance = std::max(r.ad_invariance, std::abs(structure(l, t, s) + structure(s, t, l)));
      }

  // Jacobi identity as ad([X_i,X_j]) = [ad_i, ad_j].
  std::vector<RealMatrix> ad(static_cast<std::size_t>(n), RealMatrix::Zero(n, n));
  for (int t = 0; t < n; ++t)
    for (int l = 0; l < n; ++l)
      for (int s = 0; s < n; ++s) ad[static_cast<std::size_t>(t)](l, s) = structure(l, t, s);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RealMatrix lhs = RealMatrix::Zero(n, n);
      for (int m = 0; m < n; ++m) lhs += structure(m, i, j) * ad[static_cast<std::size_t>(m)];
      const RealMatrix rhs = ad[static_cast<std::size_t>(i)] * ad[static_cast<std::size_t>(j)] -
                             ad[static_cast<std::size_t>(j)] * ad[static_cast<std::size_t>(i)];
      r.jacobi = std::max(r.jacobi, (lhs - rhs).cwiseAbs().maxCoeff());
    }

  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s) {
      Vector et = Vector::Zero(n), es = Vector::Zero(n);
      et(t) = 1.0;
      es(s) = 1.0;
      const Matrix via_c = realize(bracket_coeffs(et, es));
      const Matrix comm = mats_[static_cast<std::size_t>(t)] * mats_[static_cast<std::size_t>(s)] -
                          mats_[static_cast<std::size_t>(s)] * mats_[static_cast<std::size_t>(t)];
      r.bracket_vs_commutator = std::max(r.bracket_vs_commutator, (via_c - comm).norm());
    }
  return r;
}

bool compatible(const AlgebraBasis& a, const AlgebraBasis& b) {
  return &a == &b || (a.name() == b.name() && a.dim() == b.dim());
}

void require_same_basis(const AlgebraBasis& a, const AlgebraBasis& b) {
  if (!compatible(a, b))
    throw BasisMismatch("algebra bases differ: '" + a.name() + "' vs '" + b.name() + "'");
}

AlgebraElement::AlgebraElement(BasisPtr basis, Vector coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  if (!basis_) throw InvalidInput("null basis");
  if (coeffs_.size() != basis_->dim()) throw InvalidInput("coefficient count does not match basis dimension");
}

AlgebraElement AlgebraElement::zero(BasisPtr basis) {
  const int n = basis->dim();
  return AlgebraElement(std::move(basis), Vector::Zero(n));
}

AlgebraElement AlgebraElement::generator(BasisPtr basis, int k) {
  if (k < 0 || k >= basis->dim()) throw InvalidInput("generator index out of range");
  Vector v = Vector::Zero(basis->dim());
  v(k) = 1.0;
  return AlgebraElement(std::move(basis), std::move(v));
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
  require_same_basis(*basis_, *other.basis_);
  return AlgebraElement(basis_, coeffs_ + other.coeffs_);
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
  require_same_basis(*basis_, *other.basis_);
  return AlgebraElement(basis_, coeffs_ - other.coeffs_);
}

AlgebraElement AlgebraElement::operator-() const { return AlgebraElement(basis_, -coeffs_); }

AlgebraElement AlgebraElement::operator*(double s) const { return AlgebraElement(basis_, s * coeffs_); }

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_basis(*x.basis(), *y.basis());
  return AlgebraElement(x.basis(), x.basis()->bracket_coeffs(x.coeffs(), y.coeffs()));
}

double inner_product(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_basis(*x.basis(), *y.basis());
  return x.coeffs().dot(y.coeffs());
}

GroupElement::GroupElement(Matrix m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() == 0) throw InvalidInput("group element must be square");
  if (!mat_.allFinite()) throw InvalidInput("group element has non-finite entries");
}

GroupElement GroupElement::identity(int n) { return GroupElement(Matrix::Identity(n, n)); }

double GroupElement::unitarity_defect() const {
  return (mat_.adjoint() * mat_ - Matrix::Identity(mat_.rows(), mat_.cols())).norm();
}

double GroupElement::determinant_defect() const { return std::abs(mat_.determinant() - 1.0); }

GroupElement GroupElement::operator*(const GroupElement& other) const {
  return GroupElement(mat_ * other.mat_);
}

Matrix expm_skew(const Matrix& a) {
  const int n = static_cast<int>(a.rows());
  int squarings = 0;
  const double nrm = a.norm();
  if (nrm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
  const Matrix b = a / std::exp2(squarings);
  Matrix term = Matrix::Identity(n, n);
  Matrix sum = term;
  for (int k = 1; k <= 13; ++k) {
    term = (term * b) / static_cast<double>(k);
    sum += term;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

GroupElement exp_algebra(const AlgebraElement& x, double t) {
  if (!std::isfinite(t) || !x.coeffs().allFinite()) throw InvalidInput("non-finite exponential argument");
  return GroupElement(expm_skew(t * x.matrix()));
}

Matrix polar_unitary(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m.adjoint() * m);
  const Eigen::VectorXd inv_sqrt = es.eigenvalues().cwiseMax(1e-300).cwiseSqrt().cwiseInverse();
  return m * (es.eigenvectors() * inv_sqrt.asDiagonal().toDenseMatrix().cast<std::complex<double>>() *
              es.eigenvectors().adjoint());
}

}  // namespace bhg
