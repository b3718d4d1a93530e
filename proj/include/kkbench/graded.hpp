#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

namespace kkb {

using Complex = std::complex<double>;
using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using Eigen::VectorXi;

/// Default tolerance for identity-type residuals (p^2 = p, gamma^2 = 1, ...).
inline constexpr double kIdentityTol = 1e-10;

enum class Parity : int { Even = 0, Odd = 1 };

inline Parity parity_sum(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

inline double parity_sign(int p) { return (p % 2 == 0) ? 1.0 : -1.0; }

/// A finite dimensional Z/2-graded Hilbert space: a dimension together with a
/// parity label (0 even, 1 odd) per basis vector. The grading involution
/// gamma = diag(+-1) satisfies gamma^2 = 1 by construction.
class GradedSpace {
 public:
  explicit GradedSpace(VectorXi parity) : parity_(std::move(parity)) {
    for (Index i = 0; i < parity_.size(); ++i) {
      if (parity_[i] != 0 && parity_[i] != 1)
        throw std::invalid_argument("GradedSpace: parity labels must be 0 or 1");
    }
  }

  /// All-even (trivially graded) space.
  static GradedSpace trivial(Index dim) { return GradedSpace(VectorXi::Zero(dim)); }

  /// E + E with the first copy keeping its parity and the second copy shifted
  /// by `shift` (used for graph doublings, where (e, De) is homogeneous when
  /// the second leg is shifted by the degree of D).
  static GradedSpace doubled(const GradedSpace& base, Parity shift) {
    VectorXi p(2 * base.dim());
    for (Index i = 0; i < base.dim(); ++i) {
      p[i] = base.parity(i);
      p[base.dim() + i] = (base.parity(i) + static_cast<int>(shift)) % 2;
    }
    return GradedSpace(std::move(p));
  }

  /// Tensor product grading; the second factor index runs fastest and
  /// parities add mod 2.
  static GradedSpace tensor(const GradedSpace& a, const GradedSpace& b) {
    VectorXi p(a.dim() * b.dim());
    for (Index i = 0; i < a.dim(); ++i)
      for (Index j = 0; j < b.dim(); ++j) p[i * b.dim() + j] = (a.parity(i) + b.parity(j)) % 2;
    return GradedSpace(std::move(p));
  }

  static GradedSpace direct_sum(const GradedSpace& a, const GradedSpace& b) {
    VectorXi p(a.dim() + b.dim());
    p.head(a.dim()) = a.parities();
    p.tail(b.dim()) = b.parities();
    return GradedSpace(std::move(p));
  }

  Index dim() const { return parity_.size(); }
  int parity(Index i) const { return parity_[i]; }
  const VectorXi& parities() const { return parity_; }
  bool trivially_graded() const { return parity_.isZero(); }

  /// The grading involution gamma.
  MatrixXcd grading() const {
    MatrixXcd g = MatrixXcd::Zero(dim(), dim());
    for (Index i = 0; i < dim(); ++i) g(i, i) = parity_sign(parity_[i]);
    return g;
  }

  friend bool operator==(const GradedSpace& a, const GradedSpace& b) {
    return a.parity_.size() == b.parity_.size() && a.parity_ == b.parity_;
  }

 private:
  VectorXi parity_;
};

/// A homogeneous operator on a graded space: a square complex matrix with a
/// declared degree. Even operators commute with gamma, odd ones anticommute;
/// homogeneity_residual() measures the defect.
class GradedOperator {
 public:
  GradedOperator(MatrixXcd matrix, Parity degree, GradedSpace space)
      : mat_(std::move(matrix)), degree_(degree), space_(std::move(space)) {
    if (mat_.rows() != mat_.cols())
      throw std::invalid_argument("GradedOperator: matrix must be square");
    if (mat_.rows() != space_.dim())
      throw std::invalid_argument("GradedOperator: matrix dimension does not match its space");
  }

  static GradedOperator identity(const GradedSpace& space) {
    return GradedOperator(MatrixXcd::Identity(space.dim(), space.dim()), Parity::Even, space);
  }

  static GradedOperator zero(const GradedSpace& space, Parity degree = Parity::Even) {
    return GradedOperator(MatrixXcd::Zero(space.dim(), space.dim()), degree, space);
  }

  const MatrixXcd& matrix() const { return mat_; }
  Parity degree() const { return degree_; }
  const GradedSpace& space() const { return space_; }
  Index dim() const { return mat_.rows(); }

  /// Conjugate transpose; degree is unchanged.
  GradedOperator adjoint() const { return GradedOperator(mat_.adjoint(), degree_, space_); }

  /// || gamma T gamma - (-1)^{deg T} T ||, zero for a genuinely homogeneous T.
  double homogeneity_residual() const;

  bool is_self_adjoint(double tol = kIdentityTol) const {
    return (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() <= tol;
  }

  GradedOperator operator+(const GradedOperator& o) const {
    require_same_space(o);
    if (degree_ != o.degree_)
      throw std::invalid_argument("GradedOperator: sum of mixed degrees is inhomogeneous");
    return GradedOperator(mat_ + o.mat_, degree_, space_);
  }

  GradedOperator operator-(const GradedOperator& o) const {
    require_same_space(o);
    if (degree_ != o.degree_)
      throw std::invalid_argument("GradedOperator: difference of mixed degrees is inhomogeneous");
    return GradedOperator(mat_ - o.mat_, degree_, space_);
  }

  /// Operator composition; degrees add mod 2.
  GradedOperator operator*(const GradedOperator& o) const {
    require_same_space(o);
    return GradedOperator(mat_ * o.mat_, parity_sum(degree_, o.degree_), space_);
  }

  friend GradedOperator operator*(Complex c, const GradedOperator& t) {
    return GradedOperator(c * t.mat_, t.degree_, t.space_);
  }

 private:
  void require_same_space(const GradedOperator& o) const {
    if (!(space_ == o.space_))
      throw std::invalid_argument("GradedOperator: operands live on different spaces");
  }

  MatrixXcd mat_;
  Parity degree_;
  GradedSpace space_;
};

/// Graded tensor product (S (x) T)(e (x) f) = (-1)^{deg T * deg e} Se (x) Tf.
/// The basis of E (x) F is enumerated with the F index fastest; the result is
/// homogeneous of degree deg S + deg T.
GradedOperator graded_tensor(const GradedOperator& s, const GradedOperator& t);

/// Graded commutator [a, b] = ab - (-1)^{deg a deg b} ba.
GradedOperator graded_commutator(const GradedOperator& a, const GradedOperator& b);

/// Eigenvalues of a self-adjoint operator, sorted ascending with multiplicity.
/// Throws if the matrix is not self-adjoint or the solver fails (the error
/// message carries the offending matrix norm).
std::vector<double> spectrum(const GradedOperator& t);
std::vector<double> spectrum(const MatrixXcd& m);

/// Eigenvalues of an arbitrary square matrix, unsorted complex list.
std::vector<Complex> spectrum_complex(const MatrixXcd& m);

/// Largest singular value. Dense SVD up to a size threshold, deterministic
/// power iteration on T*T above it.
double operator_norm(const MatrixXcd& m);
double operator_norm(const GradedOperator& t);

/// Restriction of a matrix to a subset of basis indices (rows and columns).
MatrixXcd compress(const MatrixXcd& m, const std::vector<Index>& keep);

}  // namespace kkb
