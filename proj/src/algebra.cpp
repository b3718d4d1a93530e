#include "kkbench/algebra.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <sstream>

namespace kkb {

FiniteAlgebra::FiniteAlgebra(std::vector<MatrixXcd> left_mult, VectorXi parity, VectorXcd unit)
    : left_mult_(std::move(left_mult)), parity_(std::move(parity)), unit_(std::move(unit)) {
  const Index n = dim();
  if (parity_.size() != n || unit_.size() != n)
    throw std::invalid_argument("FiniteAlgebra: inconsistent field dimensions");
  for (const auto& l : left_mult_)
    if (l.rows() != n || l.cols() != n)
      throw std::invalid_argument("FiniteAlgebra: left multiplication matrices must be dim x dim");
  if (associativity_residual() > 1e-12)
    throw std::invalid_argument("FiniteAlgebra: structure constants are not associative");
  if (unit_residual() > 1e-12)
    throw std::invalid_argument("FiniteAlgebra: unit coordinates do not give a two-sided unit");
  if (grading_residual() > 1e-12)
    throw std::invalid_argument("FiniteAlgebra: grading is not an algebra automorphism");
}

FiniteAlgebra FiniteAlgebra::complex_line() { return diagonal(1); }

FiniteAlgebra FiniteAlgebra::diagonal(Index n) {
  std::vector<MatrixXcd> lm(n, MatrixXcd::Zero(n, n));
  for (Index i = 0; i < n; ++i) lm[i](i, i) = 1.0;
  return FiniteAlgebra(std::move(lm), VectorXi::Zero(n), VectorXcd::Ones(n));
}

FiniteAlgebra FiniteAlgebra::matrix_algebra(Index n) {
  const Index d = n * n;
  std::vector<MatrixXcd> lm(d, MatrixXcd::Zero(d, d));
  auto idx = [n](Index r, Index c) { return r * n + c; };
  // e_{rc} e_{pq} = delta_{cp} e_{rq}
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c)
      for (Index q = 0; q < n; ++q) lm[idx(r, c)](idx(r, q), idx(c, q)) = 1.0;
  VectorXcd unit = VectorXcd::Zero(d);
  for (Index r = 0; r < n; ++r) unit[idx(r, r)] = 1.0;
  return FiniteAlgebra(std::move(lm), VectorXi::Zero(d), std::move(unit));
}

FiniteAlgebra FiniteAlgebra::z2_graded_line() {
  std::vector<MatrixXcd> lm(2, MatrixXcd::Zero(2, 2));
  lm[0] = MatrixXcd::Identity(2, 2);  // 1 * x = x
  lm[1] << 0.0, 1.0, 1.0, 0.0;        // f * 1 = f, f * f = 1
  VectorXi parity(2);
  parity << 0, 1;
  VectorXcd unit(2);
  unit << 1.0, 0.0;
  return FiniteAlgebra(std::move(lm), std::move(parity), std::move(unit));
}

VectorXcd FiniteAlgebra::multiply(const VectorXcd& a, const VectorXcd& b) const {
  VectorXcd out = VectorXcd::Zero(dim());
  for (Index i = 0; i < dim(); ++i)
    if (a[i] != Complex(0.0, 0.0)) out += a[i] * (left_mult_[i] * b);
  return out;
}

VectorXcd FiniteAlgebra::gamma(const VectorXcd& a) const {
  VectorXcd out = a;
  for (Index i = 0; i < dim(); ++i)
    if (parity_[i] % 2 == 1) out[i] = -out[i];
  return out;
}

MatrixXcd FiniteAlgebra::multiplication_map() const {
  const Index n = dim();
  MatrixXcd m = MatrixXcd::Zero(n, n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      m.col(i * n + j) = parity_sign(parity_[j]) * left_mult_[i].col(j);
  return m;
}

double FiniteAlgebra::associativity_residual() const {
  const Index n = dim();
  double worst = 0.0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      VectorXcd eij = left_mult_[i].col(j);
      for (Index k = 0; k < n; ++k) {
        VectorXcd lhs = VectorXcd::Zero(n);
        for (Index s = 0; s < n; ++s)
          if (eij[s] != Complex(0.0, 0.0)) lhs += eij[s] * left_mult_[s].col(k);
        VectorXcd rhs = left_mult_[i] * left_mult_[j].col(k);
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
      }
    }
  return worst;
}

double FiniteAlgebra::unit_residual() const {
  const Index n = dim();
  double worst = 0.0;
  for (Index j = 0; j < n; ++j) {
    VectorXcd ej = VectorXcd::Zero(n);
    ej[j] = 1.0;
    worst = std::max(worst, (multiply(unit_, ej) - ej).cwiseAbs().maxCoeff());
    worst = std::max(worst, (multiply(ej, unit_) - ej).cwiseAbs().maxCoeff());
  }
  return worst;
}

double FiniteAlgebra::grading_residual() const {
  const Index n = dim();
  double worst = 0.0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const int target = (parity_[i] + parity_[j]) % 2;
      for (Index k = 0; k < n; ++k)
        if (parity_[k] % 2 != target)
          worst = std::max(worst, std::abs(left_mult_[i](k, j)));
    }
  return worst;
}

UniversalForms universal_one_forms(const FiniteAlgebra& b) {
  const Index n = b.dim();
  const MatrixXcd m = b.multiplication_map();
  // Kernel via full-pivot LU; orthonormalize for stable coordinate solves.
  Eigen::FullPivLU<MatrixXcd> lu(m);
  lu.setThreshold(1e-10);
  MatrixXcd kernel = lu.kernel();
  if (lu.dimensionOfKernel() == 0) kernel = MatrixXcd::Zero(n * n, 0);
  Eigen::HouseholderQR<MatrixXcd> qr(kernel);
  MatrixXcd q = qr.householderQ() * MatrixXcd::Identity(n * n, kernel.cols());

  UniversalForms forms;
  forms.basis = q;
  const MatrixXcd basis_adj = q.adjoint();
  forms.left_action.reserve(n);
  forms.right_action.reserve(n);
  for (Index i = 0; i < n; ++i) {
    // e_i . (e_p (x) e_q) = (e_i e_p) (x) e_q ; tensor index p*n+q, q fastest.
    MatrixXcd left = MatrixXcd::Zero(n * n, n * n);
    MatrixXcd right = MatrixXcd::Zero(n * n, n * n);
    for (Index p = 0; p < n; ++p)
      for (Index q2 = 0; q2 < n; ++q2) {
        const VectorXcd ip = b.left_mult(i).col(p);  // coefficients of e_i e_p
        for (Index s = 0; s < n; ++s) left(s * n + q2, p * n + q2) = ip[s];
        const VectorXcd qi = b.left_mult(q2).col(i);  // coefficients of e_q e_i
        for (Index s = 0; s < n; ++s) right(p * n + s, p * n + q2) = qi[s];
      }
    forms.left_action.push_back(basis_adj * left * q);
    forms.right_action.push_back(basis_adj * right * q);
  }
  return forms;
}

VectorXcd universal_derivation(const FiniteAlgebra& b, const VectorXcd& elem) {
  const Index n = b.dim();
  const VectorXcd gamma_elem = b.gamma(elem);
  VectorXcd out = VectorXcd::Zero(n * n);
  for (Index j = 0; j < n; ++j) {
    // 1 (x) b
    for (Index i = 0; i < n; ++i) out[i * n + j] += b.unit()[i] * elem[j];
    // - gamma(b) (x) 1
    for (Index i = 0; i < n; ++i) out[j * n + i] -= gamma_elem[j] * b.unit()[i];
  }
  return out;
}

MatrixDerivation commutator_derivation(const FiniteAlgebra& b,
                                       const std::vector<MatrixXcd>& rho,
                                       const MatrixXcd& t, Parity deg_t) {
  if (static_cast<Index>(rho.size()) != b.dim())
    throw std::invalid_argument("commutator_derivation: representation size mismatch");
  MatrixDerivation d;
  d.rho = rho;
  d.delta.reserve(rho.size());
  for (Index i = 0; i < b.dim(); ++i) {
    const double sign =
        (deg_t == Parity::Odd && b.parity()[i] % 2 == 1) ? -1.0 : 1.0;
    d.delta.push_back(t * rho[i] - sign * rho[i] * t);
  }
  return d;
}

double leibniz_residual(const FiniteAlgebra& b, const MatrixDerivation& d,
                        Index* worst_i, Index* worst_j) {
  const Index n = b.dim();
  double worst = 0.0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const VectorXcd prod = b.left_mult(i).col(j);
      MatrixXcd lhs = MatrixXcd::Zero(d.delta[0].rows(), d.delta[0].cols());
      for (Index k = 0; k < n; ++k)
        if (prod[k] != Complex(0.0, 0.0)) lhs += prod[k] * d.delta[k];
      const MatrixXcd rhs =
          d.delta[i] * d.rho[j] + parity_sign(b.parity()[i]) * d.rho[i] * d.delta[j];
      const double defect = (lhs - rhs).cwiseAbs().maxCoeff();
      if (defect > worst) {
        worst = defect;
        if (worst_i) *worst_i = i;
        if (worst_j) *worst_j = j;
      }
    }
  return worst;
}

MatrixXcd factor_derivation(const FiniteAlgebra& b, const MatrixDerivation& d,
                            const VectorXcd& omega, double tol) {
  Index wi = 0, wj = 0;
  const double defect = leibniz_residual(b, d, &wi, &wj);
  if (defect > tol) {
    std::ostringstream msg;
    msg << "factor_derivation: input fails the graded Leibniz rule (defect " << defect
        << " on basis pair (" << wi << ", " << wj << "))";
    throw std::invalid_argument(msg.str());
  }
  const Index n = b.dim();
  if (omega.size() != n * n)
    throw std::invalid_argument("factor_derivation: omega must live in B (x) B");
  MatrixXcd out = MatrixXcd::Zero(d.delta[0].rows(), d.delta[0].cols());
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Complex l = omega[i * n + j];
      if (l != Complex(0.0, 0.0)) out += l * d.rho[i] * d.delta[j];
    }
  return out;
}

}  // namespace kkb
