#include "kkbench/graded.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace kkb {

double GradedOperator::homogeneity_residual() const {
  const MatrixXcd g = space_.grading();
  const double sign = (degree_ == Parity::Even) ? 1.0 : -1.0;
  const MatrixXcd defect = g * mat_ * g - sign * mat_;
  return defect.size() == 0 ? 0.0 : operator_norm(defect);
}

GradedOperator graded_tensor(const GradedOperator& s, const GradedOperator& t) {
  const GradedSpace& e = s.space();
  const GradedSpace& f = t.space();
  const Index de = e.dim(), df = f.dim();
  MatrixXcd out(de * df, de * df);
  // kron(S, T) with column block i scaled by (-1)^{deg T * parity(e_i)}.
  for (Index i = 0; i < de; ++i) {
    const double sign =
        (t.degree() == Parity::Odd) ? parity_sign(e.parity(i)) : 1.0;
    for (Index ip = 0; ip < de; ++ip)
      out.block(ip * df, i * df, df, df) = (sign * s.matrix()(ip, i)) * t.matrix();
  }
  return GradedOperator(std::move(out), parity_sum(s.degree(), t.degree()),
                        GradedSpace::tensor(e, f));
}

GradedOperator graded_commutator(const GradedOperator& a, const GradedOperator& b) {
  const double sign =
      (a.degree() == Parity::Odd && b.degree() == Parity::Odd) ? -1.0 : 1.0;
  return GradedOperator(a.matrix() * b.matrix() - sign * b.matrix() * a.matrix(),
                        parity_sum(a.degree(), b.degree()), a.space());
}

std::vector<double> spectrum(const MatrixXcd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("spectrum: matrix must be square");
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * std::max(1.0, m.cwiseAbs().maxCoeff())) {
    std::ostringstream msg;
    msg << "spectrum: matrix is not self-adjoint (defect " << asym
        << "); use spectrum_complex for general matrices";
    throw std::invalid_argument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "spectrum: eigensolver failed to converge on a matrix of norm "
        << m.norm();
    throw std::runtime_error(msg.str());
  }
  std::vector<double> vals(es.eigenvalues().data(), es.eigenvalues().data() + m.rows());
  std::sort(vals.begin(), vals.end());
  return vals;
}

std::vector<double> spectrum(const GradedOperator& t) { return spectrum(t.matrix()); }

std::vector<Complex> spectrum_complex(const MatrixXcd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("spectrum: matrix must be square");
  Eigen::ComplexEigenSolver<MatrixXcd> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "spectrum_complex: eigensolver failed to converge on a matrix of norm "
        << m.norm();
    throw std::runtime_error(msg.str());
  }
  return std::vector<Complex>(es.eigenvalues().data(), es.eigenvalues().data() + m.rows());
}

namespace {

// Deterministic power iteration for the top singular value of large matrices.
double power_iteration_norm(const MatrixXcd& m) {
  std::mt19937_64 rng(0x5eed1234u);
  std::normal_distribution<double> gauss(0.0, 1.0);
  VectorXcd v(m.cols());
  for (Index i = 0; i < v.size(); ++i) v[i] = Complex(gauss(rng), gauss(rng));
  v.normalize();
  double sigma = 0.0;
  for (int it = 0; it < 4000; ++it) {
    VectorXcd w = m.adjoint() * (m * v);
    const double norm = w.norm();
    if (norm == 0.0) return 0.0;
    v = w / norm;
    const double next = std::sqrt(norm);
    if (std::abs(next - sigma) <= 1e-13 * std::max(1.0, next) && it > 8) return next;
    sigma = next;
  }
  return sigma;
}

}  // namespace

double operator_norm(const MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  if (std::max(m.rows(), m.cols()) <= 384)
    return Eigen::BDCSVD<MatrixXcd>(m).singularValues()(0);
  return power_iteration_norm(m);
}

double operator_norm(const GradedOperator& t) { return operator_norm(t.matrix()); }

MatrixXcd compress(const MatrixXcd& m, const std::vector<Index>& keep) {
  MatrixXcd out(static_cast<Index>(keep.size()), static_cast<Index>(keep.size()));
  for (std::size_t r = 0; r < keep.size(); ++r)
    for (std::size_t c = 0; c < keep.size(); ++c)
      out(static_cast<Index>(r), static_cast<Index>(c)) = m(keep[r], keep[c]);
  return out;
}

}  // namespace kkb
