#pragma once

#include "kkbench/graded.hpp"

#include <string>
#include <vector>

namespace kkb {

/// A finite dimensional associative unital algebra given by structure
/// constants, with a Z/2 grading per basis element. The grading automorphism
/// gamma flips the sign of odd coordinates and must be an algebra map, which
/// at the level of structure constants means products of homogeneous basis
/// elements are homogeneous of the summed parity.
class FiniteAlgebra {
 public:
  /// left_mult[i] is the dim x dim matrix of left multiplication by e_i:
  /// (left_mult[i])(k, j) = coefficient of e_k in e_i e_j.
  FiniteAlgebra(std::vector<MatrixXcd> left_mult, VectorXi parity, VectorXcd unit);

  static FiniteAlgebra complex_line();
  /// C^n with pointwise product, trivially graded.
  static FiniteAlgebra diagonal(Index n);
  /// Full matrix algebra M_n, trivially graded; basis e_{rc} in row-major order.
  static FiniteAlgebra matrix_algebra(Index n);
  /// The group algebra of Z/2 graded by the group: basis {1, f}, f odd, f^2 = 1.
  static FiniteAlgebra z2_graded_line();

  Index dim() const { return static_cast<Index>(left_mult_.size()); }
  const VectorXi& parity() const { return parity_; }
  const VectorXcd& unit() const { return unit_; }
  const MatrixXcd& left_mult(Index i) const { return left_mult_[i]; }

  VectorXcd multiply(const VectorXcd& a, const VectorXcd& b) const;
  VectorXcd gamma(const VectorXcd& a) const;

  /// The graded multiplication map m: B (x) B -> B, b1 (x) b2 -> b1 gamma(b2),
  /// as a dim x dim^2 matrix. Column (i, j) has the second index fastest.
  MatrixXcd multiplication_map() const;

  double associativity_residual() const;
  double unit_residual() const;
  /// Zero iff products of homogeneous elements are homogeneous of summed parity.
  double grading_residual() const;

 private:
  std::vector<MatrixXcd> left_mult_;
  VectorXi parity_;
  VectorXcd unit_;
};

/// A basis of Omega^1(B) = ker m inside B (x) B, with the bimodule actions
/// b . (b1 (x) b2) = (b b1) (x) b2 and (b1 (x) b2) . b = b1 (x) (b2 b)
/// expressed in that basis.
struct UniversalForms {
  MatrixXcd basis;                      // dim^2 x r, orthonormal columns
  std::vector<MatrixXcd> left_action;   // r x r, one per algebra basis element
  std::vector<MatrixXcd> right_action;  // r x r
  Index form_dim() const { return basis.cols(); }
};

UniversalForms universal_one_forms(const FiniteAlgebra& b);

/// The universal derivation d b = 1 (x) b - gamma(b) (x) 1, as a vector in
/// B (x) B coordinates (second factor fastest). Lands in ker m.
VectorXcd universal_derivation(const FiniteAlgebra& b, const VectorXcd& elem);

/// A derivation delta: B -> M into the bimodule of matrices on a
/// representation space, given by its values on the algebra basis. rho is the
/// representation realizing the bimodule actions a . m . c = rho(a) m rho(c).
struct MatrixDerivation {
  std::vector<MatrixXcd> rho;    // representation of the basis elements
  std::vector<MatrixXcd> delta;  // derivation values on the basis
};

/// delta = graded commutator with a fixed homogeneous matrix T.
MatrixDerivation commutator_derivation(const FiniteAlgebra& b,
                                       const std::vector<MatrixXcd>& rho,
                                       const MatrixXcd& t, Parity deg_t);

/// Worst defect of the graded Leibniz rule
/// delta(e_i e_j) = delta(e_i) rho(e_j) + rho(gamma(e_i)) delta(e_j)
/// over all basis pairs; the indices of the worst pair are reported if asked.
double leibniz_residual(const FiniteAlgebra& b, const MatrixDerivation& d,
                        Index* worst_i = nullptr, Index* worst_j = nullptr);

/// The universal factorization j_delta applied to omega in B (x) B
/// coordinates: j_delta(sum l_{ij} e_i (x) e_j) = sum l_{ij} rho(e_i) delta(e_j),
/// which on ker m is the unique bimodule map with j_delta o d = delta.
/// Rejects derivations that fail the Leibniz rule beyond `tol`, naming the
/// worst violating pair.
MatrixXcd factor_derivation(const FiniteAlgebra& b, const MatrixDerivation& d,
                            const VectorXcd& omega, double tol = 1e-8);

}  // namespace kkb
