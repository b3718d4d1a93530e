#pragma once

#include "kkbench/trigpoly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kkb {

/// Even cycles live on genuinely graded spaces with odd operators; odd
/// (ungraded) cycles carry trivially graded spaces, and products of two odd
/// cycles are assembled on a doubled space with the 2x2 block operator.
/// Mixed products would need Clifford bookkeeping and are not supported.
enum class CycleKind { Even, Odd };

/// A fibers x fibers grid of TrigPoly entries over a common cutoff: the
/// coefficient form of base-linear data on a free module (operators, left
/// actions, connection values).
class SymbolMatrix {
 public:
  SymbolMatrix() : rows_(0), cols_(0), cutoff_(0) {}
  SymbolMatrix(Index rows, Index cols, int cutoff)
      : rows_(rows), cols_(cols), cutoff_(cutoff),
        entries_(static_cast<std::size_t>(rows * cols), TrigPoly(cutoff)) {}

  static SymbolMatrix constants(const MatrixXcd& m, int cutoff);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  int cutoff() const { return cutoff_; }

  TrigPoly& at(Index r, Index c) { return entries_[static_cast<std::size_t>(r * cols_ + c)]; }
  const TrigPoly& at(Index r, Index c) const {
    return entries_[static_cast<std::size_t>(r * cols_ + c)];
  }

  /// (r,c) -> conjugate poly of (c,r); the adjoint of the realized operator.
  SymbolMatrix adjoint() const;

  int max_degree() const;
  bool is_zero(double tol = 0.0) const { return max_degree(tol) < 0; }
  int max_degree(double tol) const;

  /// Block matrix of multiplication operators on fibers x (2M+1) modes,
  /// fiber index slow, mode index fast.
  MatrixXcd realize() const;

 private:
  Index rows_, cols_;
  int cutoff_;
  std::vector<TrigPoly> entries_;
};

/// A finite model of a spectral triple: named generators represented on a
/// graded space together with a self-adjoint Dirac matrix (odd for even-kind
/// cycles).
struct SpectralTriple {
  GradedSpace space;
  GradedOperator dirac;
  std::map<std::string, GradedOperator> generators;
  CycleKind kind = CycleKind::Even;

  const GradedOperator& generator(const std::string& name) const;
  /// ||[D, a]|| for a named generator (graded commutator); finite by
  /// construction, recorded on demand.
  double commutator_norm(const std::string& name) const;
  /// Self-adjointness / homogeneity / grading defects; throws above tol.
  void validate(double tol = kIdentityTol) const;
};

/// A correspondence in the circle model: a free module with fibers e_n over
/// the truncated circle algebra, a base-linear odd self-adjoint operator S, a
/// connection given by its values on the fiber basis (extended by the Leibniz
/// rule), and a left action of the upstream algebra, all stored as symbol
/// matrices over the base.
struct Correspondence {
  VectorXi fiber_parity;  // one label per fiber basis vector
  int cutoff = 0;         // base truncation M
  CycleKind kind = CycleKind::Odd;
  SymbolMatrix op;        // S
  SymbolMatrix nabla;     // column n holds the fiber components of nabla(e_n)
  std::map<std::string, SymbolMatrix> left_action;

  Index fibers() const { return fiber_parity.size(); }
  Index realized_dim() const { return fibers() * (2 * cutoff + 1); }
  GradedSpace realized_space() const;
  GradedSpace fiber_space() const { return GradedSpace(fiber_parity); }

  MatrixXcd realize(const SymbolMatrix& sym) const;
  GradedOperator op_realized() const;
  /// The connection as a matrix on the realized module (the Omega^1 leg is
  /// absorbed through the free rank-one identification): realize(nabla) plus
  /// the Leibniz term 1 (x) diag(k).
  MatrixXcd connection_matrix() const;
  MatrixXcd right_action(const TrigPoly& f) const;
  GradedOperator left_action_realized(const std::string& name) const;

  /// The base-valued inner product of two realized module elements,
  /// <x, y> = sum_n x_n^* y_n (orthonormal fiber basis).
  TrigPoly inner_product(const VectorXcd& x, const VectorXcd& y) const;

  /// Structural invariants: S self-adjoint and base-linear (checked on the
  /// interior), positivity of <e,e> on samples. Throws above tol.
  void validate(double tol = kIdentityTol) const;
};

struct LeibnizSample {
  VectorXcd element;  // realized module element
  TrigPoly base;      // base algebra element
};

/// Max norm of nabla(e b) - nabla(e) b - e (x) db over the samples. Samples
/// whose mode content would leave the band are rejected, not truncated.
double check_leibniz(const Correspondence& c, const std::vector<LeibnizSample>& samples);

/// Max coefficient defect of <e1, nabla(e2)> - <nabla(e1), e2> = d<e1, e2>
/// over sampled pairs of realized module elements.
double check_hermitian(const Correspondence& c,
                       const std::vector<std::pair<VectorXcd, VectorXcd>>& samples);

/// The operator 1 (x)_nabla T on the balanced module E (x)_B H':
/// e (x) h -> (-1)^{deg e deg T} (e (x) Th + nabla_T(e) h), with nabla_T the
/// factorization of the derivation b -> [T, b] applied to the connection
/// values. Requires t to carry the base generator "z" whenever the connection
/// is non-flat.
GradedOperator lift_operator(const Correspondence& c, const SpectralTriple& t);

/// Composition with a spectral triple for the base: even-kind inputs give
/// (E (x) H, S (x) 1 + 1 (x)_nabla T); odd-kind inputs give the even triple on
/// the doubled space with blocks S (x) 1 -+ i (1 (x)_nabla T).
SpectralTriple compose(const Correspondence& c, const SpectralTriple& t);

/// Composition of correspondences (even kind only): balanced module, product
/// operator, and the composed connection built from the derivation
/// b -> [nabla', b].
Correspondence compose(const Correspondence& c1, const Correspondence& c2);

/// External product of spectral triples: even x even is the graded tensor
/// with S (x) 1 + 1 (x) T; odd x odd is assembled on the doubled space.
SpectralTriple external_product(const SpectralTriple& t1, const SpectralTriple& t2);

/// The even avatar of an odd cycle: (H + H, [[0, S], [S, 0]]) with the
/// split grading and generators acting diagonally.
SpectralTriple graded_double(const SpectralTriple& t);

/// The identity correspondence (B, 0, d) over the circle model.
Correspondence identity_correspondence(int cutoff);

struct IsoOptions {
  double tol = 1e-8;
  std::vector<Index> restrict_to;  // compare on these basis indices; empty = all
};

struct IsoReport {
  double op_residual = 0.0;
  double connection_residual = 0.0;  // correspondences only
  std::map<std::string, double> generator_residuals;
  bool verdict = false;           // all residuals within tol
  bool verdict_operator = false;  // ignoring the connection comparison
};

/// Residuals of g^{-1} S_y g - S_x, generator intertwinings, and (for
/// correspondences) g^{-1} nabla_y g - nabla_x. g maps x's space to y's.
IsoReport compare_up_to_iso(const SpectralTriple& x, const SpectralTriple& y,
                            const MatrixXcd& g, const IsoOptions& opts = {});
IsoReport compare_up_to_iso(const Correspondence& x, const Correspondence& y,
                            const MatrixXcd& g, const IsoOptions& opts = {});

/// rho(f) = sum_k c_k Z^k on the right factor, negative powers via adjoints
/// of the z action (exact on the interior).
MatrixXcd rep_of_poly(const MatrixXcd& z_action, const TrigPoly& f);

/// j_delta for the circle calculus with delta(b) = [T, b]: determined by
/// j_delta(dg) = [T, rho(g)] on exact forms and by the bimodule extension
/// z^{-1} [T, rho(z)] on the constant form.
MatrixXcd circle_j_delta(const MatrixXcd& t, const MatrixXcd& z_action, const TrigPoly& omega);

}  // namespace kkb
