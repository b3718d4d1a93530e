#pragma once

#include "kkbench/graded.hpp"

namespace kkb {

/// Out-of-band behaviour for truncated products. HardDrop discards modes with
/// |k| > M (the default; keeps inner products positive semidefinite); Error
/// rejects any product that would leave the band.
enum class TruncationPolicy { HardDrop, Error };

/// A truncated Laurent polynomial sum c_k z^k, -M <= k <= M, modeling an
/// element of C(S^1) in the generator z = e^{2 pi i x}. Also used for 1-forms
/// on the circle, which are multiplication operators f [D, g] and hence again
/// of this shape.
class TrigPoly {
 public:
  explicit TrigPoly(int cutoff) : cutoff_(check_cutoff(cutoff)), c_(VectorXcd::Zero(2 * cutoff + 1)) {}

  TrigPoly(int cutoff, VectorXcd coeffs) : cutoff_(check_cutoff(cutoff)), c_(std::move(coeffs)) {
    if (c_.size() != 2 * cutoff_ + 1)
      throw std::invalid_argument("TrigPoly: coefficient vector must have length 2M+1");
  }

  static TrigPoly constant(int cutoff, Complex v) {
    TrigPoly f(cutoff);
    f.set_coeff(0, v);
    return f;
  }

  static TrigPoly monomial(int cutoff, int k, Complex v = Complex(1.0, 0.0)) {
    TrigPoly f(cutoff);
    f.set_coeff(k, v);
    return f;
  }

  int cutoff() const { return cutoff_; }
  const VectorXcd& coeffs() const { return c_; }

  Complex coeff(int k) const {
    return (k < -cutoff_ || k > cutoff_) ? Complex(0.0, 0.0) : c_[k + cutoff_];
  }

  void set_coeff(int k, Complex v) {
    if (k < -cutoff_ || k > cutoff_)
      throw std::out_of_range("TrigPoly: mode index outside the truncation band");
    c_[k + cutoff_] = v;
  }

  /// Largest |k| carrying a nonzero coefficient; -1 for the zero polynomial.
  int max_degree(double tol = 0.0) const {
    int deg = -1;
    for (int k = -cutoff_; k <= cutoff_; ++k)
      if (std::abs(coeff(k)) > tol) deg = std::max(deg, std::abs(k));
    return deg;
  }

  bool is_zero(double tol = 0.0) const { return max_degree(tol) < 0; }

  /// Pointwise complex conjugate f*: coefficients conj(c_{-k}).
  TrigPoly conjugate() const {
    TrigPoly out(cutoff_);
    for (int k = -cutoff_; k <= cutoff_; ++k) out.set_coeff(k, std::conj(coeff(-k)));
    return out;
  }

  /// True when f is a real-valued function, i.e. c_{-k} = conj(c_k).
  bool is_real_function(double tol = 1e-12) const {
    for (int k = 0; k <= cutoff_; ++k)
      if (std::abs(coeff(-k) - std::conj(coeff(k))) > tol) return false;
    return true;
  }

  /// Same coefficients inside a wider or narrower band (narrowing drops modes).
  TrigPoly resized(int new_cutoff) const {
    TrigPoly out(new_cutoff);
    for (int k = -std::min(cutoff_, new_cutoff); k <= std::min(cutoff_, new_cutoff); ++k)
      out.set_coeff(k, coeff(k));
    return out;
  }

  /// Evaluate at x in [0,1): f(x) = sum c_k e^{2 pi i k x}.
  Complex eval(double x) const;

  TrigPoly operator+(const TrigPoly& o) const {
    require_same_cutoff(o);
    return TrigPoly(cutoff_, c_ + o.c_);
  }
  TrigPoly operator-(const TrigPoly& o) const {
    require_same_cutoff(o);
    return TrigPoly(cutoff_, c_ - o.c_);
  }
  friend TrigPoly operator*(Complex s, const TrigPoly& f) { return TrigPoly(f.cutoff_, s * f.c_); }

  double max_abs_coeff() const { return c_.size() ? c_.cwiseAbs().maxCoeff() : 0.0; }
  double coeff_norm() const { return c_.norm(); }

 private:
  static int check_cutoff(int cutoff) {
    if (cutoff < 0) throw std::invalid_argument("TrigPoly: cutoff must be nonnegative");
    return cutoff;
  }
  void require_same_cutoff(const TrigPoly& o) const {
    if (cutoff_ != o.cutoff_) throw std::invalid_argument("TrigPoly: cutoff mismatch");
  }

  int cutoff_;
  VectorXcd c_;
};

/// Coefficient convolution; out-of-band modes handled by the policy.
TrigPoly multiply(const TrigPoly& f, const TrigPoly& g,
                  TruncationPolicy policy = TruncationPolicy::HardDrop);

/// The 1-form [1/(2 pi i) d/dx, f] as a multiplication operator: c_k -> k c_k.
TrigPoly circle_derivative(const TrigPoly& f);

/// Rotation by the angle 2 pi theta: c_k -> e^{2 pi i k theta} c_k.
TrigPoly rotated(const TrigPoly& f, double theta);

/// The (2M+1)x(2M+1) matrix of multiplication by f on the Fourier modes
/// e_{-M}..e_M, with out-of-band targets dropped.
MatrixXcd multiplication_matrix(const TrigPoly& f);

/// Antiderivative of the nonconstant part (c_k -> c_k / k, constant -> 0).
TrigPoly antiderivative(const TrigPoly& f);

}  // namespace kkb
