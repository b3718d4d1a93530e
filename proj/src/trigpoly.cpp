#include "kkbench/trigpoly.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace kkb {

Complex TrigPoly::eval(double x) const {
  Complex acc(0.0, 0.0);
  for (int k = -cutoff_; k <= cutoff_; ++k)
    acc += coeff(k) * std::polar(1.0, 2.0 * std::numbers::pi * k * x);
  return acc;
}

TrigPoly multiply(const TrigPoly& f, const TrigPoly& g, TruncationPolicy policy) {
  if (f.cutoff() != g.cutoff())
    throw std::invalid_argument("multiply: cutoff mismatch");
  const int m = f.cutoff();
  TrigPoly out(m);
  for (int j = -m; j <= m; ++j) {
    const Complex fj = f.coeff(j);
    if (fj == Complex(0.0, 0.0)) continue;
    for (int k = -m; k <= m; ++k) {
      const Complex term = fj * g.coeff(k);
      if (term == Complex(0.0, 0.0)) continue;
      const int mode = j + k;
      if (mode < -m || mode > m) {
        if (policy == TruncationPolicy::Error) {
          std::ostringstream msg;
          msg << "multiply: product mode " << mode << " leaves the band |k| <= " << m;
          throw std::domain_error(msg.str());
        }
        continue;  // hard drop
      }
      out.set_coeff(mode, out.coeff(mode) + term);
    }
  }
  return out;
}

TrigPoly circle_derivative(const TrigPoly& f) {
  TrigPoly out(f.cutoff());
  for (int k = -f.cutoff(); k <= f.cutoff(); ++k) out.set_coeff(k, double(k) * f.coeff(k));
  return out;
}

TrigPoly rotated(const TrigPoly& f, double theta) {
  TrigPoly out(f.cutoff());
  for (int k = -f.cutoff(); k <= f.cutoff(); ++k)
    out.set_coeff(k, std::polar(1.0, 2.0 * std::numbers::pi * k * theta) * f.coeff(k));
  return out;
}

MatrixXcd multiplication_matrix(const TrigPoly& f) {
  const int m = f.cutoff();
  const Index d = 2 * m + 1;
  MatrixXcd out = MatrixXcd::Zero(d, d);
  for (int col = -m; col <= m; ++col)
    for (int j = -m; j <= m; ++j) {
      const int row = col + j;
      if (row < -m || row > m) continue;
      out(row + m, col + m) = f.coeff(j);
    }
  return out;
}

TrigPoly antiderivative(const TrigPoly& f) {
  TrigPoly out(f.cutoff());
  for (int k = -f.cutoff(); k <= f.cutoff(); ++k)
    if (k != 0) out.set_coeff(k, f.coeff(k) / double(k));
  return out;
}

}  // namespace kkb
