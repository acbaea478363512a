#include "adcdse/impair.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace adcdse {

void ImpairmentParams::validate() const {
  if (!(std::abs(eps_gain) < 1.0)) {
    throw std::invalid_argument("|eps_gain| must be < 1, got " + std::to_string(eps_gain));
  }
  if (!(alpha_nl >= 0.0)) {
    throw std::invalid_argument("alpha_nl must be >= 0, got " + std::to_string(alpha_nl));
  }
}

double nonlinear_tf(double u, double alpha_nl) {
  if (alpha_nl == 0.0) return u;
  double t = std::tanh(alpha_nl);
  // Dividing by atanh(t) instead of alpha keeps the +-1 fixed points exact.
  return std::atanh(t * u) / std::atanh(t);
}

double gain_tf(double u, double eps_gain) { return (1.0 + eps_gain) * u; }

double stage_error(double u, const ImpairmentParams& p) {
  double v = nonlinear_tf(u, p.alpha_nl);
  // (1+eps)*v - u, arranged so the result is exactly eps*v when v == u.
  return (v - u) + p.eps_gain * v;
}

StageErrorEval::StageErrorEval(const ImpairmentParams& p) : eps_(p.eps_gain) {
  p.validate();
  if (p.alpha_nl > 0.0) {
    tanh_alpha_ = std::tanh(p.alpha_nl);
    atanh_tanh_alpha_ = std::atanh(tanh_alpha_);
    identity_ = false;
  }
}

double StageErrorEval::atanh_scaled(double u) const {
  return std::atanh(tanh_alpha_ * u) / atanh_tanh_alpha_;
}

}  // namespace adcdse
