#pragma once

namespace adcdse {

/// The two residue-amplifier impairments digital correction cannot absorb.
struct ImpairmentParams {
  double eps_gain = 0.0;  ///< relative gain error, |eps_gain| < 1
  double alpha_nl = 0.0;  ///< tanh-model nonlinearity coefficient, >= 0

  /// Throws std::invalid_argument if either field is out of range.
  void validate() const;
};

/// Normalized compressive transfer atanh(tanh(alpha)*u)/atanh(tanh(alpha)).
/// Odd, strictly increasing on [-1,1], fixes 0 and +-1 exactly; the
/// alpha -> 0 limit is the identity and alpha == 0 is evaluated as such.
double nonlinear_tf(double u, double alpha_nl);

/// (1 + eps_gain) * u.
double gain_tf(double u, double eps_gain);

/// Residue error of an impaired stage at ideal residue value u:
/// (1 + eps)*nonlinear_tf(u) - u. Odd in u; equals eps exactly at u = 1.
double stage_error(double u, const ImpairmentParams& p);

/// stage_error with the per-parameter transcendentals hoisted out of the
/// per-sample path.
class StageErrorEval {
 public:
  explicit StageErrorEval(const ImpairmentParams& p);

  double nonlinear(double u) const {
    return identity_ ? u : atanh_scaled(u);
  }

  double error(double u) const {
    double v = nonlinear(u);
    return (v - u) + eps_ * v;
  }

  double impaired_residue(double u) const { return (1.0 + eps_) * nonlinear(u); }

 private:
  double atanh_scaled(double u) const;

  double eps_;
  double tanh_alpha_ = 0.0;
  double atanh_tanh_alpha_ = 1.0;
  bool identity_ = true;
};

}  // namespace adcdse
