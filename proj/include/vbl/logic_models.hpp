#pragma once

#include <cmath>

// Logic configurations and their misread probabilities.
//
// Two binary logic representations are modeled: mean-based logic (MBL),
// where the states are Gaussians with means 0 and mu read through a
// one-sided threshold, and variance-based logic (VBL), where both states
// are zero-mean Gaussians with sigma1 >= sigma0 read through a magnitude
// threshold |x| > v_th.
//
// All voltages are expressed in thermal units sigma_th = sqrt(KT/C_meas);
// MeasurementSetup carries the conversion to physical volts and joules.

namespace vbl {

// Boltzmann constant, J/K (exact SI value).
inline constexpr double kBoltzmann = 1.380649e-23;

struct MeasurementSetup {
  double temperature = 300.0;  // K
  double c_meas = 1e-15;       // F
  double f_c = 1e6;            // measurements per second

  double kt() const { return kBoltzmann * temperature; }              // J
  double thermal_sigma() const { return std::sqrt(kt() / c_meas); }   // V

  void validate() const;

  // KT = 1, C_meas = 1, f_c = 1: energies come out as multiples of KT
  // and powers in KT*f_c units.
  static MeasurementSetup normalized();
};

struct MblParams {
  double mu;      // mean of logic '1', thermal units, >= 0
  double sigma0;  // std of logic '0', > 0
  double sigma1;  // std of logic '1', > 0
  double v_th;    // declare '1' when x > v_th
  void validate() const;
};

struct VblParams {
  double sigma0;  // std of logic '0' (low-variance state), > 0
  double sigma1;  // std of logic '1', sigma1 >= sigma0
  double v_th;    // declare '1' when |x| > v_th, >= 0
  void validate() const;
};

struct ErrorPair {
  double p_1_given_0;  // P(read 1 | state 0)
  double p_0_given_1;  // P(read 0 | state 1)
  void validate() const;
};

struct Priors {
  double p0 = 0.5;
  double p1 = 0.5;
  void validate() const;  // p0 + p1 = 1 within 1e-12, both >= 0
};

// p(1|0) = erfc(v_th / (sqrt(2) sigma0)) / 2
// p(0|1) = erfc((mu - v_th) / (sqrt(2) sigma1)) / 2
ErrorPair mbl_conditional_errors(const MblParams& params);

// p(1|0) = erfc(v_th / (sqrt(2) sigma0))        (both tails of state 0)
// p(0|1) = 1 - erfc(v_th / (sqrt(2) sigma1))    (center mass of state 1)
ErrorPair vbl_conditional_errors(const VblParams& params);

// p_avg = p0 p(1|0) + p1 p(0|1)
double average_error(const Priors& priors, const ErrorPair& errors);

}  // namespace vbl
