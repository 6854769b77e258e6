#include "vbl/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vbl/special_functions.hpp"

namespace vbl {

double mutual_information_true(const ErrorPair& errors, const Priors& priors) {
  errors.validate();
  priors.validate();
  const double p01 = errors.p_0_given_1;
  const double p10 = errors.p_1_given_0;
  const double q1 = priors.p1 * (1.0 - p01) + priors.p0 * p10;  // P(Y = 1)
  const double h_y = binary_entropy_bits(q1);
  const double h_y_given_x =
      priors.p1 * binary_entropy_bits(p01) + priors.p0 * binary_entropy_bits(p10);
  return std::max(0.0, h_y - h_y_given_x);
}

ChannelRates capacity_paper_asymmetric(const ErrorPair& errors,
                                       const Priors& priors, double f_c) {
  errors.validate();
  priors.validate();
  if (!(f_c > 0.0)) throw std::domain_error("capacity: f_c must be > 0");
  const double p01 = errors.p_0_given_1;
  const double p10 = errors.p_1_given_0;
  double per_sample = 1.0 + priors.p1 * (plog2p(p01) + plog2p(1.0 - p01)) +
                      priors.p0 * (plog2p(p10) + plog2p(1.0 - p10));
  per_sample = std::clamp(per_sample, 0.0, 1.0);
  const double mi = mutual_information_true(errors, priors);
  return ChannelRates{per_sample * f_c, mi * f_c, per_sample, mi};
}

double capacity_bsc(double p, double f_c) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("capacity_bsc: p outside [0, 1]");
  }
  if (!(f_c > 0.0)) throw std::domain_error("capacity_bsc: f_c must be > 0");
  return f_c * (1.0 - binary_entropy_bits(p));
}

CapacityApprox capacity_taylor_point(double delta_p) {
  if (!(std::fabs(delta_p) <= 0.5)) {
    throw std::domain_error("capacity_taylor: |delta_p| must be <= 0.5");
  }
  return CapacityApprox{delta_p, 2.0 / kLn2 * delta_p * delta_p};
}

double capacity_taylor(double delta_p, double f_c) {
  return f_c * capacity_taylor_point(delta_p).capacity_bits_per_sample;
}

double delta_p_mbl(double mu, const MeasurementSetup& setup) {
  setup.validate();
  if (!(mu >= 0.0)) throw std::domain_error("delta_p_mbl: mu must be >= 0");
  // In thermal units the noise sigma is 1 by construction.
  return mu / (2.0 * std::sqrt(2.0 * kPi));
}

double capacity_mbl_small_signal(double mu, const MeasurementSetup& setup) {
  setup.validate();
  if (!(mu >= 0.0)) {
    throw std::domain_error("capacity_mbl_small_signal: mu must be >= 0");
  }
  return setup.f_c * mu * mu / (4.0 * kPi * kLn2);
}

}  // namespace vbl
