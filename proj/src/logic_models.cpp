#include "vbl/logic_models.hpp"

#include <cmath>
#include <stdexcept>

#include "vbl/special_functions.hpp"

namespace vbl {

void MeasurementSetup::validate() const {
  if (!(temperature > 0.0) || !(c_meas > 0.0) || !(f_c > 0.0)) {
    throw std::domain_error(
        "MeasurementSetup: temperature, c_meas and f_c must be > 0");
  }
}

MeasurementSetup MeasurementSetup::normalized() {
  return MeasurementSetup{1.0 / kBoltzmann, 1.0, 1.0};
}

void MblParams::validate() const {
  if (!std::isfinite(mu) || !std::isfinite(sigma0) || !std::isfinite(sigma1) ||
      !std::isfinite(v_th)) {
    throw std::domain_error("MblParams: non-finite field");
  }
  if (!(sigma0 > 0.0) || !(sigma1 > 0.0)) {
    throw std::domain_error("MblParams: sigma0 and sigma1 must be > 0");
  }
  if (mu < 0.0) throw std::domain_error("MblParams: mu must be >= 0");
}

void VblParams::validate() const {
  if (!std::isfinite(sigma0) || !std::isfinite(sigma1) ||
      !std::isfinite(v_th)) {
    throw std::domain_error("VblParams: non-finite field");
  }
  if (!(sigma0 > 0.0)) throw std::domain_error("VblParams: sigma0 must be > 0");
  if (sigma1 < sigma0) {
    throw std::domain_error("VblParams: sigma1 must be >= sigma0");
  }
  if (v_th < 0.0) throw std::domain_error("VblParams: v_th must be >= 0");
}

void ErrorPair::validate() const {
  if (!(p_1_given_0 >= 0.0 && p_1_given_0 <= 1.0) ||
      !(p_0_given_1 >= 0.0 && p_0_given_1 <= 1.0)) {
    throw std::domain_error("ErrorPair: probabilities must lie in [0, 1]");
  }
}

void Priors::validate() const {
  if (!(p0 >= 0.0) || !(p1 >= 0.0) || std::fabs(p0 + p1 - 1.0) > 1e-12) {
    throw std::domain_error("Priors: p0 + p1 must equal 1, both >= 0");
  }
}

ErrorPair mbl_conditional_errors(const MblParams& params) {
  params.validate();
  const double p10 = 0.5 * erfc(params.v_th / (kSqrt2 * params.sigma0));
  const double p01 =
      0.5 * erfc((params.mu - params.v_th) / (kSqrt2 * params.sigma1));
  return ErrorPair{p10, p01};
}

ErrorPair vbl_conditional_errors(const VblParams& params) {
  params.validate();
  const double p10 = erfc(params.v_th / (kSqrt2 * params.sigma0));
  const double p01 = 1.0 - erfc(params.v_th / (kSqrt2 * params.sigma1));
  return ErrorPair{p10, p01};
}

double average_error(const Priors& priors, const ErrorPair& errors) {
  priors.validate();
  errors.validate();
  return priors.p0 * errors.p_1_given_0 + priors.p1 * errors.p_0_given_1;
}

}  // namespace vbl
