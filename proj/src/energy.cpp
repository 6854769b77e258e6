#include "vbl/energy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "vbl/special_functions.hpp"

namespace vbl {

double power_mbl(const MblParams& params, const MeasurementSetup& setup) {
  params.validate();
  setup.validate();
  // mu_phys = mu * sigma_th, so (1/2) C f_c mu_phys^2 = (1/2) mu^2 KT f_c.
  return 0.5 * params.mu * params.mu * setup.kt() * setup.f_c;
}

double power_vbl(const VblParams& params, const MeasurementSetup& setup) {
  params.validate();
  setup.validate();
  return (params.sigma1 * params.sigma1 - params.sigma0 * params.sigma0) *
         setup.kt() * setup.f_c;
}

EnergyPoint fom(double power, double capacity_bits_per_s,
                const MeasurementSetup& setup) {
  setup.validate();
  if (!(power >= 0.0) || !(capacity_bits_per_s >= 0.0)) {
    throw std::domain_error("fom: power and capacity must be >= 0");
  }
  EnergyPoint point{};
  point.power = power;
  if (capacity_bits_per_s == 0.0) {
    const double inf = std::numeric_limits<double>::infinity();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    point.kind = (power > 0.0) ? FomKind::infinite : FomKind::undefined;
    point.fom_joules_per_bit = (power > 0.0) ? inf : nan;
    point.fom_kt_per_bit = point.fom_joules_per_bit;
    return point;
  }
  point.fom_joules_per_bit = power / capacity_bits_per_s;
  point.fom_kt_per_bit = point.fom_joules_per_bit / setup.kt();
  return point;
}

double fom_mbl_fundamental_limit() { return 2.0 * kPi * kLn2; }

BarrierEnergies mbl_transition_energy(double e1) {
  if (!(e1 >= 0.0)) {
    throw std::domain_error("mbl_transition_energy: e1 must be >= 0");
  }
  return BarrierEnergies{e1, 2.0 * e1};
}

}  // namespace vbl
