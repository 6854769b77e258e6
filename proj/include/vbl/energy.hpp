#pragma once

#include "vbl/logic_models.hpp"

// Power dissipation and the energy-per-bit figure of merit (FOM).
//
// Powers are returned in watts for a physical MeasurementSetup and in
// KT*f_c units under MeasurementSetup::normalized(). The FOM is power
// divided by information rate, reported both in KT/bit and J/bit.

namespace vbl {

enum class FomKind {
  finite,
  infinite,   // positive power, zero capacity
  undefined,  // zero power, zero capacity
};

struct EnergyPoint {
  double power;               // W, or KT*f_c under the normalized setup
  double fom_kt_per_bit;
  double fom_joules_per_bit;
  FomKind kind = FomKind::finite;
  bool is_finite() const { return kind == FomKind::finite; }
};

struct BarrierEnergies {
  double e1;                    // J, barrier height
  double e_mbl_per_transition;  // J, = 2 e1
};

// f_c (1/2) C_meas mu^2 with mu converted from thermal units:
// (1/2) mu^2 KT f_c.
double power_mbl(const MblParams& params, const MeasurementSetup& setup);

// f_c C_meas (sigma1^2 - sigma0^2) in physical volts^2:
// (sigma1^2 - sigma0^2) KT f_c.
double power_vbl(const VblParams& params, const MeasurementSetup& setup);

// power / capacity. Zero capacity yields a tagged infinite (power > 0) or
// undefined (power = 0) result instead of throwing; sweeps legitimately
// hit p_avg = 1/2 points and must record them.
EnergyPoint fom(double power, double capacity_bits_per_s,
                const MeasurementSetup& setup);

// Small-signal lower bound of the MBL FOM: 2 pi ln 2 = 4.35517... KT/bit.
double fom_mbl_fundamental_limit();

// Energy dissipated per MBL transition is twice the barrier height.
BarrierEnergies mbl_transition_energy(double e1);

}  // namespace vbl
