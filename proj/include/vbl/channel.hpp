#pragma once

#include "vbl/logic_models.hpp"

// Information rates of the binary asymmetric readout channel.
//
// Two per-sample quantities are always computed side by side:
//   * capacity_paper:  1 - H(Y|X), the asymmetric-channel rate formula
//     this toolkit is built around (logarithms base 2);
//   * mutual_info_true: I(X;Y) = H(Y) - H(Y|X), the standard mutual
//     information of the same channel.
// The two coincide when the output distribution is uniform and diverge at
// skewed operating points, where 1 - H(Y|X) is an upper bound on I(X;Y).

namespace vbl {

struct ChannelRates {
  double capacity_paper;             // bits per second
  double mutual_info_true;           // bits per second
  double per_sample_capacity_paper;  // bits, clamped to [0, 1]
  double per_sample_mi_true;         // bits, clamped at >= 0
};

struct CapacityApprox {
  double delta_p;                   // p_avg - 1/2
  double capacity_bits_per_sample;  // (2/ln 2) delta_p^2
};

// 1 - [p1 Hb(p01) + p0 Hb(p10)] per sample, scaled by f_c, plus the
// mutual-information cross-check.
ChannelRates capacity_paper_asymmetric(const ErrorPair& errors,
                                       const Priors& priors, double f_c);

// I(X;Y) = Hb(P(Y=1)) - [p1 Hb(p01) + p0 Hb(p10)], bits per sample.
double mutual_information_true(const ErrorPair& errors, const Priors& priors);

// Binary symmetric channel: f_c (1 - Hb(p)).
double capacity_bsc(double p, double f_c);

// Second-order expansion of the BSC capacity around p = 1/2.
CapacityApprox capacity_taylor_point(double delta_p);
double capacity_taylor(double delta_p, double f_c);

// delta_p for an MBL readout at v_th = mu/2 with thermal-noise variance:
// mu / (2 sqrt(2 pi)) in thermal units.
double delta_p_mbl(double mu, const MeasurementSetup& setup);

// Small-signal MBL capacity f_c mu^2 / (4 pi ln 2), thermal units.
double capacity_mbl_small_signal(double mu, const MeasurementSetup& setup);

}  // namespace vbl
