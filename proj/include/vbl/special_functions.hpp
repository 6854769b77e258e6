#pragma once

// Scalar special functions backing the error-probability and capacity
// formulas. erfc is implemented locally (power series + continued fraction)
// so results do not depend on platform libm variance; absolute error is
// below 1e-12 for |x| <= 10.

namespace vbl {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrt2 = 1.41421356237309504880;
inline constexpr double kLn2 = 0.69314718055994530942;

// Complementary error function. Result clamped to [0, 2].
// Throws std::domain_error for non-finite x.
double erfc(double x);

// Gaussian density (1/(sigma sqrt(2 pi))) exp(-(x-mu)^2 / (2 sigma^2)).
// Throws std::domain_error unless sigma > 0 and all arguments are finite.
double gaussian_pdf(double x, double mu, double sigma);

// P(Z > x) for standard normal Z; equals erfc(x / sqrt(2)) / 2.
double gaussian_upper_tail(double x);

// -p log2 p - (1-p) log2 (1-p), with the convention 0 log 0 = 0.
// Throws std::domain_error for p outside [0, 1].
double binary_entropy_bits(double p);

// p log2 p with 0 log 0 = 0. Probabilities are clamped to [1e-300, 1]
// before the logarithm; tail-threshold operating points sit near underflow.
double plog2p(double p);

}  // namespace vbl
