#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace boysfn::hp {

/// Extended-precision real. Precision is configured globally in decimal
/// digits; every kernel below carries kGuardDigits10 of extra headroom so
/// intermediate summations stay comfortably below the advertised error.
using Real = boost::multiprecision::mpfr_float;

inline constexpr int kDefaultDigits10 = 50;
inline constexpr int kGuardDigits10 = 12;

/// Sets the global working precision (significant decimal digits) and
/// applies it to the calling thread. Values created afterwards use it.
void set_working_digits(int digits10);
int working_digits();

/// Applies the configured precision to the calling thread. Worker threads
/// that construct Real values must call this once before doing so.
void apply_thread_precision();

const Real& sqrt_pi();

/// e^x, relative error well below 10^(-digits).
Real exp(const Real& x);

/// Gamma(k + 1/2) through the half-integer recurrence seeded by Gamma(1/2).
Real gamma_half(int k);

/// erf/erfc for x >= 0: Taylor series of erf below the switchover at x = 2,
/// continued fraction of Gamma(1/2, x^2) above it.
Real erf(const Real& x);
Real erfc(const Real& x);

/// Upper incomplete gamma Gamma(k + 1/2, x) for x >= 0, built upward from
/// Gamma(1/2, x) = sqrt(pi) erfc(sqrt(x)) via Gamma(s+1,x) = s Gamma(s,x) + x^s e^-x.
Real upper_gamma_half(int k, const Real& x);

}  // namespace boysfn::hp
