#include "boysfn/highprec.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace boysfn::hp {

namespace {

std::atomic<int> g_digits10{kDefaultDigits10};
thread_local int t_applied_digits10 = 0;

void apply(int digits10) {
  Real::default_precision(static_cast<unsigned>(digits10 + kGuardDigits10));
  t_applied_digits10 = digits10;
}

inline void touch() {
  const int want = g_digits10.load(std::memory_order_relaxed);
  if (t_applied_digits10 != want) apply(want);
}

inline bool is_finite(const Real& x) {
  return mpfr_number_p(x.backend().data()) != 0;
}

// Tolerance for terminating series/continued fractions at full internal
// precision (working digits + guard).
Real series_eps() {
  Real eps = pow(Real(10), -(working_digits() + kGuardDigits10 - 2));
  return eps;
}

}  // namespace

void set_working_digits(int digits10) {
  if (digits10 < 16)
    throw std::invalid_argument("working precision must be at least 16 digits");
  g_digits10.store(digits10, std::memory_order_relaxed);
  apply(digits10);
}

int working_digits() { return g_digits10.load(std::memory_order_relaxed); }

void apply_thread_precision() { apply(g_digits10.load(std::memory_order_relaxed)); }

const Real& sqrt_pi() {
  touch();
  thread_local Real value;
  thread_local int value_digits = -1;
  if (value_digits != t_applied_digits10) {
    Real pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    value = sqrt(pi);
    value_digits = t_applied_digits10;
  }
  return value;
}

Real exp(const Real& x) {
  touch();
  if (!is_finite(x)) throw std::domain_error("hp::exp: non-finite argument");
  Real r = boost::multiprecision::exp(x);
  if (!is_finite(r)) throw std::overflow_error("hp::exp: result overflows exponent range");
  return r;
}

Real gamma_half(int k) {
  touch();
  if (k < 0) throw std::domain_error("hp::gamma_half: k must be non-negative");
  Real v = sqrt_pi();
  for (int i = 1; i <= k; ++i) v *= (i - 0.5);  // Gamma(s+1) = s Gamma(s)
  if (!is_finite(v)) throw std::overflow_error("hp::gamma_half: overflow");
  return v;
}

namespace {

// erf(x) = (2/sqrt(pi)) sum_n (-1)^n x^(2n+1) / (n! (2n+1)), x in [0, 2).
// Alternating, so ~x^2 * log10(e) digits cancel; the guard digits absorb that.
Real erf_series(const Real& x) {
  const Real eps = series_eps();
  const Real xx = x * x;
  Real u = x;  // (-1)^n x^(2n+1) / n!
  Real sum = x;
  for (int n = 1; n < 100000; ++n) {
    u *= -xx;
    u /= n;
    Real term = u / (2 * n + 1);
    sum += term;
    if (abs(term) <= abs(sum) * eps) break;
  }
  return 2 * sum / sqrt_pi();
}

// Modified Lentz evaluation of the continued fraction for Gamma(a, z),
//   Gamma(a,z) = e^-z z^a / (z+1-a - 1(1-a)/(z+3-a - 2(2-a)/(z+5-a - ...)))
// convergent for z > 0 away from the transition region.
Real upper_gamma_cf(const Real& a, const Real& z) {
  const Real eps = series_eps();
  const Real fpmin = pow(Real(10), -(working_digits() + kGuardDigits10) * 8);
  Real b = z + 1 - a;
  Real c = 1 / fpmin;
  Real d = 1 / b;
  Real h = d;
  for (int i = 1; i < 100000; ++i) {
    Real an = -i * (i - a);
    b += 2;
    d = an * d + b;
    if (abs(d) < fpmin) d = fpmin;
    c = b + an / c;
    if (abs(c) < fpmin) c = fpmin;
    d = 1 / d;
    Real del = d * c;
    h *= del;
    if (abs(del - 1) <= eps) break;
  }
  return hp::exp(-z + a * log(z)) * h;
}

}  // namespace

Real erf(const Real& x) {
  touch();
  if (x < 0) throw std::domain_error("hp::erf: negative argument unsupported");
  if (x < 2) return erf_series(x);
  return 1 - erfc(x);
}

Real erfc(const Real& x) {
  touch();
  if (x < 0) throw std::domain_error("hp::erfc: negative argument unsupported");
  if (x < 2) return 1 - erf_series(x);
  return upper_gamma_cf(Real(0.5), x * x) / sqrt_pi();
}

Real upper_gamma_half(int k, const Real& x) {
  touch();
  if (k < 0) throw std::domain_error("hp::upper_gamma_half: k must be non-negative");
  if (x < 0) throw std::domain_error("hp::upper_gamma_half: x must be non-negative");
  if (x == 0) return gamma_half(k);
  Real g = sqrt_pi() * erfc(sqrt(x));  // Gamma(1/2, x)
  if (k == 0) return g;
  const Real e = hp::exp(-x);
  Real xpow = sqrt(x);  // x^(j+1/2)
  for (int j = 0; j < k; ++j) {
    g = (j + 0.5) * g + xpow * e;
    xpow *= x;
  }
  if (!is_finite(g)) throw std::overflow_error("hp::upper_gamma_half: overflow");
  return g;
}

}  // namespace boysfn::hp
