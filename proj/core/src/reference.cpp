#include "boysfn/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace boysfn {

using hp::Real;

hp::Real boys_reference(int k, const Real& x, const ReferenceConfig& cfg) {
  if (k < 0) throw std::domain_error("boys_reference: k must be non-negative");
  if (x < 0) throw std::domain_error("boys_reference: x must be non-negative");
  if (cfg.truncation_terms < 1)
    throw std::invalid_argument("boys_reference: truncation_terms must be >= 1");
  Real term = Real(1) / (k + 0.5);
  Real sum = term;
  for (int l = 1; l <= cfg.truncation_terms; ++l) {
    term *= x;
    term /= (k + l + 0.5);
    sum += term;
  }
  return hp::exp(-x) / 2 * sum;
}

std::vector<hp::Real> boys_reference_batch(int kmax, const Real& x,
                                           const ReferenceConfig& cfg) {
  if (kmax < 0) throw std::domain_error("boys_reference_batch: kmax must be non-negative");
  std::vector<Real> values(static_cast<size_t>(kmax) + 1);
  values[kmax] = boys_reference(kmax, x, cfg);
  if (kmax == 0) return values;
  const Real e = hp::exp(-x);
  for (int l = kmax - 1; l >= 0; --l)
    values[l] = (2 * x * values[l + 1] + e) / (2 * l + 1);
  return values;
}

hp::Real truncation_bound(int k, const Real& x, int L) {
  if (k < 0 || L < 0) throw std::domain_error("truncation_bound: k, L must be non-negative");
  if (x < 0) throw std::domain_error("truncation_bound: x must be non-negative");
  if (x == 0) return Real(0);
  // x^(k+L+3/2) / Gamma(k+L+3/2); the Gamma argument is the half-integer k+L+1.
  const Real s = Real(k) + L + 1.5;
  return pow(x, s) / hp::gamma_half(k + L + 1);
}

int reference_terms_for(int k, double x, double rel_target) {
  if (x <= 0) return 150;
  const double log_target = std::log(rel_target);
  for (int L = 150; L <= 20000; L += 25) {
    const double s = k + L + 1.5;
    if (s * std::log(x) - std::lgamma(s) <= log_target) return L;
  }
  throw std::runtime_error("reference_terms_for: no L below cap reaches target");
}

}  // namespace boysfn
