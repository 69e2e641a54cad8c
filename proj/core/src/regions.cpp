#include "boysfn/regions.hpp"

#include <sstream>
#include <stdexcept>

namespace boysfn {

using hp::Real;

hp::Real compute_x0(int k_max) {
  if (k_max < 1) throw std::domain_error("compute_x0: k_max must be >= 1");
  // prod_{k=0}^{kmax-1} (k+1/2) = Gamma(kmax+1/2) / Gamma(1/2)
  const Real prod = hp::gamma_half(k_max) / hp::sqrt_pi();
  Real x0 = pow(prod, Real(1) / k_max);
  if (x0 < 1) x0 = 1;
  return x0;
}

namespace {

// Residual of the asymptotic-error equation, Gamma(s, x)/(2 x^s) with s = kmax+1/2.
Real asymptotic_error(int k_max, const Real& x) {
  return hp::upper_gamma_half(k_max, x) / (2 * pow(x, Real(k_max) + 0.5));
}

}  // namespace

hp::Real compute_x1(int k_max, const Real& eps_tol) {
  if (k_max < 0) throw std::domain_error("compute_x1: k_max must be non-negative");
  if (!(eps_tol > 0 && eps_tol < 1))
    throw std::domain_error("compute_x1: eps_tol must lie in (0, 1)");

  std::ostringstream trace;
  const Real s = Real(k_max) + 0.5;

  // Bracket the root of the monotone decreasing residual. The seed k_max+35
  // sits deep in the e^-x tail for practical tolerances, so expand leftwards
  // until the error exceeds eps_tol.
  Real hi = Real(k_max) + 35;
  Real lo = hi;
  if (asymptotic_error(k_max, hi) > eps_tol) {
    while (asymptotic_error(k_max, hi) > eps_tol) {
      lo = hi;
      hi *= 2;
      if (hi > Real(k_max) + 100000)
        throw std::runtime_error("compute_x1: failed to bracket root (right)");
    }
  } else {
    while (asymptotic_error(k_max, lo) <= eps_tol) {
      hi = lo;
      lo *= 0.5;
      if (lo < Real(1) / 1048576)
        throw std::runtime_error("compute_x1: failed to bracket root (left)");
    }
  }

  // Safeguarded Newton on h(x) = Gamma(s,x)/(2x^s) - eps.
  // h'(x) = -e^-x/(2x) - (s/x) Gamma(s,x)/(2x^s).
  Real x = (lo + hi) / 2;
  const Real tol = eps_tol * pow(Real(10), -21);
  for (int iter = 0; iter < 500; ++iter) {
    const Real err = asymptotic_error(k_max, x);
    const Real h = err - eps_tol;
    trace << "iter " << iter << " x=" << x << " h/eps=" << h / eps_tol << "\n";
    if (abs(h) <= tol) return x;
    if (h > 0)
      lo = x;
    else
      hi = x;
    const Real hprime = -hp::exp(-x) / (2 * x) - s * err / x;
    Real next = x - h / hprime;
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    x = next;
  }
  throw std::runtime_error("compute_x1: Newton did not converge; trace:\n" + trace.str());
}

hp::Real weight_rho_A(int k, const Real& x) {
  if (k < 0) throw std::domain_error("weight_rho_A: k must be non-negative");
  if (x < 0) throw std::domain_error("weight_rho_A: x must be non-negative");
  Real prod = 1;  // prod_{n=l}^{k-1} x/(n+1/2), starting from the empty l = k
  Real best = 1;
  for (int l = k - 1; l >= 0; --l) {
    prod *= x;
    prod /= (l + 0.5);
    if (prod > best) best = prod;
  }
  return best;
}

RegionPartition make_partition(int k_max, double eps_tol) {
  RegionPartition p;
  p.k_max = k_max;
  p.eps_tol = eps_tol;
  p.x0 = static_cast<double>(compute_x0(k_max));
  p.x1 = static_cast<double>(compute_x1(k_max, hp::Real(eps_tol)));
  return p;
}

}  // namespace boysfn
