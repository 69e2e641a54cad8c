#include "boysfn/polynomial.hpp"

#include <stdexcept>

namespace boysfn {

using hp::Real;

hp::Real poly_eval(const Poly& p, const Real& x) {
  if (p.empty()) return Real(0);
  Real acc = p.back();
  for (auto it = p.rbegin() + 1; it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return Poly{Real(0)};
  Poly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = i * p[i];
  return d;
}

Poly poly_trim(const Poly& p, const Real& rel_tol) {
  Real maxc = 0;
  for (const auto& c : p)
    if (abs(c) > maxc) maxc = abs(c);
  if (maxc == 0) return Poly{Real(0)};
  const Real cut = maxc * rel_tol;
  size_t n = p.size();
  while (n > 1 && abs(p[n - 1]) <= cut) --n;
  return Poly(p.begin(), p.begin() + n);
}

int poly_degree(const Poly& p) {
  for (size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return 0;
}

namespace {

// Remainder of u / v, v normalized by the caller to have a sane scale.
Poly poly_rem(Poly u, const Poly& v) {
  const int dv = static_cast<int>(v.size()) - 1;
  while (static_cast<int>(u.size()) - 1 >= dv && !(u.size() == 1 && u[0] == 0)) {
    const int du = static_cast<int>(u.size()) - 1;
    const Real q = u.back() / v.back();
    for (int i = 0; i <= dv; ++i) u[du - dv + i] -= q * v[i];
    u.pop_back();
    while (u.size() > 1 && u.back() == 0) u.pop_back();
    // Re-trim relative to the running scale so exact cancellation noise does
    // not masquerade as a genuine leading coefficient.
    Real maxc = 0;
    for (const auto& c : u)
      if (abs(c) > maxc) maxc = abs(c);
    if (maxc == 0) return Poly{Real(0)};
  }
  return u;
}

void normalize_scale(Poly& p) {
  Real maxc = 0;
  for (const auto& c : p)
    if (abs(c) > maxc) maxc = abs(c);
  if (maxc == 0) return;
  for (auto& c : p) c /= maxc;  // positive scale keeps all signs
}

int sign_of(const Real& v, const Real& tiny) {
  if (v > tiny) return 1;
  if (v < -tiny) return -1;
  return 0;
}

int sign_variations(const std::vector<Poly>& chain, const Real& x, const Real& tiny) {
  int count = 0;
  int prev = 0;
  for (const auto& q : chain) {
    const int s = sign_of(poly_eval(q, x), tiny);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int sturm_root_count(const Poly& p, const Real& a, const Real& b) {
  if (a > b) throw std::invalid_argument("sturm_root_count: a > b");
  const Real trim_tol = pow(Real(10), -(hp::working_digits() + hp::kGuardDigits10 - 6));
  Poly p0 = poly_trim(p, trim_tol);
  if (p0.size() == 1 && p0[0] == 0)
    throw std::invalid_argument("sturm_root_count: zero polynomial");
  if (p0.size() == 1) return 0;

  std::vector<Poly> chain;
  normalize_scale(p0);
  chain.push_back(p0);
  Poly p1 = poly_derivative(p0);
  normalize_scale(p1);
  chain.push_back(p1);
  while (chain.back().size() > 1) {
    Poly r = poly_rem(chain[chain.size() - 2], chain.back());
    r = poly_trim(r, trim_tol);
    if (r.size() == 1 && r[0] == 0) break;
    for (auto& c : r) c = -c;
    normalize_scale(r);
    chain.push_back(std::move(r));
  }

  const Real tiny = pow(Real(10), -(hp::working_digits() + hp::kGuardDigits10 - 8));
  return sign_variations(chain, a, tiny) - sign_variations(chain, b, tiny);
}

Poly newton_interpolate(const std::vector<Real>& xs, const std::vector<Real>& ys) {
  const size_t n = xs.size();
  if (n == 0 || ys.size() != n)
    throw std::invalid_argument("newton_interpolate: size mismatch");
  // Divided-difference coefficients in place.
  std::vector<Real> c = ys;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  // Expand sum_i c_i prod_{j<i} (x - x_j) into monomials.
  Poly result{c[0]};
  Poly basis{Real(1)};
  for (size_t i = 1; i < n; ++i) {
    // basis *= (x - xs[i-1])
    Poly next(basis.size() + 1, Real(0));
    for (size_t j = 0; j < basis.size(); ++j) {
      next[j + 1] += basis[j];
      next[j] -= basis[j] * xs[i - 1];
    }
    basis = std::move(next);
    if (result.size() < basis.size()) result.resize(basis.size(), Real(0));
    for (size_t j = 0; j < basis.size(); ++j) result[j] += c[i] * basis[j];
  }
  return result;
}

std::vector<int> leja_order(const std::vector<Real>& xs) {
  const int n = static_cast<int>(xs.size());
  std::vector<int> order;
  std::vector<bool> used(n, false);
  int first = 0;
  for (int i = 1; i < n; ++i)
    if (abs(xs[i]) > abs(xs[first])) first = i;
  order.push_back(first);
  used[first] = true;
  std::vector<Real> logdist(n, Real(0));
  for (int step = 1; step < n; ++step) {
    int best = -1;
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      logdist[i] += log(abs(xs[i] - xs[order.back()]));
      if (best < 0 || logdist[i] > logdist[best]) best = i;
    }
    order.push_back(best);
    used[best] = true;
  }
  return order;
}

}  // namespace boysfn
