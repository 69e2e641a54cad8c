#include "boysfn/eval.hpp"

#include <cmath>
#include <stdexcept>

namespace boysfn {

namespace {

// sqrt(pi)/2, correctly rounded.
constexpr double kHalfSqrtPi = 0.88622692545275801364908374167057;

void check_input(double x, int k, const CoefficientTableSet& tables) {
  if (!std::isfinite(x) || x < 0)
    throw std::domain_error("boys_batch: x must be finite and non-negative");
  if (k < 0 || k > tables.k_max)
    throw std::out_of_range("boys_batch: k out of range for this table set");
}

}  // namespace

Region classify_region(double x, const CoefficientTableSet& tables) {
  if (x < tables.x0) return Region::A;
  if (x < tables.x1) return Region::B;
  return Region::C;
}

double eval_rational(const RationalApproximant& r, double x) {
  const auto& nc = r.numer;
  const auto& dc = r.denom;
  double num = nc.back();
  for (size_t i = nc.size() - 1; i-- > 0;) num = num * x + nc[i];
  double den = dc.back();
  for (size_t i = dc.size() - 1; i-- > 0;) den = den * x + dc[i];
  return num / den;
}

void downward_recursion(double seed, double x, int k, std::span<double> out) {
  if (x < 0) throw std::domain_error("downward_recursion: x must be non-negative");
  if (static_cast<int>(out.size()) != k + 1)
    throw std::invalid_argument("downward_recursion: output span must hold k+1 values");
  out[k] = seed;
  if (k == 0) return;
  const double e = std::exp(-x);
  const double twox = 2.0 * x;
  for (int l = k - 1; l >= 0; --l) out[l] = (twox * out[l + 1] + e) / (2 * l + 1);
}

void upward_recursion(double seed, double x, int k, std::span<double> out) {
  if (!(x > 0)) throw std::domain_error("upward_recursion: x must be positive");
  if (static_cast<int>(out.size()) != k + 1)
    throw std::invalid_argument("upward_recursion: output span must hold k+1 values");
  out[0] = seed;
  const double e = std::exp(-x);
  const double twox = 2.0 * x;
  for (int l = 0; l < k; ++l) out[l + 1] = ((2 * l + 1) * out[l] - e) / twox;
}

BoysBatch boys_batch_region(double x, int k, const CoefficientTableSet& tables, Region region) {
  check_input(x, k, tables);
  BoysBatch batch;
  batch.x = x;
  batch.k = k;
  batch.values.resize(static_cast<size_t>(k) + 1);
  std::span<double> out(batch.values);
  switch (region) {
    case Region::A:
      downward_recursion(eval_rational(tables.r_A[k], x), x, k, out);
      break;
    case Region::B:
      upward_recursion(eval_rational(tables.r_B, x), x, k, out);
      break;
    case Region::C: {
      out[0] = kHalfSqrtPi / std::sqrt(x);
      const double inv2x = 0.5 / x;
      for (int l = 0; l < k; ++l) out[l + 1] = (2 * l + 1) * inv2x * out[l];
      break;
    }
  }
  return batch;
}

BoysBatch boys_batch(double x, int k, const CoefficientTableSet& tables) {
  check_input(x, k, tables);
  return boys_batch_region(x, k, tables, classify_region(x, tables));
}

void boys_batch_many(std::span<const double> xs, int k, const CoefficientTableSet& tables,
                     std::span<double> out) {
  if (out.size() != xs.size() * (static_cast<size_t>(k) + 1))
    throw std::invalid_argument("boys_batch_many: output span has wrong size");
  for (size_t i = 0; i < xs.size(); ++i) {
    const BoysBatch b = boys_batch(xs[i], k, tables);
    for (int l = 0; l <= k; ++l) out[i * (k + 1) + l] = b.values[l];
  }
}

}  // namespace boysfn
