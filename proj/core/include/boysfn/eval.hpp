#pragma once

#include <span>
#include <vector>

#include "boysfn/tables.hpp"

namespace boysfn {

/// F_0(x)..F_k(x) in working (double) precision for one argument.
struct BoysBatch {
  double x = 0;
  int k = 0;
  std::vector<double> values;
};

enum class Region { A, B, C };

/// Half-open membership: [0, x0) -> A, [x0, x1) -> B, [x1, inf) -> C.
Region classify_region(double x, const CoefficientTableSet& tables);

/// p(x)/q(x), numerator and denominator each by Horner's scheme walking the
/// ascending-degree storage from the top.
double eval_rational(const RationalApproximant& r, double x);

/// out[k] = seed, then F_l = (2x F_{l+1} + e^-x) / (2l+1) for l = k-1..0.
/// e^-x is evaluated once for the whole chain.
void downward_recursion(double seed, double x, int k, std::span<double> out);

/// out[0] = seed, then F_{l+1} = ((2l+1) F_l - e^-x) / (2x); requires x > 0.
void upward_recursion(double seed, double x, int k, std::span<double> out);

/// Batch evaluation: region A seeds F_k = r_{A,k}(x) and recurses downward,
/// region B seeds F_0 = r_B(x) and recurses upward, region C seeds
/// F_0 = (sqrt(pi)/2)/sqrt(x) and runs the plain multiplicative chain
/// F_{l+1} = (2l+1)/(2x) F_l. Rejects k > tables.k_max and invalid x.
BoysBatch boys_batch(double x, int k, const CoefficientTableSet& tables);

/// Same computation with the region dispatch forced; used to probe branch
/// agreement at the region boundaries.
BoysBatch boys_batch_region(double x, int k, const CoefficientTableSet& tables, Region region);

/// Bulk entry point: out must hold xs.size() * (k+1) doubles, row-major.
void boys_batch_many(std::span<const double> xs, int k, const CoefficientTableSet& tables,
                     std::span<double> out);

}  // namespace boysfn
