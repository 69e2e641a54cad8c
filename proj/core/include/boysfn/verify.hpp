#pragma once

#include <cstdint>
#include <vector>

#include "boysfn/tables.hpp"

namespace boysfn {

/// Maximum absolute deviation of boys_batch from the series oracle, per
/// requested order k and per region.
struct VerifyEntry {
  int k = 0;
  double max_err_a = 0;
  double max_err_b = 0;
  double max_err_c = 0;
};

struct VerifyReport {
  std::vector<VerifyEntry> per_k;
  double max_err = 0;
  double worst_x = 0;
  int worst_k = 0;
  char worst_region = '-';
  double max_err_region[3] = {0, 0, 0};  // A, B, C

  bool all_within(double eps) const { return max_err <= eps; }
};

/// Samples each region uniformly (A: [0,x0), B: [x0,x1), C: [x1,xmax]) and
/// compares every requested order k = 0..k_max against the extended-precision
/// oracle, with the series length raised until the truncation bound is below
/// 1e-30.
VerifyReport verify_tables(const CoefficientTableSet& tables, int samples_per_region,
                           double xmax = 200.0, std::uint64_t seed = 1);

}  // namespace boysfn
