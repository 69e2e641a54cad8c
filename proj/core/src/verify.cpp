#include "boysfn/verify.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "boysfn/eval.hpp"
#include "boysfn/reference.hpp"

namespace boysfn {

VerifyReport verify_tables(const CoefficientTableSet& tables, int samples_per_region,
                           double xmax, std::uint64_t seed) {
  validate_tables(tables);
  if (samples_per_region < 1)
    throw std::invalid_argument("verify_tables: need at least one sample per region");
  if (xmax <= tables.x1) throw std::invalid_argument("verify_tables: xmax must exceed x1");

  VerifyReport report;
  report.per_k.resize(tables.k_max + 1);
  for (int k = 0; k <= tables.k_max; ++k) report.per_k[k].k = k;

  std::mt19937_64 rng(seed);
  auto uniform = [&rng](double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  };

  const double lo[3] = {0.0, tables.x0, tables.x1};
  const double hi[3] = {tables.x0, tables.x1, xmax};

  for (int region = 0; region < 3; ++region) {
    for (int s = 0; s < samples_per_region; ++s) {
      const double x = uniform(lo[region], hi[region]);
      ReferenceConfig cfg{reference_terms_for(0, x)};
      const auto oracle = boys_reference_batch(tables.k_max, hp::Real(x), cfg);
      std::vector<double> oracle_d(oracle.size());
      for (size_t l = 0; l < oracle.size(); ++l) oracle_d[l] = static_cast<double>(oracle[l]);

      for (int k = 0; k <= tables.k_max; ++k) {
        const BoysBatch batch = boys_batch(x, k, tables);
        double* slot = nullptr;
        switch (region) {
          case 0: slot = &report.per_k[k].max_err_a; break;
          case 1: slot = &report.per_k[k].max_err_b; break;
          default: slot = &report.per_k[k].max_err_c; break;
        }
        for (int l = 0; l <= k; ++l) {
          const double err = std::abs(batch.values[l] - oracle_d[l]);
          if (err > *slot) *slot = err;
          if (err > report.max_err_region[region]) report.max_err_region[region] = err;
          if (err > report.max_err) {
            report.max_err = err;
            report.worst_x = x;
            report.worst_k = k;
            report.worst_region = static_cast<char>('A' + region);
          }
        }
      }
    }
  }
  return report;
}

}  // namespace boysfn
