#pragma once

#include <vector>

#include "boysfn/highprec.hpp"

namespace boysfn {

/// Configuration of the series oracle. `truncation_terms` is the index L of
/// the last term kept; the relative truncation error is bounded by
/// truncation_bound(k, x, L).
struct ReferenceConfig {
  int truncation_terms = 150;
};

/// Ground-truth Boys function F_k(x) through the stable series
///   F_k(x) = (e^-x / 2) sum_{l=0}^{L} x^l / prod_{j=0}^{l} (k + j + 1/2).
/// All terms are positive, so plain forward summation is exact enough at the
/// configured precision.
hp::Real boys_reference(int k, const hp::Real& x, const ReferenceConfig& cfg = {});

/// F_0..F_kmax at one x: series at order kmax, then the downward recurrence
/// F_l = (2x F_{l+1} + e^-x) / (2l+1) carried in extended precision.
std::vector<hp::Real> boys_reference_batch(int kmax, const hp::Real& x,
                                           const ReferenceConfig& cfg = {});

/// Right-hand side of the relative truncation error bound,
///   x^(k+L+3/2) / Gamma(k+L+3/2).
hp::Real truncation_bound(int k, const hp::Real& x, int L);

/// Smallest L >= 150 whose truncation bound at (k, x) is below rel_target.
/// Sized with double-precision lgamma, so cheap to call per sample.
int reference_terms_for(int k, double x, double rel_target = 1e-30);

}  // namespace boysfn
