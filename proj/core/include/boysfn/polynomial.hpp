#pragma once

#include <vector>

#include "boysfn/highprec.hpp"

namespace boysfn {

/// Polynomial in the monomial basis, coefficients stored ascending in degree.
using Poly = std::vector<hp::Real>;

hp::Real poly_eval(const Poly& p, const hp::Real& x);
Poly poly_derivative(const Poly& p);

/// Drops leading coefficients whose magnitude is below rel_tol times the
/// largest coefficient magnitude. Returns {0} for an all-tiny input.
Poly poly_trim(const Poly& p, const hp::Real& rel_tol);

int poly_degree(const Poly& p);  // degree after exact-zero trimming

/// Number of distinct real roots of p in the half-open interval (a, b],
/// by the sign-variation difference of the Sturm sequence at a and b.
int sturm_root_count(const Poly& p, const hp::Real& a, const hp::Real& b);

/// Interpolating polynomial of degree <= xs.size()-1 through (xs[i], ys[i]),
/// built from Newton divided differences and expanded to the monomial basis.
Poly newton_interpolate(const std::vector<hp::Real>& xs, const std::vector<hp::Real>& ys);

/// Reorders point indices greedily by maximal pairwise separation (Leja
/// ordering), which keeps Newton interpolation well conditioned.
std::vector<int> leja_order(const std::vector<hp::Real>& xs);

}  // namespace boysfn
