#include "boysfn/linalg.hpp"

#include <stdexcept>

namespace boysfn {

using hp::Real;

SymmetricEigenResult jacobi_eigensolve(std::vector<std::vector<Real>> a, int max_sweeps) {
  const int d = static_cast<int>(a.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != d)
      throw std::invalid_argument("jacobi_eigensolve: matrix not square");

  std::vector<std::vector<Real>> v(d, std::vector<Real>(d, Real(0)));
  for (int i = 0; i < d; ++i) v[i][i] = 1;

  Real norm = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) norm += a[i][j] * a[i][j];
  norm = sqrt(norm);
  const Real stop = norm * pow(Real(10), -(hp::working_digits() + hp::kGuardDigits10 - 4));

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    Real off = 0;
    for (int p = 0; p < d; ++p)
      for (int q = p + 1; q < d; ++q) off += a[p][q] * a[p][q];
    if (sqrt(2 * off) <= stop) break;

    for (int p = 0; p < d; ++p) {
      for (int q = p + 1; q < d; ++q) {
        if (abs(a[p][q]) <= stop / (d * d)) continue;
        const Real theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        Real t = 1 / (abs(theta) + sqrt(theta * theta + 1));
        if (theta < 0) t = -t;
        const Real c = 1 / sqrt(t * t + 1);
        const Real s = t * c;
        const Real tau = s / (1 + c);

        const Real apq = a[p][q];
        a[p][p] -= t * apq;
        a[q][q] += t * apq;
        a[p][q] = 0;
        a[q][p] = 0;
        for (int i = 0; i < d; ++i) {
          if (i != p && i != q) {
            const Real aip = a[i][p];
            const Real aiq = a[i][q];
            a[i][p] = aip - s * (aiq + tau * aip);
            a[p][i] = a[i][p];
            a[i][q] = aiq + s * (aip - tau * aiq);
            a[q][i] = a[i][q];
          }
          const Real vip = v[i][p];
          const Real viq = v[i][q];
          v[i][p] = vip - s * (viq + tau * vip);
          v[i][q] = viq + s * (vip - tau * viq);
        }
      }
    }
  }

  SymmetricEigenResult result;
  result.values.resize(d);
  result.vectors.assign(d, std::vector<Real>(d));
  for (int j = 0; j < d; ++j) {
    result.values[j] = a[j][j];
    for (int i = 0; i < d; ++i) result.vectors[j][i] = v[i][j];
  }
  return result;
}

}  // namespace boysfn
