#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boysfn {

/// Rational approximant in double precision. Coefficients are stored
/// ascending in degree; the denominator is monic (top coefficient exactly 1).
struct RationalApproximant {
  std::vector<double> numer;
  std::vector<double> denom;
  int degree_n() const { return static_cast<int>(numer.size()) - 1; }
  int degree_m() const { return static_cast<int>(denom.size()) - 1; }
};

/// The deployable coefficient set: region boundaries, order range, target
/// accuracy, r_B for F_0 on [x0, x1) and r_A[k] for F_k on [0, x0).
struct CoefficientTableSet {
  double x0 = 0;
  double x1 = 0;
  int k_max = 0;
  double eps_tol = 0;
  RationalApproximant r_B;
  std::vector<RationalApproximant> r_A;  // k_max + 1 entries, indexed by k
};

class TableParseError : public std::runtime_error {
 public:
  TableParseError(int line, const std::string& message);
  int line;
};

/// Built-in table set: k_max = 32, eps_tol = 5e-14.
const CoefficientTableSet& embedded_default();

/// Throws std::invalid_argument when a structural invariant fails
/// (monic denominators, finite values, k_max+1 A-tables).
void validate_tables(const CoefficientTableSet& set);

/// Line-oriented text format with `#` comments:
///   boys-minimax v1 kmax=<int> eps=<double> x0=<double> x1=<double>
///   table <B|A> k=<int> n=<int> m=<int>
///   ... n+1 numerator lines, then m+1 denominator lines, ascending degree
/// Doubles are emitted with 17 significant digits (bit-exact round trip).
CoefficientTableSet parse_tables(std::string_view text);
std::string emit_tables(const CoefficientTableSet& set);

}  // namespace boysfn
