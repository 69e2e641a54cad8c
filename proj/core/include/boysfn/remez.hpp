#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <vector>

#include "boysfn/highprec.hpp"
#include "boysfn/polynomial.hpp"

namespace boysfn {

/// Rational function p/q in the monomial basis at extended precision.
struct RationalHP {
  Poly numer;
  Poly denom;
  hp::Real eval(const hp::Real& x) const { return poly_eval(numer, x) / poly_eval(denom, x); }
};

using RealFn = std::function<hp::Real(const hp::Real&)>;

/// One weighted rational minimax problem: minimize max over [a,b] of
/// |rho(x) (f(x) - r(x))| over r with numerator degree <= n, denominator
/// degree <= m.
struct RemezProblem {
  RealFn f;
  RealFn rho;                 // empty => 1
  hp::Real a;
  hp::Real b;
  int n = 0;
  int m = 0;
  hp::Real eps_conv = 0;      // convergence threshold on ||f-r||_rho - |E|
  hp::Real abort_error_tol = 0;  // early-abort threshold E_tol; <= 0 disables
  int grid_points = 0;        // extremum-search grid size; 0 => 64*(n+m+2)
  std::uint64_t rng_seed = 1;
  int max_iterations = 200;
  int max_reguesses = 100;
  std::ostream* trace = nullptr;
};

enum class RemezStatus { Converged, Infeasible, IterationLimit, ReguessLimit };

struct RemezIterationRecord {
  hp::Real levelled_error_abs;
  hp::Real sup_error;
};

struct RemezResult {
  RemezStatus status = RemezStatus::IterationLimit;
  RationalHP approximant;          // denominator normalized monic on success
  std::vector<hp::Real> nodes;     // final equioscillation nodes
  hp::Real sup_error = 0;          // ||f - r||_rho
  hp::Real levelled_error = 0;     // signed E of the last accepted solve
  hp::Real lower_bound = 0;        // de la Vallee-Poussin certificate when infeasible
  int iterations = 0;
  int reguesses = 0;
  int alternation_count = 0;       // alternating extrema of the final error curve
  hp::Real node_error_spread = 0;  // max-min of |weighted error| at final nodes
  int monotonicity_warnings = 0;   // |E| decreased between accepted iterations
  std::vector<RemezIterationRecord> history;
};

/// Candidate solution of the fixed-node equioscillation system
/// rho (f - p/q)(x_i) = (-1)^i E.
struct FixedNodeCandidate {
  Poly numer;
  Poly denom;
  std::vector<hp::Real> denom_node_values;
  hp::Real levelled_error;  // signed E
  hp::Real residual;        // max node residual relative to max(|E|, scale)
};

/// N = n+m+2 strictly increasing nodes drawn as uniform order statistics.
std::vector<hp::Real> guess_nodes(const RemezProblem& problem, std::mt19937_64& rng);

/// Solves the fixed-node system for all m+1 eigen-candidates. The
/// denominator unknowns come out of a real symmetric (m+1)x(m+1)
/// eigenproblem in a node-orthonormal basis; the numerator follows by
/// divided-difference interpolation. Returns an empty vector for a
/// numerically degenerate node configuration (caller should re-guess).
std::vector<FixedNodeCandidate> solve_fixed_nodes(const std::vector<hp::Real>& nodes,
                                                  const std::vector<hp::Real>& fvals,
                                                  const std::vector<hp::Real>& rhovals,
                                                  int n, int m);

/// The unique candidate whose denominator has no root in [a, b] (Sturm
/// count), or nullopt when every candidate has a pole there.
std::optional<FixedNodeCandidate> select_pole_free(const std::vector<FixedNodeCandidate>& candidates,
                                                   const hp::Real& a, const hp::Real& b);

/// Argmax of a unimodal g on [a, b] to within tol.
hp::Real golden_section_max(const std::function<hp::Real(const hp::Real&)>& g,
                            const hp::Real& a, const hp::Real& b, const hp::Real& tol);

struct NodeUpdate {
  bool ok = false;                // false: fewer than N alternating extrema found
  std::vector<hp::Real> nodes;    // N strictly increasing refined extrema
  hp::Real sup_error = 0;         // max |weighted error| over all refined extrema
  hp::Real min_node_error = 0;    // min |weighted error| over the selected nodes
};

/// Step-5 node update for the current approximant: locate grid local maxima
/// of the weighted error, refine each by golden section, then pick N of them
/// with alternating signs including the global maximum.
NodeUpdate update_nodes(const RemezProblem& problem, const RationalHP& r,
                        const hp::Real& levelled_error_abs);

RemezResult remez_solve(const RemezProblem& problem);

struct WalshOptions {
  std::uint64_t rng_seed = 1;
  bool require_numer_le_denom = false;
  hp::Real eps_conv = 0;  // 0 => 0.01 * eps_tol
  std::ostream* trace = nullptr;
};

struct WalshCell {
  int n = 0, m = 0;
  RemezStatus status = RemezStatus::IterationLimit;
  hp::Real sup_error = 0;    // converged cells
  hp::Real lower_bound = 0;  // infeasible cells
};

struct WalshResult {
  bool met_tolerance = false;
  RationalHP approximant;
  int n = 0, m = 0;
  hp::Real sup_error = 0;
  std::vector<WalshCell> cells;
};

/// Walks anti-diagonals n+m = 0, 1, ... of the Walsh table and returns the
/// approximant of minimal total degree whose weighted sup error meets
/// eps_tol, breaking ties on the winning anti-diagonal by smallest error.
/// Cells are pruned with the Step-6 early abort at E_tol = eps_tol.
WalshResult walsh_search(const RealFn& f, const RealFn& rho, const hp::Real& a,
                         const hp::Real& b, const hp::Real& eps_tol,
                         int max_total_degree, const WalshOptions& options = {});

}  // namespace boysfn
