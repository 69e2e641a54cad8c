#include "boysfn/remez.hpp"

#include <algorithm>
#include <stdexcept>

#include "boysfn/linalg.hpp"

namespace boysfn {

using hp::Real;

namespace {

Real one_fn(const Real&) { return Real(1); }

void validate(const RemezProblem& p) {
  if (!p.f) throw std::invalid_argument("remez: target function not set");
  if (!(p.a < p.b)) throw std::invalid_argument("remez: need a < b");
  if (p.n < 0 || p.m < 0) throw std::invalid_argument("remez: degrees must be non-negative");
  const int N = p.n + p.m + 2;
  if (p.grid_points != 0 && p.grid_points < 4 * N)
    throw std::invalid_argument("remez: grid_points must be at least 4*(n+m+2)");
  if (p.eps_conv < 0) throw std::invalid_argument("remez: eps_conv must be >= 0");
}

Real eval_rho(const RemezProblem& p, const Real& x) {
  return p.rho ? p.rho(x) : Real(1);
}

// Grid scan plus golden-section refinement of the weighted error curve.
class ErrorCurve {
 public:
  explicit ErrorCurve(const RemezProblem& p) : prob_(p) {
    const int N = p.n + p.m + 2;
    const int K = p.grid_points ? p.grid_points : 64 * N;
    xs_.resize(K);
    fvals_.resize(K);
    rhovals_.resize(K);
    for (int i = 0; i < K; ++i) {
      xs_[i] = p.a + (p.b - p.a) * i / (K - 1);
      fvals_[i] = p.f(xs_[i]);
      rhovals_[i] = eval_rho(p, xs_[i]);
    }
    golden_tol_ = (p.b - p.a) * pow(Real(10), -(hp::working_digits() * 2 / 5));
  }

  struct Extremum {
    Real x;
    Real value;  // signed weighted error
  };

  Real error_at(const RationalHP& r, const Real& x) const {
    return eval_rho(prob_, x) * (prob_.f(x) - r.eval(x));
  }

  std::vector<Extremum> refined_extrema(const RationalHP& r) const {
    const int K = static_cast<int>(xs_.size());
    std::vector<Real> e(K);
    for (int i = 0; i < K; ++i) e[i] = rhovals_[i] * (fvals_[i] - r.eval(xs_[i]));

    std::vector<Extremum> out;
    auto g = [&](const Real& x) { return abs(error_at(r, x)); };
    for (int i = 0; i < K; ++i) {
      const Real ai = abs(e[i]);
      if (i > 0 && ai < abs(e[i - 1])) continue;
      if (i + 1 < K && ai < abs(e[i + 1])) continue;
      const Real lo = (i == 0) ? prob_.a : xs_[i - 1];
      const Real hi = (i + 1 == K) ? prob_.b : xs_[i + 1];
      Real xstar = golden_section_max(g, lo, hi, golden_tol_);
      Real estar = error_at(r, xstar);
      if (abs(estar) < ai) {  // refinement never worsens a unimodal cell; keep the grid point if it did
        xstar = xs_[i];
        estar = e[i];
      }
      out.push_back({xstar, estar});
    }

    std::sort(out.begin(), out.end(),
              [](const Extremum& u, const Extremum& v) { return u.x < v.x; });
    // Merge refinements that collapsed onto the same extremum.
    const Real close = (prob_.b - prob_.a) * pow(Real(10), -(hp::working_digits() / 3));
    std::vector<Extremum> merged;
    for (auto& ex : out) {
      if (!merged.empty() && ex.x - merged.back().x < close) {
        if (abs(ex.value) > abs(merged.back().value)) merged.back() = ex;
      } else {
        merged.push_back(ex);
      }
    }
    return merged;
  }

 private:
  const RemezProblem& prob_;
  std::vector<Real> xs_, fvals_, rhovals_;
  Real golden_tol_;
};

int sign_of(const Real& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Selects N alternating-sign extrema containing the global maximum, each with
// magnitude >= |E| (condition i); extrema below that level are noise humps
// the exchange never needs.
NodeUpdate select_alternating(const std::vector<ErrorCurve::Extremum>& extrema, int N,
                              const Real& levelled_error_abs) {
  NodeUpdate upd;
  for (const auto& ex : extrema)
    if (abs(ex.value) > upd.sup_error) upd.sup_error = abs(ex.value);
  const Real floor_level = levelled_error_abs * (1 - pow(Real(10), -10));
  // Compress same-sign runs, keeping the largest magnitude of each run.
  std::vector<ErrorCurve::Extremum> alt;
  for (const auto& ex : extrema) {
    if (sign_of(ex.value) == 0) continue;
    if (abs(ex.value) < floor_level) continue;
    if (!alt.empty() && sign_of(alt.back().value) == sign_of(ex.value)) {
      if (abs(ex.value) > abs(alt.back().value)) alt.back() = ex;
    } else {
      alt.push_back(ex);
    }
  }
  if (static_cast<int>(alt.size()) < N) return upd;

  auto global_index = [&alt]() {
    size_t g = 0;
    for (size_t i = 1; i < alt.size(); ++i)
      if (abs(alt[i].value) > abs(alt[g].value)) g = i;
    return g;
  };
  while (static_cast<int>(alt.size()) > N) {
    const size_t g = global_index();
    if (static_cast<int>(alt.size()) == N + 1) {
      // Drop the weaker endpoint; the global maximum is never the weaker one.
      if (abs(alt.front().value) <= abs(alt.back().value))
        alt.erase(alt.begin());
      else
        alt.pop_back();
      continue;
    }
    size_t best = alt.size();
    Real best_score = 0;
    for (size_t i = 0; i + 1 < alt.size(); ++i) {
      if (i == g || i + 1 == g) continue;
      const Real vi = abs(alt[i].value);
      const Real vj = abs(alt[i + 1].value);
      const Real score = vi > vj ? vi : vj;
      if (best == alt.size() || score < best_score) {
        best = i;
        best_score = score;
      }
    }
    if (best == alt.size()) return upd;  // cannot drop a pair without losing the global max
    alt.erase(alt.begin() + best, alt.begin() + best + 2);
  }

  upd.ok = true;
  upd.nodes.reserve(N);
  upd.min_node_error = abs(alt.front().value);
  for (const auto& ex : alt) {
    upd.nodes.push_back(ex.x);
    if (abs(ex.value) < upd.min_node_error) upd.min_node_error = abs(ex.value);
  }
  return upd;
}

}  // namespace

std::vector<hp::Real> guess_nodes(const RemezProblem& problem, std::mt19937_64& rng) {
  const int N = problem.n + problem.m + 2;
  std::vector<Real> nodes(N);
  const Real width = problem.b - problem.a;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    for (int i = 0; i < N; ++i) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      nodes[i] = problem.a + width * u;
    }
    std::sort(nodes.begin(), nodes.end());
    bool distinct = true;
    for (int i = 1; i < N; ++i)
      if (nodes[i] - nodes[i - 1] < width * 1e-12) distinct = false;
    if (distinct) return nodes;
  }
  throw std::runtime_error("guess_nodes: could not draw distinct nodes");
}

std::vector<FixedNodeCandidate> solve_fixed_nodes(const std::vector<Real>& nodes,
                                                  const std::vector<Real>& fvals,
                                                  const std::vector<Real>& rhovals,
                                                  int n, int m) {
  const int N = n + m + 2;
  if (static_cast<int>(nodes.size()) != N || static_cast<int>(fvals.size()) != N ||
      static_cast<int>(rhovals.size()) != N)
    throw std::invalid_argument("solve_fixed_nodes: need n+m+2 nodes and matching values");

  // Lagrange weights omega_i = 1 / prod_{j != i} (x_i - x_j). For sorted
  // nodes, omega_i (-1)^i has constant sign, which is what turns the system
  // symmetric below.
  std::vector<Real> omega(N);
  for (int i = 0; i < N; ++i) {
    Real prod = 1;
    for (int j = 0; j < N; ++j)
      if (j != i) prod *= nodes[i] - nodes[j];
    if (prod == 0) return {};
    omega[i] = 1 / prod;
  }

  // Positive inner-product weights mu_i = |omega_i| / rho_i.
  std::vector<Real> mu(N);
  for (int i = 0; i < N; ++i) {
    if (!(rhovals[i] > 0)) throw std::invalid_argument("solve_fixed_nodes: weight must be positive");
    mu[i] = abs(omega[i]) / rhovals[i];
  }

  // Orthonormal polynomial basis phi_0..phi_m for <u,v> = sum_i mu_i u_i v_i
  // via the Stieltjes three-term recurrence, tracked both as node values and
  // as monomial coefficients.
  std::vector<std::vector<Real>> phi(m + 1, std::vector<Real>(N));
  std::vector<Poly> phi_mono(m + 1);
  auto dot = [&](const std::vector<Real>& u, const std::vector<Real>& v) {
    Real s = 0;
    for (int i = 0; i < N; ++i) s += mu[i] * u[i] * v[i];
    return s;
  };

  {
    Real norm0 = 0;
    for (int i = 0; i < N; ++i) norm0 += mu[i];
    norm0 = sqrt(norm0);
    for (int i = 0; i < N; ++i) phi[0][i] = 1 / norm0;
    phi_mono[0] = Poly{1 / norm0};
    std::vector<Real> prev;  // phi_{j-1}
    Real bprev = 0;
    Poly prev_mono;
    for (int j = 0; j < m; ++j) {
      std::vector<Real> w(N);
      for (int i = 0; i < N; ++i) w[i] = nodes[i] * phi[j][i];
      const Real aj = dot(w, phi[j]);
      for (int i = 0; i < N; ++i) {
        w[i] -= aj * phi[j][i];
        if (j > 0) w[i] -= bprev * prev[i];
      }
      const Real bj = sqrt(dot(w, w));
      if (bj == 0) return {};  // degenerate node configuration
      for (int i = 0; i < N; ++i) w[i] /= bj;

      Poly wm(phi_mono[j].size() + 1, Real(0));
      for (size_t c = 0; c < phi_mono[j].size(); ++c) {
        wm[c + 1] += phi_mono[j][c];
        wm[c] -= aj * phi_mono[j][c];
      }
      if (j > 0)
        for (size_t c = 0; c < prev_mono.size(); ++c) wm[c] -= bprev * prev_mono[c];
      for (auto& c : wm) c /= bj;

      prev = phi[j];
      prev_mono = phi_mono[j];
      bprev = bj;
      phi[j + 1] = std::move(w);
      phi_mono[j + 1] = std::move(wm);
    }
  }

  // A_{st} = sum_i omega_i f_i phi_s(x_i) phi_t(x_i); then A beta = lambda beta
  // with E = (-1)^(N-1) lambda.
  std::vector<std::vector<Real>> A(m + 1, std::vector<Real>(m + 1));
  for (int s = 0; s <= m; ++s)
    for (int t = s; t <= m; ++t) {
      Real sum = 0;
      for (int i = 0; i < N; ++i) sum += omega[i] * fvals[i] * phi[s][i] * phi[t][i];
      A[s][t] = sum;
      A[t][s] = sum;
    }

  const auto eig = jacobi_eigensolve(A);
  const int e_sign = ((N - 1) % 2 == 0) ? 1 : -1;

  Real scale = 0;
  for (int i = 0; i < N; ++i)
    if (abs(rhovals[i] * fvals[i]) > scale) scale = abs(rhovals[i] * fvals[i]);

  const Real residual_tol = pow(Real(10), -(hp::working_digits() - 8));
  const auto order = leja_order(nodes);

  std::vector<FixedNodeCandidate> out;
  for (int j = 0; j <= m; ++j) {
    FixedNodeCandidate cand;
    cand.levelled_error = e_sign * eig.values[j];

    cand.denom_node_values.assign(N, Real(0));
    Poly qmono(static_cast<size_t>(m) + 1, Real(0));
    for (int s = 0; s <= m; ++s) {
      for (int i = 0; i < N; ++i) cand.denom_node_values[i] += eig.vectors[j][s] * phi[s][i];
      for (size_t c = 0; c < phi_mono[s].size(); ++c) qmono[c] += eig.vectors[j][s] * phi_mono[s][c];
    }
    cand.denom = std::move(qmono);

    Real qmax = 0;
    for (const auto& qv : cand.denom_node_values)
      if (abs(qv) > qmax) qmax = abs(qv);
    bool usable = qmax > 0;
    const Real qtiny = qmax * pow(Real(10), -(hp::working_digits() + hp::kGuardDigits10 - 6));
    if (usable)
      for (const auto& qv : cand.denom_node_values)
        if (abs(qv) <= qtiny) usable = false;  // denominator vanishes at a node
    if (!usable) continue;

    // p interpolates (f_i - (-1)^i E / rho_i) q(x_i) on a Leja-ordered subset.
    std::vector<Real> pxs(n + 1), pys(n + 1);
    for (int t = 0; t <= n; ++t) {
      const int i = order[t];
      const int sigma = (i % 2 == 0) ? 1 : -1;
      pxs[t] = nodes[i];
      pys[t] = (fvals[i] - sigma * cand.levelled_error / rhovals[i]) * cand.denom_node_values[i];
    }
    cand.numer = newton_interpolate(pxs, pys);

    Real res = 0;
    for (int i = 0; i < N; ++i) {
      const int sigma = (i % 2 == 0) ? 1 : -1;
      const Real r_i = poly_eval(cand.numer, nodes[i]) / cand.denom_node_values[i];
      const Real v = rhovals[i] * (fvals[i] - r_i) - sigma * cand.levelled_error;
      if (abs(v) > res) res = abs(v);
    }
    Real denom_scale = abs(cand.levelled_error);
    if (scale > denom_scale) denom_scale = scale;
    if (denom_scale == 0) denom_scale = 1;
    cand.residual = res / denom_scale;
    if (cand.residual <= residual_tol) out.push_back(std::move(cand));
  }
  return out;
}

std::optional<FixedNodeCandidate> select_pole_free(const std::vector<FixedNodeCandidate>& candidates,
                                                   const Real& a, const Real& b) {
  std::optional<FixedNodeCandidate> best;
  const Real trim_tol = pow(Real(10), -(hp::working_digits() + hp::kGuardDigits10 - 8));
  for (const auto& cand : candidates) {
    Poly q = poly_trim(cand.denom, trim_tol);
    if (q.size() == 1) {
      if (q[0] == 0) continue;
    } else {
      Real maxc = 0;
      for (const auto& c : q)
        if (abs(c) > maxc) maxc = abs(c);
      if (abs(poly_eval(q, a)) <= maxc * trim_tol) continue;  // root at a: Sturm counts (a,b]
      if (sturm_root_count(q, a, b) != 0) continue;
    }
    if (!best || cand.residual < best->residual) best = cand;
  }
  return best;
}

hp::Real golden_section_max(const std::function<Real(const Real&)>& g, const Real& a,
                            const Real& b, const Real& tol) {
  if (!(tol > 0)) throw std::invalid_argument("golden_section_max: tol must be positive");
  const Real sqrt5 = sqrt(Real(5));
  const Real invphi = (sqrt5 - 1) / 2;
  const Real invphi2 = (3 - sqrt5) / 2;
  Real lo = a, hi = b;
  Real h = hi - lo;
  if (h <= tol) return (lo + hi) / 2;
  Real c = lo + invphi2 * h;
  Real d = lo + invphi * h;
  Real yc = g(c);
  Real yd = g(d);
  while (h > tol) {
    if (yc >= yd) {
      hi = d;
      d = c;
      yd = yc;
      h = hi - lo;
      c = lo + invphi2 * h;
      yc = g(c);
    } else {
      lo = c;
      c = d;
      yc = yd;
      h = hi - lo;
      d = lo + invphi * h;
      yd = g(d);
    }
  }
  return (lo + hi) / 2;
}

NodeUpdate update_nodes(const RemezProblem& problem, const RationalHP& r,
                        const hp::Real& levelled_error_abs) {
  validate(problem);
  ErrorCurve curve(problem);
  return select_alternating(curve.refined_extrema(r), problem.n + problem.m + 2,
                            levelled_error_abs);
}

namespace {

void trace_line(const RemezProblem& p, int iter, const Real& absE, const Real& sup,
                const std::vector<Real>& nodes) {
  if (!p.trace) return;
  *p.trace << "remez n=" << p.n << " m=" << p.m << " iter=" << iter << " E=" << absE
           << " sup=" << sup << " nodes=[";
  for (size_t i = 0; i < nodes.size(); ++i)
    *p.trace << (i ? "," : "") << static_cast<double>(nodes[i]);
  *p.trace << "]\n";
}

RationalHP finalize_monic(const FixedNodeCandidate& cand) {
  RationalHP r;
  const Real trim_tol = pow(Real(10), -(hp::working_digits() - 4));
  r.denom = poly_trim(cand.denom, trim_tol);
  r.numer = cand.numer;
  const Real lead = r.denom.back();
  for (auto& c : r.denom) c /= lead;
  r.denom.back() = 1;  // exact
  for (auto& c : r.numer) c /= lead;
  return r;
}

}  // namespace

RemezResult remez_solve(const RemezProblem& problem) {
  validate(problem);
  RemezResult result;
  const int N = problem.n + problem.m + 2;
  std::mt19937_64 rng(problem.rng_seed);
  ErrorCurve curve(problem);

  std::vector<Real> nodes = guess_nodes(problem, rng);
  Real prev_absE = -1;

  while (true) {
    std::vector<Real> fvals(N), rhovals(N);
    for (int i = 0; i < N; ++i) {
      fvals[i] = problem.f(nodes[i]);
      rhovals[i] = eval_rho(problem, nodes[i]);
    }

    auto reguess = [&]() -> bool {
      if (result.reguesses >= problem.max_reguesses) return false;
      ++result.reguesses;
      nodes = guess_nodes(problem, rng);
      prev_absE = -1;
      return true;
    };

    const auto candidates = solve_fixed_nodes(nodes, fvals, rhovals, problem.n, problem.m);
    const auto selected = select_pole_free(candidates, problem.a, problem.b);
    if (!selected) {
      if (reguess()) continue;
      result.status = RemezStatus::ReguessLimit;
      return result;
    }
    ++result.iterations;

    RationalHP r{selected->numer, selected->denom};
    const Real absE = abs(selected->levelled_error);
    const auto extrema = curve.refined_extrema(r);
    NodeUpdate upd = select_alternating(extrema, N, absE);
    const Real sup = upd.sup_error;

    // de la Vallee-Poussin: the levelled error never exceeds the sup error.
    if (absE > sup * (1 + pow(Real(10), -10)))
      throw std::logic_error("remez_solve: de la Vallee-Poussin inequality violated");
    if (prev_absE >= 0 && absE < prev_absE * (1 - pow(Real(10), -20))) {
      ++result.monotonicity_warnings;
      if (problem.trace) *problem.trace << "remez warning: |E| decreased\n";
    }
    prev_absE = absE;
    result.history.push_back({absE, sup});
    trace_line(problem, result.iterations, absE, sup, nodes);

    if (sup - absE <= problem.eps_conv) {
      result.status = RemezStatus::Converged;
      result.approximant = finalize_monic(*selected);
      result.sup_error = sup;
      result.levelled_error = selected->levelled_error;
      if (upd.ok) {
        result.nodes = upd.nodes;
        result.alternation_count = static_cast<int>(upd.nodes.size());
        Real lo = -1, hi = 0;
        for (const auto& x : upd.nodes) {
          const Real v = abs(curve.error_at(r, x));
          if (lo < 0 || v < lo) lo = v;
          if (v > hi) hi = v;
        }
        result.node_error_spread = hi - lo;
      } else {
        // Degenerate (e.g. exact representation, error identically ~0).
        result.nodes = nodes;
        result.alternation_count = 0;
        result.node_error_spread = 0;
      }
      return result;
    }

    if (!upd.ok) {
      if (reguess()) continue;
      result.status = RemezStatus::ReguessLimit;
      return result;
    }

    // Step 6: abort when even the smallest new-node error certifies that the
    // requested tolerance is unreachable.
    if (problem.abort_error_tol > 0 && upd.min_node_error > problem.abort_error_tol) {
      result.status = RemezStatus::Infeasible;
      result.lower_bound = upd.min_node_error;
      result.sup_error = sup;
      result.levelled_error = selected->levelled_error;
      return result;
    }

    if (result.iterations >= problem.max_iterations) {
      result.status = RemezStatus::IterationLimit;
      result.sup_error = sup;
      result.levelled_error = selected->levelled_error;
      return result;
    }
    nodes = upd.nodes;
  }
}

WalshResult walsh_search(const RealFn& f, const RealFn& rho, const Real& a, const Real& b,
                         const Real& eps_tol, int max_total_degree,
                         const WalshOptions& options) {
  if (!(eps_tol > 0)) throw std::invalid_argument("walsh_search: eps_tol must be positive");
  WalshResult result;
  bool have_best = false;

  for (int d = 0; d <= max_total_degree; ++d) {
    bool diagonal_hit = false;
    WalshResult diagonal_best;
    for (int n = 0; n <= d; ++n) {
      const int m = d - n;
      if (options.require_numer_le_denom && n > m) continue;

      RemezProblem prob;
      prob.f = f;
      prob.rho = rho ? rho : RealFn(one_fn);
      prob.a = a;
      prob.b = b;
      prob.n = n;
      prob.m = m;
      prob.eps_conv = options.eps_conv > 0 ? options.eps_conv : eps_tol / 100;
      prob.abort_error_tol = eps_tol;
      prob.rng_seed = options.rng_seed + 0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(n) * 64 + m + 1);
      prob.trace = options.trace;

      RemezResult cell = remez_solve(prob);
      WalshCell rec{n, m, cell.status, cell.sup_error, cell.lower_bound};
      result.cells.push_back(rec);
      if (options.trace) {
        *options.trace << "walsh cell (" << n << "," << m << ") status="
                       << static_cast<int>(cell.status) << " sup=" << cell.sup_error
                       << " lb=" << cell.lower_bound << "\n";
      }

      if (cell.status == RemezStatus::Converged) {
        if (!have_best || cell.sup_error < result.sup_error) {
          have_best = true;
          result.approximant = cell.approximant;
          result.n = n;
          result.m = m;
          result.sup_error = cell.sup_error;
        }
        if (cell.sup_error <= eps_tol &&
            (!diagonal_hit || cell.sup_error < diagonal_best.sup_error)) {
          diagonal_hit = true;
          diagonal_best.approximant = cell.approximant;
          diagonal_best.n = n;
          diagonal_best.m = m;
          diagonal_best.sup_error = cell.sup_error;
        }
      }
    }
    if (diagonal_hit) {
      diagonal_best.met_tolerance = true;
      diagonal_best.cells = std::move(result.cells);
      return diagonal_best;
    }
  }
  result.met_tolerance = false;
  return result;
}

}  // namespace boysfn
