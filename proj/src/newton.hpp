#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace diskrad {

struct SolveReport {
  bool converged = false;
  int iterations = 0;        // accepted Newton steps
  double residual_norm = 0;  // max-norm of the final residual
  int damping_events = 0;    // total step halvings
};

struct NewtonOptions {
  double tol = 0.0;
  int max_iter = 50;
  int max_halvings = 30;
  // Extra full steps taken after the tolerance is met, as long as each one
  // still halves the residual. Drives the residual to its rounding floor,
  // which is what makes the discrete power-balance identity tolerance-exact
  // rather than merely tolerance-bounded.
  int polish_steps = 4;
};

inline double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Damped Newton iteration on F(x) = 0.
//   residual(x)  -> F
//   step(x, F)   -> delta solving J(x) delta = -F (may throw NumericalError)
//   admissible(x)-> physical-state check; inadmissible trials trigger halving
template <class Residual, class Step, class Admissible>
SolveReport newton_solve(std::vector<double>& x, Residual&& residual,
                         Step&& step, Admissible&& admissible,
                         const NewtonOptions& opt) {
  std::vector<double> f = residual(x);
  double rnorm = max_abs(f);
  SolveReport report;
  report.residual_norm = rnorm;
  int polish_left = opt.polish_steps;

  std::vector<double> trial(x.size());
  while (report.iterations < opt.max_iter) {
    const bool at_tol = rnorm <= opt.tol;
    if (at_tol && (polish_left <= 0 || rnorm == 0.0)) break;

    const std::vector<double> delta = step(x, f);
    if (max_abs(delta) == 0.0) break;

    double lambda = 1.0;
    bool accepted = false;
    std::vector<double> f_trial;
    double r_trial = 0.0;
    for (int h = 0; h <= opt.max_halvings; ++h) {
      if (h > 0) {
        lambda *= 0.5;
        ++report.damping_events;
      }
      for (std::size_t i = 0; i < x.size(); ++i)
        trial[i] = x[i] + lambda * delta[i];
      if (!admissible(trial)) continue;
      f_trial = residual(trial);
      r_trial = max_abs(f_trial);
      if (std::isfinite(r_trial) && r_trial < rnorm) {
        accepted = true;
        break;
      }
    }
    if (!accepted) break;  // stalled at the attainable floor

    x.swap(trial);
    f.swap(f_trial);
    ++report.iterations;
    if (at_tol) {
      if (r_trial > 0.5 * rnorm) polish_left = 0;
      else --polish_left;
    }
    rnorm = r_trial;
    report.residual_norm = rnorm;
  }

  report.converged = rnorm <= opt.tol;
  return report;
}

}  // namespace diskrad
