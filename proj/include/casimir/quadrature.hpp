#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace casimir::quad {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

// Tolerances are relative to max(|value|, kAbsFloor) so vanishing integrals
// (e.g. the plasma-model nonequilibrium term) terminate cleanly.
inline constexpr double kAbsFloor = 1e-300;
inline constexpr int kMaxPanels = 1 << 16;

namespace detail {

// Gauss-Kronrod 7-15 pair (QUADPACK dqk15 abscissae/weights, positive half).
inline constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                                  0.417959183673469};

struct Panel {
  double lo, hi;
  double value;  // K15 estimate
  double error;  // |K15 - G7|
};

template <class F>
Panel eval_panel(F&& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(mid);
  double k15 = kWgk[7] * fc;
  double g7 = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double fsum = f(mid - dx) + f(mid + dx);
    k15 += kWgk[i] * fsum;
    if (i % 2 == 1) g7 += kWg[i / 2] * fsum;
  }
  Panel p;
  p.lo = lo;
  p.hi = hi;
  p.value = k15 * half;
  p.error = std::abs((k15 - g7) * half);
  return p;
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [lo, hi]. Pre-splits into
/// min_panels equal panels, then bisects the panel with the largest error
/// estimate until the summed estimate meets rel_tol or the panel cap is hit.
/// Deterministic: ties broken by left endpoint, final sum in ascending order.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double lo, double hi, double rel_tol,
                                    int min_panels = 1) {
  QuadratureResult out;
  if (!(hi > lo)) return out;
  min_panels = std::max(min_panels, 1);

  std::vector<detail::Panel> panels;
  panels.reserve(static_cast<size_t>(min_panels) + 64);
  for (int i = 0; i < min_panels; ++i) {
    const double a = lo + (hi - lo) * static_cast<double>(i) / min_panels;
    const double b = (i + 1 == min_panels) ? hi : lo + (hi - lo) * static_cast<double>(i + 1) / min_panels;
    panels.push_back(detail::eval_panel(f, a, b));
    out.evaluations += 15;
  }

  auto totals = [&panels]() {
    double v = 0.0, e = 0.0;
    for (const auto& p : panels) {
      v += p.value;
      e += p.error;
    }
    return std::pair<double, double>(v, e);
  };

  while (static_cast<int>(panels.size()) < kMaxPanels) {
    auto [value, error] = totals();
    if (error <= rel_tol * std::max(std::abs(value), kAbsFloor)) break;
    size_t worst = 0;
    for (size_t i = 1; i < panels.size(); ++i) {
      if (panels[i].error > panels[worst].error ||
          (panels[i].error == panels[worst].error && panels[i].lo < panels[worst].lo)) {
        worst = i;
      }
    }
    const detail::Panel old = panels[worst];
    const double mid = 0.5 * (old.lo + old.hi);
    if (mid <= old.lo || mid >= old.hi) break;  // interval exhausted in FP
    panels[worst] = detail::eval_panel(f, old.lo, mid);
    panels.push_back(detail::eval_panel(f, mid, old.hi));
    out.evaluations += 30;
  }

  std::sort(panels.begin(), panels.end(),
            [](const detail::Panel& a, const detail::Panel& b) { return a.lo < b.lo; });
  double value = 0.0, error = 0.0;
  for (const auto& p : panels) {
    value += p.value;
    error += p.error;
  }
  out.value = value;
  out.error_estimate = error;
  out.converged = error <= rel_tol * std::max(std::abs(value), kAbsFloor);
  return out;
}

/// Semi-infinite integral of an (at least) exponentially decaying integrand
/// with characteristic length ~scale. Truncates at 40*scale and verifies the
/// tail with log-spaced samples.
template <class F>
QuadratureResult integrate_semiinfinite(F&& f, double scale, double rel_tol,
                                        int min_panels = 32) {
  const double hi = 40.0 * scale;
  QuadratureResult out = integrate_adaptive(f, 0.0, hi, rel_tol, min_panels);

  double tail = 0.0;
  double x = hi;
  for (int i = 0; i < 4; ++i) {
    tail += std::abs(f(x)) * scale;
    ++out.evaluations;
    x *= 1.3;
  }
  if (tail > rel_tol * std::max(std::abs(out.value), kAbsFloor)) out.converged = false;
  out.error_estimate += tail;
  return out;
}

/// Sum of term(l) for l = 0, 1, 2, ... in ascending order. Stops once
/// `consecutive` successive terms each fall below rel_tol * |partial sum|,
/// never before floor_terms terms have been added.
template <class F>
QuadratureResult sum_series(F&& term, double rel_tol, int consecutive = 3,
                            long floor_terms = 1) {
  constexpr long kMaxTerms = 1000000;
  QuadratureResult out;
  double sum = 0.0;
  int small_run = 0;
  for (long l = 0; l < kMaxTerms; ++l) {
    const double t = term(l);
    ++out.evaluations;
    sum += t;
    if (std::abs(t) <= rel_tol * std::max(std::abs(sum), kAbsFloor)) {
      ++small_run;
    } else {
      small_run = 0;
    }
    out.error_estimate = std::abs(t);
    if (l + 1 >= floor_terms && small_run >= consecutive) {
      out.value = sum;
      out.converged = true;
      return out;
    }
  }
  out.value = sum;
  out.converged = false;
  return out;
}

}  // namespace casimir::quad
