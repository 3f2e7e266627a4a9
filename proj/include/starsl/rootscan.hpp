#pragma once

#include <functional>
#include <vector>

namespace starsl {

using RealFn = std::function<double(double)>;

/// Sign-change brackets of f on [a, b] sampled with the given step.
/// Exact zeros at grid points are returned as degenerate brackets.
std::vector<std::pair<double, double>> scan_sign_changes(const RealFn& f, double a, double b,
                                                         double step);

/// Brent root refinement on a bracket with f(a)*f(b) <= 0.
double refine_root(const RealFn& f, double a, double b, double xtol = 1e-13,
                   int max_iter = 200);

/// All roots of f on [a, b] located by scan + Brent, sorted ascending.
std::vector<double> find_roots_scan(const RealFn& f, double a, double b, double step,
                                    double xtol = 1e-13);

} // namespace starsl
