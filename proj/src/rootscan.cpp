#include "starsl/rootscan.hpp"

#include <algorithm>
#include <cmath>

#include "starsl/errors.hpp"

namespace starsl {

std::vector<std::pair<double, double>> scan_sign_changes(const RealFn& f, double a, double b,
                                                         double step) {
    std::vector<std::pair<double, double>> brackets;
    if (!(b > a) || !(step > 0.0)) return brackets;
    int n = static_cast<int>(std::ceil((b - a) / step));
    double x0 = a, f0 = f(a);
    for (int i = 1; i <= n; ++i) {
        double x1 = std::min(b, a + step * i);
        double f1 = f(x1);
        if (f0 == 0.0) {
            brackets.emplace_back(x0, x0);
        } else if (f1 != 0.0 && std::signbit(f0) != std::signbit(f1)) {
            brackets.emplace_back(x0, x1);
        }
        x0 = x1;
        f0 = f1;
    }
    if (f0 == 0.0) brackets.emplace_back(x0, x0);
    return brackets;
}

double refine_root(const RealFn& f, double a, double b, double xtol, int max_iter) {
    if (a == b) return a;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (std::signbit(fa) == std::signbit(fb))
        throw solver_error("refine_root: endpoints do not bracket a sign change");

    // Brent's method: inverse quadratic / secant with bisection fallback.
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int it = 0; it < max_iter; ++it) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * xtol;
        double m = 0.5 * (c - b);
        if (std::abs(m) <= tol || fb == 0.0) return b;
        if (std::abs(e) < tol || std::abs(fa) <= std::abs(fb)) {
            d = e = m;
        } else {
            double s = fb / fa, p, q;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                double qq = fa / fc, r = fb / fc;
                p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q; else p = -p;
            if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = e = m;
            }
        }
        a = b; fa = fb;
        b += (std::abs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a; fc = fa;
            d = e = b - a;
        }
    }
    return b;
}

std::vector<double> find_roots_scan(const RealFn& f, double a, double b, double step,
                                    double xtol) {
    std::vector<double> roots;
    for (const auto& [lo, hi] : scan_sign_changes(f, a, b, step))
        roots.push_back(lo == hi ? lo : refine_root(f, lo, hi, xtol));
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace starsl
