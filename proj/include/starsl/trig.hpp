#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace starsl {

// Closed-form integrals over [0, 2*pi]; no quadrature anywhere in the
// basis algebra. All formulas are even/odd-safe in the frequency and
// stable near zero; they also hold for complex frequencies (needed when
// moments are evaluated at rho = sqrt(lambda) with lambda < 0).

/// integral_0^{2pi} cos(w t) dt = sin(2 pi w)/w.
template <typename T>
T trig_ic(T w) {
    const double tp = 2.0 * std::numbers::pi;
    if (std::abs(w) < 1e-6) {
        T x2 = (tp * w) * (tp * w);
        return tp * (1.0 - x2 / 6.0 + x2 * x2 / 120.0);
    }
    return std::sin(tp * w) / w;
}

/// integral_0^{2pi} sin(w t) dt = (1 - cos(2 pi w))/w.
template <typename T>
T trig_is(T w) {
    const double tp = 2.0 * std::numbers::pi;
    if (std::abs(w) < 1e-6) {
        T x2 = (tp * w) * (tp * w);
        return w * (tp * tp / 2.0) * (1.0 - x2 / 12.0 + x2 * x2 / 360.0);
    }
    return (1.0 - std::cos(tp * w)) / w;
}

/// integral cos(a t) cos(b t) dt over [0, 2*pi].
template <typename T>
T trig_cc(T a, T b) {
    return 0.5 * (trig_ic<T>(a - b) + trig_ic<T>(a + b));
}

/// integral sin(a t) sin(b t) dt over [0, 2*pi].
template <typename T>
T trig_ss(T a, T b) {
    return 0.5 * (trig_ic<T>(a - b) - trig_ic<T>(a + b));
}

/// integral sin(a t) cos(b t) dt over [0, 2*pi].
template <typename T>
T trig_sc(T a, T b) {
    return 0.5 * (trig_is<T>(a + b) + trig_is<T>(a - b));
}

} // namespace starsl
