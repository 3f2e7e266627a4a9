#include "starsl/sl_core.hpp"

#include <cmath>
#include <numbers>

#include "starsl/errors.hpp"

namespace starsl {

namespace {

constexpr double kPi = std::numbers::pi;

// cos(sqrt(lambda) t) and sin(sqrt(lambda) t)/sqrt(lambda), stable for
// lambda of either sign and near zero.
void phase_pair(double lambda, double t, double& c, double& s) {
    double z = lambda * t * t;
    if (std::abs(z) < 1e-8) {
        c = 1.0 - z / 2.0 + z * z / 24.0;
        s = t * (1.0 - z / 6.0 + z * z / 120.0);
        return;
    }
    if (lambda > 0.0) {
        double r = std::sqrt(lambda);
        c = std::cos(r * t);
        s = std::sin(r * t) / r;
    } else {
        double r = std::sqrt(-lambda);
        c = std::cosh(r * t);
        s = std::sinh(r * t) / r;
    }
}

} // namespace

double FundamentalValues::wronskian_defect() const {
    return std::abs(S1 * C - C1 * S - 1.0);
}

EdgeIntegrator::EdgeIntegrator(Potential p, int steps)
    : potential_(std::move(p)), steps_(steps) {
    if (steps_ < 1) throw config_error("EdgeIntegrator: steps must be >= 1");
    if (potential_.is_fourier()) {
        double h = kPi / steps_;
        sigma_grid_.resize(2 * static_cast<std::size_t>(steps_) + 1);
        for (std::size_t i = 0; i < sigma_grid_.size(); ++i)
            sigma_grid_[i] = potential_.eval(std::min(kPi, 0.5 * h * static_cast<double>(i)));
    }
}

// Fixed-step RK4 on the first-order system
//   y'    = sigma y + y1
//   y1'   = -(lambda + sigma^2) y - sigma y1
// with sigma sampled on the half-step grid.
QuasiState EdgeIntegrator::propagate_rk4(double lambda, QuasiState s) const {
    const double h = kPi / steps_;
    auto rhs = [lambda](double sig, double y, double y1, double& dy, double& dy1) {
        dy = sig * y + y1;
        dy1 = -(lambda + sig * sig) * y - sig * y1;
    };
    double y = s.y, u = s.y1;
    for (int i = 0; i < steps_; ++i) {
        double s0 = sigma_grid_[2 * static_cast<std::size_t>(i)];
        double sm = sigma_grid_[2 * static_cast<std::size_t>(i) + 1];
        double s1 = sigma_grid_[2 * static_cast<std::size_t>(i) + 2];
        double k1y, k1u, k2y, k2u, k3y, k3u, k4y, k4u;
        rhs(s0, y, u, k1y, k1u);
        rhs(sm, y + 0.5 * h * k1y, u + 0.5 * h * k1u, k2y, k2u);
        rhs(sm, y + 0.5 * h * k2y, u + 0.5 * h * k2u, k3y, k3u);
        rhs(s1, y + h * k3y, u + h * k3u, k4y, k4u);
        y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    }
    if (!std::isfinite(y) || !std::isfinite(u))
        throw solver_error("integrate_system: non-finite state");
    return {y, u};
}

// On a piece of constant sigma = c the coefficient matrix
//   A = [  c          1 ]
//       [ -(lambda+c^2) -c ]
// satisfies A^2 = -lambda I, so exp(A dx) = cos(r dx) I + sin(r dx)/r A
// with r = sqrt(lambda); exact, valid for lambda of either sign.
QuasiState EdgeIntegrator::propagate_steps(double lambda, QuasiState s) const {
    double prev = 0.0;
    double y = s.y, u = s.y1;
    for (const auto& [bp, c] : potential_.step_samples()) {
        double dx = bp - prev;
        double cc, ss;
        phase_pair(lambda, dx, cc, ss);
        double ny = (cc + ss * c) * y + ss * u;
        double nu = -ss * (lambda + c * c) * y + (cc - ss * c) * u;
        y = ny;
        u = nu;
        prev = bp;
    }
    if (!std::isfinite(y) || !std::isfinite(u))
        throw solver_error("integrate_system: non-finite state");
    return {y, u};
}

QuasiState EdgeIntegrator::propagate(double lambda, QuasiState init) const {
    if (!std::isfinite(init.y) || !std::isfinite(init.y1))
        throw solver_error("integrate_system: non-finite initial state");
    return potential_.is_fourier() ? propagate_rk4(lambda, init)
                                   : propagate_steps(lambda, init);
}

FundamentalValues EdgeIntegrator::fundamental(double lambda) const {
    QuasiState c = propagate(lambda, {1.0, 0.0});
    QuasiState s = propagate(lambda, {0.0, 1.0});
    return {c.y, c.y1, s.y, s.y1};
}

QuasiState integrate_system(const Potential& p, double lambda, QuasiState init, int steps) {
    return EdgeIntegrator(p, steps).propagate(lambda, init);
}

FundamentalValues fundamental_at_pi(const Potential& p, double lambda, int steps) {
    return EdgeIntegrator(p, steps).fundamental(lambda);
}

double wronskian_defect(const Potential& p, double lambda, int steps) {
    return fundamental_at_pi(p, lambda, steps).wronskian_defect();
}

} // namespace starsl
