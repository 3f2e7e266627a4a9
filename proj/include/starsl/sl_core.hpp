#pragma once

#include <vector>

#include "starsl/potential.hpp"

namespace starsl {

/// State of one edge solution: the value y and the quasi-derivative
/// y^[1] = y' - sigma y.
struct QuasiState {
    double y = 0.0;
    double y1 = 0.0;
};

/// Fundamental solutions of -(y^[1])' - sigma y^[1] - sigma^2 y = lambda y
/// at x = pi: C with (C, C^[1])(0) = (1, 0) and S with (S, S^[1])(0) = (0, 1).
struct FundamentalValues {
    double C = 0.0;
    double C1 = 0.0;
    double S = 0.0;
    double S1 = 0.0;

    /// |S1*C - C1*S - 1|; zero for the exact flow.
    double wronskian_defect() const;
};

/// Propagator for one edge. Precomputes what the representation allows:
/// sigma samples on the Runge-Kutta grid for cosine-series potentials,
/// nothing beyond the pieces for step potentials (those are propagated by
/// exact constant-coefficient 2x2 exponentials).
class EdgeIntegrator {
public:
    explicit EdgeIntegrator(Potential p, int steps = default_steps);

    static constexpr int default_steps = 2000;

    const Potential& potential() const { return potential_; }
    int steps() const { return steps_; }

    /// State at x = pi from the given state at x = 0.
    QuasiState propagate(double lambda, QuasiState init) const;

    /// Both fundamental solutions at x = pi.
    FundamentalValues fundamental(double lambda) const;

private:
    QuasiState propagate_rk4(double lambda, QuasiState s) const;
    QuasiState propagate_steps(double lambda, QuasiState s) const;

    Potential potential_;
    int steps_;
    std::vector<double> sigma_grid_; // sigma at x_i = i*h/2, i = 0..2*steps
};

/// One-shot helpers mirroring EdgeIntegrator; convenient for single
/// evaluations and tests.
QuasiState integrate_system(const Potential& p, double lambda, QuasiState init,
                            int steps = EdgeIntegrator::default_steps);
FundamentalValues fundamental_at_pi(const Potential& p, double lambda,
                                    int steps = EdgeIntegrator::default_steps);
double wronskian_defect(const Potential& p, double lambda,
                        int steps = EdgeIntegrator::default_steps);

} // namespace starsl
