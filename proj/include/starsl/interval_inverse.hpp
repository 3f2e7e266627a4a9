#pragma once

#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "starsl/potential.hpp"
#include "starsl/sl_core.hpp"

namespace starsl {

/// The two spectra of one edge: nu = zeros of C(pi, .), indexed from 0,
/// theta = zeros of S(pi, .), indexed from 1; both as lambda values.
struct TwoSpectra {
    std::vector<double> nu;
    std::vector<double> theta;
};

bool spectra_interlace(const std::vector<double>& nu, const std::vector<double>& theta);

/// Forward map: both zero families of one edge for rho <= n_max + 1/2
/// (plus a negative-lambda margin scan). Throws on a count mismatch with
/// the asymptotic ledger.
TwoSpectra spectra_from_potential(const Potential& p, int n_max,
                                  int steps = EdgeIntegrator::default_steps);

struct FitReport {
    int iterations = 0;
    double initial_residual = 0.0;
    double final_residual = 0.0;
    bool converged = false;
    bool multistart_used = false;
};

struct FitResult {
    Potential potential;
    FitReport report;
};

/// Damped Gauss-Newton with finite-difference Jacobians. Converges when
/// the step norm drops below 1e-10 or the residual below 1e-12; returns
/// the best iterate either way.
struct GaussNewtonOptions {
    int max_iter = 50;
    double step_tol = 1e-10;
    double resid_tol = 1e-12;
    double fd_step = 1e-6;
};
struct GaussNewtonOutcome {
    Eigen::VectorXd x;
    double ssr = 0.0;
    double initial_ssr = 0.0;
    int iterations = 0;
    bool converged = false;
};
GaussNewtonOutcome gauss_newton(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& residual,
                                Eigen::VectorXd x0, const GaussNewtonOptions& opts = {});

/// Recovers a basis_dim-coefficient cosine potential from the first n_use
/// entries of each spectrum by weighted Gauss-Newton fitting of the
/// forward zeros, weights 1/(1+n)^2. Starts from the zero potential with
/// a +-0.5 constant multi-start fallback.
FitResult two_spectra_reconstruct(const TwoSpectra& data, int basis_dim, int n_use,
                                  int steps = EdgeIntegrator::default_steps);

/// Recovers a cosine potential from samples (lambda_i, M(lambda_i)) of the
/// neumann-type Weyl function; the sample grid must avoid poles of M
/// (negative lambda for the fixture class).
FitResult weyl_fit_reconstruct(const std::vector<std::pair<double, double>>& samples,
                               int basis_dim, const Potential& initial,
                               int steps = EdgeIntegrator::default_steps);

} // namespace starsl
