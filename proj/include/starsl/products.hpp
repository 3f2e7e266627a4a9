#pragma once

#include <complex>
#include <vector>

#include "starsl/graph_spectra.hpp"

namespace starsl {

/// Supported zero asymptotics for truncated infinite products.
enum class AsymptotePattern {
    integers,      // rho_n ~ n, n >= 1
    half_integers, // rho_n ~ n - 1/2, n >= 1
    shift,         // rho ~ n + a (n >= 0) and n - a (n >= 1)
    four_branch,   // the eigenvalue branches n-1+b, n-b, n-1/2, n; b = alpha/pi
};

/// A finite truncation of a zero sequence lambda_n != 0 together with the
/// asymptote each retained zero deviates from. Products are evaluated as
/// head-over-asymptote ratios times the closed-form total of the asymptote
/// pattern, so the truncation tail is always completed in closed form.
struct ZeroSequence {
    AsymptotePattern pattern = AsymptotePattern::integers;
    double shift_a = 0.0; // pattern parameter for shift
    double alpha = 0.0;   // pattern parameter for four_branch
    std::vector<double> zeros;          // lambda values
    std::vector<double> asymptote_rhos; // matched 1:1 with zeros

    void validate() const;

    /// Exact-asymptote sequence with n <= n_z (per branch where relevant).
    static ZeroSequence exact(AsymptotePattern pattern, int n_z, double param = 0.0);
    /// Branch zeros k = 1..4, n <= n_z of an eigenvalue table.
    static ZeroSequence four_branch_from_table(const SpectrumTable& table, int n_z);
};

/// Closed-form value of the full infinite product over the unperturbed
/// asymptote zeros, normalized to 1 at lambda = 0.
std::complex<double> asymptote_total(AsymptotePattern pattern, std::complex<double> lambda,
                                     double param = 0.0);

/// prod_retained (1 - lambda/lambda_n) completed by the asymptote tail.
std::complex<double> product_eval(const ZeroSequence& zs, std::complex<double> lambda);
double product_eval(const ZeroSequence& zs, double lambda);

/// prod_{n > n_z} (1 - lambda/lambda_n^asymptote) = closed-form total
/// divided by the retained asymptote head.
double tail_closed_form(AsymptotePattern pattern, int n_z, double lambda, double param = 0.0);

/// Checks the representation of a four-branch product against
/// sin(rho pi) cos(rho pi) (cos 2 rho pi - cos 2 alpha) / rho with a
/// constant fitted at a reference point.
struct RepresentationReport {
    double c_fitted = 0.0;
    double max_deviation = 0.0;   // max |rho P(rho^2) - C model(rho)| off zeros
    double residual_energy = 0.0; // grid L2 energy of the deviation
};
RepresentationReport representation_check(const ZeroSequence& zs, double rho_min = 0.3,
                                          double rho_max = 10.0, int grid = 512);

/// Fitted constant c = min over the ray arg(rho) = pi/4, |rho| in
/// [r_min, r_max] of |P(rho^2)| |rho| exp(-4 |Im rho| pi); positive when
/// the lower estimate of the product representation holds.
double product_lower_bound_constant(const ZeroSequence& zs, double r_min = 2.0,
                                    double r_max = 10.0, int points = 81);

} // namespace starsl
