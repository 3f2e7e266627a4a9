#include "starsl/products.hpp"

#include <cmath>
#include <numbers>

#include "starsl/errors.hpp"

namespace starsl {

namespace {

constexpr double kPi = std::numbers::pi;
using cplx = std::complex<double>;

cplx sqrt_lambda(cplx lambda) {
    cplx r = std::sqrt(lambda);
    if (r.real() < 0.0) r = -r; // Re rho >= 0 convention
    return r;
}

// sin(pi rho)/(pi rho), stable near rho = 0.
cplx sinc_pi(cplx rho) {
    cplx x = kPi * rho;
    if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

} // namespace

void ZeroSequence::validate() const {
    if (zeros.size() != asymptote_rhos.size())
        throw config_error("zero sequence: zeros/asymptotes size mismatch");
    for (double z : zeros)
        if (z == 0.0) throw config_error("zero sequence: zero at lambda = 0 not supported");
    if (pattern == AsymptotePattern::shift && !(shift_a > 0.0 && shift_a < 1.0))
        throw config_error("zero sequence: shift parameter must lie in (0, 1)");
}

ZeroSequence ZeroSequence::exact(AsymptotePattern pattern, int n_z, double param) {
    ZeroSequence zs;
    zs.pattern = pattern;
    switch (pattern) {
    case AsymptotePattern::integers:
        for (int n = 1; n <= n_z; ++n) zs.asymptote_rhos.push_back(n);
        break;
    case AsymptotePattern::half_integers:
        for (int n = 1; n <= n_z; ++n) zs.asymptote_rhos.push_back(n - 0.5);
        break;
    case AsymptotePattern::shift:
        zs.shift_a = param;
        for (int n = 0; n <= n_z; ++n) zs.asymptote_rhos.push_back(n + param);
        for (int n = 1; n <= n_z; ++n) zs.asymptote_rhos.push_back(n - param);
        break;
    case AsymptotePattern::four_branch: {
        zs.alpha = param;
        double beta = param / kPi;
        for (int n = 1; n <= n_z; ++n) {
            zs.asymptote_rhos.push_back(n - 1 + beta);
            zs.asymptote_rhos.push_back(n - beta);
            zs.asymptote_rhos.push_back(n - 0.5);
            zs.asymptote_rhos.push_back(n);
        }
        break;
    }
    }
    for (double r : zs.asymptote_rhos) zs.zeros.push_back(r * r);
    zs.validate();
    return zs;
}

ZeroSequence ZeroSequence::four_branch_from_table(const SpectrumTable& table, int n_z) {
    ZeroSequence zs;
    zs.pattern = AsymptotePattern::four_branch;
    zs.alpha = table.alpha;
    for (const auto& e : table.take(4, n_z)) {
        zs.zeros.push_back(e.lambda);
        zs.asymptote_rhos.push_back(
            asymptotic_prediction(table.m, table.neumann_count, e.n, e.k));
    }
    zs.validate();
    return zs;
}

std::complex<double> asymptote_total(AsymptotePattern pattern, cplx lambda, double param) {
    cplx rho = sqrt_lambda(lambda);
    switch (pattern) {
    case AsymptotePattern::integers:
        return sinc_pi(rho);
    case AsymptotePattern::half_integers:
        return std::cos(kPi * rho);
    case AsymptotePattern::shift: {
        double c2a = std::cos(2.0 * kPi * param);
        return (std::cos(2.0 * kPi * rho) - c2a) / (1.0 - c2a);
    }
    case AsymptotePattern::four_branch: {
        double c2a = std::cos(2.0 * param);
        cplx shift = (std::cos(2.0 * kPi * rho) - c2a) / (1.0 - c2a);
        return shift * std::cos(kPi * rho) * sinc_pi(rho);
    }
    }
    throw config_error("asymptote_total: unknown pattern");
}

std::complex<double> product_eval(const ZeroSequence& zs, cplx lambda) {
    double param = zs.pattern == AsymptotePattern::shift ? zs.shift_a : zs.alpha;
    cplx acc = asymptote_total(zs.pattern, lambda, param);
    for (std::size_t i = 0; i < zs.zeros.size(); ++i) {
        cplx num = 1.0 - lambda / zs.zeros[i];
        if (num == 0.0) return 0.0; // retained zero hit exactly
        double lam0 = zs.asymptote_rhos[i] * zs.asymptote_rhos[i];
        acc *= num / (1.0 - lambda / lam0);
    }
    return acc;
}

double product_eval(const ZeroSequence& zs, double lambda) {
    return product_eval(zs, cplx(lambda, 0.0)).real();
}

double tail_closed_form(AsymptotePattern pattern, int n_z, double lambda, double param) {
    ZeroSequence head = ZeroSequence::exact(pattern, n_z, param);
    cplx total = asymptote_total(pattern, cplx(lambda, 0.0), param);
    double denom = 1.0;
    for (double lam0 : head.zeros) denom *= 1.0 - lambda / lam0;
    if (denom == 0.0) throw solver_error("tail_closed_form: lambda hits a retained zero");
    return total.real() / denom;
}

RepresentationReport representation_check(const ZeroSequence& zs, double rho_min,
                                          double rho_max, int grid) {
    if (zs.pattern != AsymptotePattern::four_branch)
        throw config_error("representation_check: four-branch zero sequence expected");
    double c2a = std::cos(2.0 * zs.alpha);
    auto model = [&](double rho) {
        return std::sin(kPi * rho) * std::cos(kPi * rho) *
               (std::cos(2.0 * kPi * rho) - c2a);
    };
    auto lhs = [&](double rho) { return rho * product_eval(zs, rho * rho); };

    // Fit the constant where the model is largest on a coarse reference grid.
    double rho_ref = 0.3, best = 0.0;
    for (double r = 0.1; r <= 0.95; r += 0.01) {
        if (std::abs(model(r)) > best) {
            best = std::abs(model(r));
            rho_ref = r;
        }
    }
    RepresentationReport rep;
    rep.c_fitted = lhs(rho_ref) / model(rho_ref);

    double h = (rho_max - rho_min) / grid;
    for (int i = 0; i <= grid; ++i) {
        double r = rho_min + h * i;
        double dev = lhs(r) - rep.c_fitted * model(r);
        rep.max_deviation = std::max(rep.max_deviation, std::abs(dev));
        rep.residual_energy += dev * dev * h;
    }
    return rep;
}

double product_lower_bound_constant(const ZeroSequence& zs, double r_min, double r_max,
                                    int points) {
    double c = std::numeric_limits<double>::infinity();
    for (int i = 0; i < points; ++i) {
        double r = r_min + (r_max - r_min) * i / (points - 1);
        cplx rho = r * std::exp(cplx(0.0, kPi / 4.0));
        cplx lambda = rho * rho;
        double scaled = std::abs(product_eval(zs, lambda)) * std::abs(rho) *
                        std::exp(-4.0 * std::abs(rho.imag()) * kPi);
        c = std::min(c, scaled);
    }
    return c;
}

} // namespace starsl
