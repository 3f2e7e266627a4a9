#include "starsl/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <json.hpp>

#include "starsl/errors.hpp"

namespace starsl {

namespace {
constexpr double kPi = std::numbers::pi;
}

double TrigAtom::eval(double t) const {
    if (scale == 0.0) return 0.0;
    double w = frequency * t;
    return scale * (kind == TrigKind::cosine ? std::cos(w) : std::sin(w));
}

VectorAtom make_v_atom(double rho, double g) {
    VectorAtom v;
    v.ch1 = {TrigKind::cosine, rho, rho / g};
    v.ch2 = {TrigKind::sine, rho, 1.0};
    return v;
}

VectorAtom make_sine_atom(double rho) {
    VectorAtom v;
    v.ch1 = {TrigKind::cosine, 0.0, 0.0};
    v.ch2 = {TrigKind::sine, rho, 1.0};
    return v;
}

double gram_entry(const TrigAtom& a, const TrigAtom& b) {
    if (a.scale == 0.0 || b.scale == 0.0) return 0.0;
    double v;
    if (a.kind == TrigKind::cosine && b.kind == TrigKind::cosine)
        v = trig_cc<double>(a.frequency, b.frequency);
    else if (a.kind == TrigKind::sine && b.kind == TrigKind::sine)
        v = trig_ss<double>(a.frequency, b.frequency);
    else if (a.kind == TrigKind::sine)
        v = trig_sc<double>(a.frequency, b.frequency);
    else
        v = trig_sc<double>(b.frequency, a.frequency);
    return a.scale * b.scale * v;
}

double gram_entry(const VectorAtom& a, const VectorAtom& b) {
    return gram_entry(a.ch1, b.ch1) + gram_entry(a.ch2, b.ch2);
}

Eigen::MatrixXd build_gram(const std::vector<VectorAtom>& family) {
    const auto n = static_cast<Eigen::Index>(family.size());
    Eigen::MatrixXd g(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i; j < n; ++j) {
            double v = gram_entry(family[static_cast<std::size_t>(i)],
                                  family[static_cast<std::size_t>(j)]);
            g(i, j) = v;
            g(j, i) = v;
        }
    return g;
}

double HVector::inner(const VectorAtom& atom) const {
    double s = 0.0;
    for (std::size_t i = 0; i < family.size(); ++i)
        s += coeffs[static_cast<Eigen::Index>(i)] * gram_entry(family[i], atom);
    return s;
}

double HVector::inner(const HVector& other) const {
    double s = 0.0;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < other.family.size(); ++j)
            s += coeffs[static_cast<Eigen::Index>(i)] *
                 other.coeffs[static_cast<Eigen::Index>(j)] *
                 gram_entry(family[i], other.family[j]);
    return s;
}

double HVector::norm() const { return std::sqrt(std::max(0.0, inner(*this))); }

double HVector::eval_channel(int channel, double t) const {
    double s = 0.0;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const TrigAtom& a = channel == 1 ? family[i].ch1 : family[i].ch2;
        s += coeffs[static_cast<Eigen::Index>(i)] * a.eval(t);
    }
    return s;
}

std::complex<double> HVector::channel_moment(int channel, std::complex<double> rho,
                                             TrigKind against) const {
    std::complex<double> s = 0.0;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const TrigAtom& a = channel == 1 ? family[i].ch1 : family[i].ch2;
        if (a.scale == 0.0) continue;
        std::complex<double> f(a.frequency, 0.0);
        std::complex<double> v;
        if (against == TrigKind::cosine)
            v = (a.kind == TrigKind::cosine) ? trig_cc<std::complex<double>>(f, rho)
                                             : trig_sc<std::complex<double>>(f, rho);
        else
            v = (a.kind == TrigKind::sine) ? trig_ss<std::complex<double>>(f, rho)
                                           : trig_sc<std::complex<double>>(rho, f);
        s += coeffs[static_cast<Eigen::Index>(i)] * a.scale * v;
    }
    return s;
}

std::string HVector::to_json_string() const {
    nlohmann::json j;
    std::vector<double> c1, c2, freq;
    for (std::size_t i = 0; i < family.size(); ++i) {
        double c = coeffs[static_cast<Eigen::Index>(i)];
        c1.push_back(c * family[i].ch1.scale);
        c2.push_back(c * family[i].ch2.scale);
        freq.push_back(family[i].ch1.scale != 0.0 ? family[i].ch1.frequency
                                                  : family[i].ch2.frequency);
    }
    j["channel1_coeffs"] = c1;
    j["channel2_coeffs"] = c2;
    j["frequencies"] = freq;
    return j.dump(2);
}

RecoveryResult recover_from_coefficients(const std::vector<VectorAtom>& family,
                                         const Eigen::VectorXd& target_coeffs, double ridge) {
    if (family.empty()) throw config_error("recover_from_coefficients: empty family");
    if (static_cast<Eigen::Index>(family.size()) != target_coeffs.size())
        throw config_error("recover_from_coefficients: family/target size mismatch");

    Eigen::MatrixXd g = build_gram(family);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
    double emax = es.eigenvalues().maxCoeff();
    double emin = es.eigenvalues().minCoeff();

    RecoveryResult res;
    res.gram_cond = emax / std::max(emin, 1e-300);
    res.ridge_used = ridge;
    if (ridge == 0.0 && res.gram_cond > 1e10) {
        res.ridge_used = 1e-10 * g.trace() / static_cast<double>(family.size());
        res.ridge_auto = true;
    }

    Eigen::MatrixXd gr = g;
    if (res.ridge_used != 0.0)
        gr += res.ridge_used * Eigen::MatrixXd::Identity(g.rows(), g.cols());
    Eigen::VectorXd c = gr.ldlt().solve(target_coeffs);
    res.residual = (g * c - target_coeffs).norm();
    res.f = HVector{family, c};
    return res;
}

FrameBoundReport frame_bound_check(double beta, int trials, TrigKind channel, int half_range,
                                   unsigned seed, double slack) {
    if (!(beta > 0.0 && beta < 0.5))
        throw config_error("frame_bound_check: beta must lie in (0, 1/2)");
    const int nn = 2 * half_range + 1;
    std::vector<VectorAtom> family;
    family.reserve(static_cast<std::size_t>(nn));
    for (int n = -half_range; n <= half_range; ++n) {
        double f = n + beta;
        TrigAtom a;
        a.kind = channel;
        a.frequency = std::abs(f);
        // sin is odd in the frequency, cos is even
        a.scale = (channel == TrigKind::sine && f < 0.0) ? -1.0 : 1.0;
        VectorAtom va;
        va.ch1 = a;
        family.push_back(va);
    }
    Eigen::MatrixXd g = build_gram(family);

    FrameBoundReport rep;
    rep.trials = trials;
    rep.lower_bound = kPi * (1.0 - std::cos(2.0 * beta * kPi));
    rep.upper_bound = kPi * (1.0 + std::cos(2.0 * beta * kPi));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int t = 0; t < trials; ++t) {
        Eigen::VectorXd c(nn);
        for (int i = 0; i < nn; ++i) c[i] = uni(rng);
        double sum2 = c.squaredNorm();
        double norm2 = c.dot(g * c);
        rep.worst_low = std::min(rep.worst_low, norm2 - rep.lower_bound * sum2);
        rep.worst_high = std::max(rep.worst_high, norm2 - rep.upper_bound * sum2);
    }
    rep.pass = rep.worst_low >= -slack && rep.worst_high <= slack;
    return rep;
}

double hilbert_form_diag(double beta) {
    double tb = 2.0 * beta;
    if (std::abs(tb - std::llround(tb)) < 1e-12)
        throw config_error("hilbert_form_diag: 2*beta must not be an integer");
    const long long big = 1000000;
    double s = 0.0;
    for (long long n = big; n >= 1; --n) {
        double a = static_cast<double>(n) + tb;
        double b = -static_cast<double>(n) + tb;
        s += 1.0 / (a * a) + 1.0 / (b * b);
    }
    s += 1.0 / (tb * tb);
    // midpoint-rule tails over |n| > big
    double nb = static_cast<double>(big);
    s += 1.0 / (nb + 0.5 + tb) + 1.0 / (nb + 0.5 - tb);
    return s;
}

ModelBasis ModelBasis::build(double alpha, int n_max) {
    if (std::abs(std::cos(2.0 * alpha)) < 1e-12)
        throw config_error("model basis: tan(2 alpha) undefined at alpha = pi/4");
    ModelBasis mb;
    mb.alpha = alpha;
    mb.beta = alpha / kPi;
    double half_tan = 0.5 * std::tan(2.0 * alpha);
    for (int n = 1; n <= n_max; ++n) {
        double freqs[4] = {n - 1 + mb.beta, n - mb.beta, n - 0.5, static_cast<double>(n)};
        double scales[4] = {-half_tan, half_tan, 0.0, 0.0};
        for (int k = 1; k <= 4; ++k) {
            VectorAtom v;
            v.ch1 = {TrigKind::cosine, freqs[k - 1], scales[k - 1]};
            v.ch2 = {TrigKind::sine, freqs[k - 1], 1.0};
            mb.atoms.push_back(v);
            mb.indices.emplace_back(n, k);
        }
    }
    return mb;
}

const VectorAtom& ModelBasis::at(int n, int k) const {
    std::size_t idx = static_cast<std::size_t>((n - 1) * 4 + (k - 1));
    if (n < 1 || k < 1 || k > 4 || idx >= atoms.size())
        throw config_error("model basis: index out of range");
    return atoms[idx];
}

namespace {

// Merges duplicate atoms so that +g/-g pairs cancel structurally.
HVector consolidate(const HVector& v) {
    HVector out;
    std::vector<double> cs;
    auto same_atom = [](const TrigAtom& a, const TrigAtom& b) {
        return a.kind == b.kind && a.frequency == b.frequency && a.scale == b.scale;
    };
    for (std::size_t i = 0; i < v.family.size(); ++i) {
        bool merged = false;
        for (std::size_t j = 0; j < out.family.size(); ++j) {
            if (same_atom(v.family[i].ch1, out.family[j].ch1) &&
                same_atom(v.family[i].ch2, out.family[j].ch2)) {
                cs[j] += v.coeffs[static_cast<Eigen::Index>(i)];
                merged = true;
                break;
            }
        }
        if (!merged) {
            out.family.push_back(v.family[i]);
            cs.push_back(v.coeffs[static_cast<Eigen::Index>(i)]);
        }
    }
    out.coeffs = Eigen::Map<Eigen::VectorXd>(cs.data(), static_cast<Eigen::Index>(cs.size()));
    return out;
}

} // namespace

HVector apply_operator_A(const HVector& v, double alpha, int expansion_range, bool inverse) {
    if (std::abs(std::cos(2.0 * alpha)) < 1e-12 || std::abs(std::sin(2.0 * alpha)) < 1e-12)
        throw config_error("operator A: cot(2 alpha) / tan(2 alpha) undefined");
    double beta = alpha / kPi;
    if (expansion_range <= 0) {
        double fmax = 0.0;
        for (const auto& a : v.family)
            if (a.ch1.scale != 0.0) fmax = std::max(fmax, a.ch1.frequency);
        expansion_range = static_cast<int>(std::ceil(fmax)) + 2;
    }

    // Expand channel 1 in the cosine family {cos((n+beta) t)}.
    const int half = expansion_range;
    const int nn = 2 * half + 1;
    std::vector<VectorAtom> cos_family(static_cast<std::size_t>(nn));
    std::vector<double> freq_signed(static_cast<std::size_t>(nn));
    for (int n = -half; n <= half; ++n) {
        double f = n + beta;
        std::size_t i = static_cast<std::size_t>(n + half);
        freq_signed[i] = f;
        cos_family[i].ch1 = {TrigKind::cosine, std::abs(f), 1.0};
    }
    Eigen::MatrixXd g = build_gram(cos_family);
    Eigen::VectorXd t(nn);
    for (int i = 0; i < nn; ++i)
        t[i] = v.inner(cos_family[static_cast<std::size_t>(i)]);
    Eigen::VectorXd c = g.ldlt().solve(t);

    // Channel-1 energy must be captured by the truncated expansion.
    double ch1_norm2 = 0.0;
    for (std::size_t i = 0; i < v.family.size(); ++i)
        for (std::size_t j = 0; j < v.family.size(); ++j)
            ch1_norm2 += v.coeffs[static_cast<Eigen::Index>(i)] *
                         v.coeffs[static_cast<Eigen::Index>(j)] *
                         gram_entry(v.family[i].ch1, v.family[j].ch1);
    double captured = c.dot(t);
    if (std::abs(ch1_norm2 - captured) > 1e-8 * (1.0 + std::abs(ch1_norm2)))
        throw solver_error("operator A: channel-1 expansion failed (insufficient range)");

    double gain = 2.0 / std::tan(2.0 * alpha) * (inverse ? -1.0 : 1.0);
    HVector out;
    out.family = v.family;
    std::vector<double> cs(v.coeffs.data(), v.coeffs.data() + v.coeffs.size());
    for (int i = 0; i < nn; ++i) {
        double coeff = gain * c[i];
        if (coeff == 0.0) continue;
        double f = freq_signed[static_cast<std::size_t>(i)];
        VectorAtom va;
        va.ch2 = {TrigKind::sine, std::abs(f), f < 0.0 ? -1.0 : 1.0};
        out.family.push_back(va);
        cs.push_back(coeff);
    }
    out.coeffs = Eigen::Map<Eigen::VectorXd>(cs.data(), static_cast<Eigen::Index>(cs.size()));
    return consolidate(out);
}

OperatorARoundtrip operator_A_roundtrip(const HVector& v, double alpha) {
    HVector forward = apply_operator_A(v, alpha);
    HVector back = apply_operator_A(forward, alpha, 0, /*inverse=*/true);

    // ||back - v|| via a consolidated difference vector.
    HVector diff;
    diff.family = back.family;
    std::vector<double> cs(back.coeffs.data(), back.coeffs.data() + back.coeffs.size());
    for (std::size_t i = 0; i < v.family.size(); ++i) {
        diff.family.push_back(v.family[i]);
        cs.push_back(-v.coeffs[static_cast<Eigen::Index>(i)]);
    }
    diff.coeffs = Eigen::Map<Eigen::VectorXd>(cs.data(), static_cast<Eigen::Index>(cs.size()));
    diff = consolidate(diff);

    OperatorARoundtrip rt;
    rt.out = back;
    rt.roundtrip_error = diff.norm();
    return rt;
}

} // namespace starsl
