#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "starsl/trig.hpp"

namespace starsl {

enum class TrigKind { cosine, sine };

/// One scaled wave on [0, 2*pi]: scale * cos(freq t) or scale * sin(freq t).
/// scale = 0 denotes the absent channel of a vector atom.
struct TrigAtom {
    TrigKind kind = TrigKind::cosine;
    double frequency = 0.0;
    double scale = 0.0;

    double eval(double t) const;
};

/// Element of H = L2(0,2pi) + L2(0,2pi): one atom per channel.
struct VectorAtom {
    TrigAtom ch1;
    TrigAtom ch2;
};

/// v_nk(t) = [ (rho/g) cos(rho t) ; sin(rho t) ].
VectorAtom make_v_atom(double rho, double g);
/// Channel-2-only sine atom [0 ; sin(rho t)].
VectorAtom make_sine_atom(double rho);

/// Exact L2(0,2pi) inner product of two atoms (0 if channels differ in kind
/// only through the closed forms; scales included).
double gram_entry(const TrigAtom& a, const TrigAtom& b);
/// H inner product of two vector atoms.
double gram_entry(const VectorAtom& a, const VectorAtom& b);

Eigen::MatrixXd build_gram(const std::vector<VectorAtom>& family);

/// Element of span(family) with the given coefficients.
struct HVector {
    std::vector<VectorAtom> family;
    Eigen::VectorXd coeffs;

    double inner(const VectorAtom& atom) const;
    double inner(const HVector& other) const;
    double norm() const;
    /// Pointwise value of channel 1 or 2 at t.
    double eval_channel(int channel, double t) const;

    /// integral of the channel function against cos(rho t) (TrigKind::cosine)
    /// or sin(rho t) over [0, 2*pi]; valid for complex rho.
    std::complex<double> channel_moment(int channel, std::complex<double> rho,
                                        TrigKind against) const;

    std::string to_json_string() const;
};

struct RecoveryResult {
    HVector f;
    double gram_cond = 0.0;
    double residual = 0.0;   // ||G c - targets|| against the unridged Gram
    double ridge_used = 0.0;
    bool ridge_auto = false; // ridge enabled because cond > 1e10
};

/// Minimum-norm element of span(family) whose inner products with the
/// family equal target_coeffs: solves (G + ridge I) c = targets. With
/// ridge = 0 and Gram condition above 1e10 a ridge of 1e-10 trace(G)/dim
/// is enabled automatically and flagged in the result.
RecoveryResult recover_from_coefficients(const std::vector<VectorAtom>& family,
                                         const Eigen::VectorXd& target_coeffs,
                                         double ridge = 0.0);

/// Frame-bound check for {sin (n+beta) t} or {cos (n+beta) t}, n in [-N, N]:
/// exact-Gram norm^2 of random combinations against
/// pi (1 -+ cos 2 beta pi) sum c_n^2.
struct FrameBoundReport {
    bool pass = false;
    int trials = 0;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    double worst_low = 0.0;  // most negative (norm^2 - lower*sum)
    double worst_high = 0.0; // most positive (norm^2 - upper*sum)
};
FrameBoundReport frame_bound_check(double beta, int trials, TrigKind channel, int half_range = 15,
                                   unsigned seed = 20240901, double slack = 1e-8);

/// Truncated sum over |n| <= 10^6 of (n+2 beta)^-2 plus integral tail;
/// equals pi^2 / sin^2(2 beta pi).
double hilbert_form_diag(double beta);

/// The model family v0_nk of the Riesz analysis: frequencies n-1+beta,
/// n-beta, n-1/2, n with cos-channel scales -tan(2 alpha)/2, +tan(2 alpha)/2,
/// 0, 0; beta = alpha/pi.
struct ModelBasis {
    double alpha = 0.0;
    double beta = 0.0;
    std::vector<VectorAtom> atoms;             // ordered n = 1..N, k = 1..4
    std::vector<std::pair<int, int>> indices;  // (n, k) per atom

    static ModelBasis build(double alpha, int n_max);
    const VectorAtom& at(int n, int k) const;
};

/// The operator A of the model-basis analysis: leaves channel 1, adds to
/// channel 2 the function g = 2 cot(2 alpha) sum c_n sin((n+beta) t) where
/// c_n expand channel 1 in {cos((n+beta) t)}_{|n| <= expansion_range}.
HVector apply_operator_A(const HVector& v, double alpha, int expansion_range = 0,
                         bool inverse = false);

struct OperatorARoundtrip {
    HVector out;
    double roundtrip_error = 0.0; // ||A^-1(A v) - v||_H
};
/// Applies A then A^-1; the input must be expandable in the cosine family.
OperatorARoundtrip operator_A_roundtrip(const HVector& v, double alpha);

} // namespace starsl
