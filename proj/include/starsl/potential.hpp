#pragma once

#include <string>
#include <utility>
#include <vector>

namespace starsl {

/// A real potential sigma in L2(0, pi), in one of two representations:
/// a truncated cosine series sum_r a_r cos(r x), or a piecewise-constant
/// step function given by (breakpoint, value) pairs. The value of a pair
/// applies on [previous breakpoint, breakpoint); the last breakpoint must
/// be pi.
class Potential {
public:
    /// Zero potential (empty cosine series).
    Potential() = default;

    static Potential fourier(std::vector<double> cos_coeffs);
    static Potential steps(std::vector<std::pair<double, double>> breaks);
    static Potential constant(double value);

    bool is_fourier() const noexcept { return is_fourier_; }
    const std::vector<double>& fourier_cos_coeffs() const { return fourier_; }
    const std::vector<std::pair<double, double>>& step_samples() const { return steps_; }

    /// Value of the active representation at x in [0, pi].
    double eval(double x) const;

    /// L2(0, pi) norm, closed form for either representation.
    double l2_norm() const;

    std::string to_json_string() const;
    static Potential from_json_string(const std::string& text);

private:
    bool is_fourier_ = true;
    std::vector<double> fourier_;
    std::vector<std::pair<double, double>> steps_;
};

/// Free-function form of Potential::eval with domain checking.
double eval_sigma(const Potential& p, double x);

} // namespace starsl
