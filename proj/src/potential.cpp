#include "starsl/potential.hpp"

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "starsl/errors.hpp"

namespace starsl {

namespace {
constexpr double kPi = std::numbers::pi;
}

Potential Potential::fourier(std::vector<double> cos_coeffs) {
    for (double a : cos_coeffs)
        if (!std::isfinite(a)) throw config_error("potential: non-finite cosine coefficient");
    Potential p;
    p.is_fourier_ = true;
    p.fourier_ = std::move(cos_coeffs);
    return p;
}

Potential Potential::steps(std::vector<std::pair<double, double>> breaks) {
    if (breaks.empty()) throw config_error("potential: empty step list");
    double prev = 0.0;
    for (auto& [x, v] : breaks) {
        if (!std::isfinite(x) || !std::isfinite(v))
            throw config_error("potential: non-finite step entry");
        if (x <= prev) throw config_error("potential: breakpoints must be strictly increasing");
        prev = x;
    }
    if (std::abs(breaks.back().first - kPi) > 1e-12)
        throw config_error("potential: last breakpoint must be pi");
    breaks.back().first = kPi;
    Potential p;
    p.is_fourier_ = false;
    p.steps_ = std::move(breaks);
    return p;
}

Potential Potential::constant(double value) {
    return steps({{kPi, value}});
}

double Potential::eval(double x) const {
    if (is_fourier_) {
        double s = 0.0;
        for (std::size_t r = 0; r < fourier_.size(); ++r)
            s += fourier_[r] * std::cos(static_cast<double>(r) * x);
        return s;
    }
    for (const auto& [bp, v] : steps_)
        if (x < bp) return v;
    return steps_.back().second; // x == pi
}

double Potential::l2_norm() const {
    if (is_fourier_) {
        // ||a0 + sum a_r cos(r x)||^2 on (0, pi) = pi a0^2 + (pi/2) sum a_r^2
        double s = 0.0;
        for (std::size_t r = 0; r < fourier_.size(); ++r)
            s += fourier_[r] * fourier_[r] * (r == 0 ? kPi : kPi / 2.0);
        return std::sqrt(s);
    }
    double s = 0.0, prev = 0.0;
    for (const auto& [bp, v] : steps_) {
        s += v * v * (bp - prev);
        prev = bp;
    }
    return std::sqrt(s);
}

double eval_sigma(const Potential& p, double x) {
    if (!(x >= 0.0 && x <= kPi)) throw config_error("eval_sigma: x outside [0, pi]");
    return p.eval(x);
}

std::string Potential::to_json_string() const {
    nlohmann::json j;
    if (is_fourier_) {
        j["fourier_cos"] = fourier_;
    } else {
        auto arr = nlohmann::json::array();
        for (const auto& [x, v] : steps_) arr.push_back({x, v});
        j["steps"] = arr;
    }
    return j.dump();
}

Potential Potential::from_json_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("potential: bad JSON: ") + e.what());
    }
    if (j.contains("fourier_cos")) {
        if (j.contains("steps"))
            throw config_error("potential: exactly one representation must be active");
        return fourier(j["fourier_cos"].get<std::vector<double>>());
    }
    if (j.contains("steps")) {
        std::vector<std::pair<double, double>> br;
        for (const auto& e : j["steps"]) {
            if (!e.is_array() || e.size() != 2)
                throw config_error("potential: each step must be [breakpoint, value]");
            br.emplace_back(e[0].get<double>(), e[1].get<double>());
        }
        return steps(std::move(br));
    }
    throw config_error("potential: expected 'fourier_cos' or 'steps'");
}

} // namespace starsl
