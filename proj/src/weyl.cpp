#include "starsl/weyl.hpp"

#include <cmath>

#include <json.hpp>

#include "starsl/errors.hpp"

namespace starsl {

namespace {

double ratio_or_pole(double num, double den, const std::string& what) {
    if (std::abs(den) < 1e-10 * (1.0 + std::abs(num)))
        throw pole_error(what + ": denominator below pole tolerance");
    return -num / den;
}

nlohmann::json nkmap_to_json(const NkMap& m) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [key, v] : m)
        j[std::to_string(key.first) + ":" + std::to_string(key.second)] = v;
    return j;
}

} // namespace

double weyl_m(const EdgeIntegrator& edge, double lambda, WeylType type) {
    QuasiState init = (type == WeylType::neumann) ? QuasiState{1.0, 0.0} : QuasiState{0.0, 1.0};
    QuasiState st = edge.propagate(lambda, init);
    return ratio_or_pole(st.y1, st.y, "weyl_m");
}

double weyl_m(const Potential& p, double lambda, WeylType type, int steps) {
    return weyl_m(EdgeIntegrator(p, steps), lambda, type);
}

void KnownPotentials::validate() const {
    if (m < 4 || p < 2 || p > m - 2)
        throw config_error("known potentials: need m >= 4 and 2 <= p <= m-2");
    for (int j = 2; j <= m; ++j) {
        if (j == p + 1) continue;
        if (!potentials.count(j))
            throw config_error("known potentials: missing edge " + std::to_string(j));
    }
    for (const auto& [j, pot] : potentials) {
        (void)pot;
        if (j < 2 || j > m || j == p + 1)
            throw config_error("known potentials: unexpected edge " + std::to_string(j));
    }
}

KnownPotentials KnownPotentials::from_star(const StarProblem& prob) {
    KnownPotentials kp;
    kp.m = prob.m;
    kp.p = prob.p;
    for (int j = 2; j <= prob.m; ++j) {
        if (j == prob.p + 1) continue;
        kp.potentials.emplace(j, prob.potentials[static_cast<std::size_t>(j - 1)]);
    }
    kp.validate();
    return kp;
}

KnownEdgeSolver::KnownEdgeSolver(KnownPotentials kp, int steps)
    : kp_(std::move(kp)), steps_(steps) {
    kp_.validate();
    for (const auto& [j, pot] : kp_.potentials)
        edges_.emplace(j, std::make_unique<EdgeIntegrator>(pot, steps));
}

double KnownEdgeSolver::known_sum(double lambda) const {
    double s = 0.0;
    for (const auto& [j, edge] : edges_) {
        WeylType type = (j <= kp_.p) ? WeylType::neumann : WeylType::dirichlet;
        s += weyl_m(*edge, lambda, type);
    }
    return -s;
}

NkMap weyl_sum_g(const KnownEdgeSolver& known, const SpectrumTable& specL, int k_max,
                 int n_max) {
    NkMap g;
    for (const auto& e : specL.take(k_max, n_max)) {
        double v;
        try {
            v = known.known_sum(e.lambda);
        } catch (const pole_error&) {
            throw pole_error("weyl_sum_g: pole of a known Weyl function at lambda_{" +
                             std::to_string(e.n) + "," + std::to_string(e.k) +
                             "} ((A1) violation)");
        }
        if (std::abs(v) < 1e-8 * std::max(1.0, e.rho))
            throw assumption_error("weyl_sum_g: g_{" + std::to_string(e.n) + "," +
                                   std::to_string(e.k) + "} vanishes ((A4) violation)");
        g[{e.n, e.k}] = v;
    }
    return g;
}

std::pair<double, double> d_functions(const EdgeIntegrator& edge1,
                                      const EdgeIntegrator& edge_p1, double lambda) {
    QuasiState c = edge1.propagate(lambda, {1.0, 0.0});
    QuasiState s = edge_p1.propagate(lambda, {0.0, 1.0});
    double d1 = -(c.y1 * s.y + c.y * s.y1);
    double d2 = c.y * s.y;
    return {d1, d2};
}

std::pair<double, double> d_functions(const Potential& sigma1, const Potential& sigma_p1,
                                      double lambda, int steps) {
    return d_functions(EdgeIntegrator(sigma1, steps), EdgeIntegrator(sigma_p1, steps), lambda);
}

std::pair<NkMap, NkMap> weyl_sums_h(const KnownEdgeSolver& known, const SpectrumTable& specL0,
                                    const std::function<double(double)>& sumM1Mp1, int k_max,
                                    int n_max) {
    NkMap hN, h;
    for (const auto& e : specL0.take(k_max, n_max)) {
        double vN;
        try {
            vN = known.known_sum(e.lambda);
        } catch (const pole_error&) {
            throw pole_error("weyl_sums_h: pole of a known Weyl function at mu_{" +
                             std::to_string(e.n) + "," + std::to_string(e.k) +
                             "} ((A2) violation)");
        }
        double v = sumM1Mp1(e.lambda);
        if (std::abs(vN - v) < 1e-10 * (1.0 + std::abs(vN) + std::abs(v)))
            throw assumption_error("weyl_sums_h: hN equals h at mu_{" + std::to_string(e.n) +
                                   "," + std::to_string(e.k) + "}");
        hN[{e.n, e.k}] = vN;
        h[{e.n, e.k}] = v;
    }
    return {hN, h};
}

std::string WeylSamples::to_json_string() const {
    nlohmann::json j;
    j["g"] = nkmap_to_json(g);
    j["hN"] = nkmap_to_json(hN);
    j["h"] = nkmap_to_json(h);
    return j.dump(2);
}

} // namespace starsl
