#include <cmath>
#include <limits>
#include <sstream>

#include "starsl/graph_spectra.hpp"
#include "starsl/weyl.hpp"

namespace starsl {

namespace {

struct Worst {
    double margin = std::numeric_limits<double>::infinity();
    std::string where;

    void update(double v, const std::string& w) {
        if (v < margin) {
            margin = v;
            where = w;
        }
    }
};

std::string at(const char* sym, const SpectrumEntry& e, int j = 0) {
    std::ostringstream os;
    os << sym << "_{" << e.n << "," << e.k << "}";
    if (j) os << " edge " << j;
    return os.str();
}

void positivity_and_gaps(const std::vector<SpectrumEntry>& entries, Worst& w) {
    std::vector<double> rho;
    for (const auto& e : entries) {
        w.update(e.lambda / (1.0 + std::abs(e.lambda)), "positivity at n=" + std::to_string(e.n) +
                                                            ",k=" + std::to_string(e.k));
        rho.push_back(std::sqrt(std::max(e.lambda, 0.0)));
    }
    std::sort(rho.begin(), rho.end());
    for (std::size_t i = 1; i < rho.size(); ++i)
        w.update(rho[i] - rho[i - 1], "gap near rho=" + std::to_string(rho[i]));
}

} // namespace

AssumptionReport verify_assumptions(const StarProblem& probL, const StarProblem& probL0,
                                    const SpectrumTable& specL, const SpectrumTable& specL0,
                                    int steps, double threshold) {
    const int m = probL.m, p = probL.p;
    StarSolver solL(probL, steps);
    StarSolver solL0(probL0, steps);
    KnownEdgeSolver known(KnownPotentials::from_star(probL), steps);

    AssumptionReport rep;
    const auto entriesL = specL.take(4, 1 << 30);
    const auto entriesL0 = specL0.take(2, 1 << 30);

    // (A1): C_j(pi, lambda_nk) != 0 for j = 1..p, S_j != 0 for j = p+1..m.
    {
        Worst w;
        for (const auto& e : entriesL)
            for (int j = 1; j <= m; ++j) {
                double v = solL.factor_value(j, e.lambda);
                double mg = (j <= p) ? std::abs(v) : std::abs(v) * (1.0 + e.rho);
                w.update(mg, at(j <= p ? "C" : "S", e, j));
            }
        rep.a1 = {w.margin > threshold, w.margin, w.where};
    }

    // (A2): C_j(pi, mu_nk) != 0 for j = 1..p+1, S_j != 0 for j = p+1..m.
    {
        Worst w;
        for (const auto& e : entriesL0) {
            for (int j = 1; j <= p + 1; ++j)
                w.update(std::abs(solL0.factor_value(j, e.lambda)), at("C", e, j));
            for (int j = p + 1; j <= m; ++j)
                w.update(std::abs(solL.factor_value(j, e.lambda)) * (1.0 + e.rho),
                         at("S", e, j));
        }
        rep.a2 = {w.margin > threshold, w.margin, w.where};
    }

    // (A3): lambda_nk distinct and positive.
    {
        Worst w;
        positivity_and_gaps(entriesL, w);
        for (const auto& d : specL.diagnostics)
            if (d.find("multiple eigenvalue") != std::string::npos) w.update(0.0, d);
        rep.a3 = {w.margin > threshold, w.margin, w.where};
    }

    // (A4): g_nk != 0.
    {
        Worst w;
        for (const auto& e : entriesL) {
            double g;
            try {
                g = known.known_sum(e.lambda);
            } catch (const pole_error&) {
                w.update(0.0, at("g", e) + " (pole)");
                continue;
            }
            w.update(std::abs(g) / std::max(1.0, e.rho), at("g", e));
        }
        rep.a4 = {w.margin > threshold, w.margin, w.where};
    }

    // (A5): mu_nk distinct and positive.
    {
        Worst w;
        positivity_and_gaps(entriesL0, w);
        rep.a5 = {w.margin > threshold, w.margin, w.where};
    }
    return rep;
}

} // namespace starsl
