#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "starsl/graph_spectra.hpp"
#include "starsl/potential.hpp"
#include "starsl/sl_core.hpp"

namespace starsl {

enum class WeylType { neumann, dirichlet };

/// Index map keyed by (n, k).
using NkMap = std::map<std::pair<int, int>, double>;

/// Weyl function of one edge: -C^[1]/C (neumann) or -S^[1]/S (dirichlet).
/// Throws pole_error when the denominator is below the pole tolerance
/// |den| < 1e-10 (1 + |num|).
double weyl_m(const EdgeIntegrator& edge, double lambda, WeylType type);
double weyl_m(const Potential& p, double lambda, WeylType type,
              int steps = EdgeIntegrator::default_steps);

/// The known data of the partial inverse problem: potentials on the edges
/// {2..m} \ {p+1}. Edges 2..p are neumann-type, p+2..m dirichlet-type.
struct KnownPotentials {
    int m = 0;
    int p = 0;
    std::map<int, Potential> potentials;

    void validate() const;
    static KnownPotentials from_star(const StarProblem& prob);
};

/// Cached integrators for the known edges.
class KnownEdgeSolver {
public:
    explicit KnownEdgeSolver(KnownPotentials kp, int steps = EdgeIntegrator::default_steps);

    const KnownPotentials& data() const { return kp_; }
    int steps() const { return steps_; }

    /// -sum over known edges of M_j(lambda). At eigenvalues of L this is
    /// g = M_1 + M_{p+1}; at eigenvalues of L0 it is hN = M_1 + M^N_{p+1}.
    double known_sum(double lambda) const;

private:
    KnownPotentials kp_;
    int steps_;
    std::map<int, std::unique_ptr<EdgeIntegrator>> edges_;
};

/// g_nk = -sum_{j known} M_j(lambda_nk) for entries with k <= k_max,
/// n <= n_max. Throws pole_error on an (A1) violation and
/// assumption_error when some |g_nk| is below tolerance ((A4) violation).
NkMap weyl_sum_g(const KnownEdgeSolver& known, const SpectrumTable& specL, int k_max = 4,
                 int n_max = 1 << 30);

/// (D1, D2) of the two unknown edges:
/// D1 = -(C_1^[1] S_{p+1} + C_1 S_{p+1}^[1]), D2 = C_1 S_{p+1} at x = pi.
std::pair<double, double> d_functions(const EdgeIntegrator& edge1,
                                      const EdgeIntegrator& edge_p1, double lambda);
std::pair<double, double> d_functions(const Potential& sigma1, const Potential& sigma_p1,
                                      double lambda, int steps = EdgeIntegrator::default_steps);

/// hN_nk from the known edges and h_nk = sumM1Mp1(mu_nk) for entries with
/// k <= k_max, n <= n_max of the L0 table. Throws pole_error on an (A2)
/// violation and assumption_error when hN_nk == h_nk within tolerance.
std::pair<NkMap, NkMap> weyl_sums_h(const KnownEdgeSolver& known, const SpectrumTable& specL0,
                                    const std::function<double(double)>& sumM1Mp1,
                                    int k_max = 2, int n_max = 1 << 30);

/// Weyl samples of one run, serializable as JSON maps keyed "n:k".
struct WeylSamples {
    NkMap g;
    NkMap hN;
    NkMap h;

    std::string to_json_string() const;
};

} // namespace starsl
