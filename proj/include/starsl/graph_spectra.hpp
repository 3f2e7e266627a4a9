#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "starsl/potential.hpp"
#include "starsl/sl_core.hpp"

namespace starsl {

/// Star graph with m edges of length pi. Edges 1..neumann_count carry the
/// quasi-derivative condition y^[1](0) = 0 (fundamental solution C), the
/// rest carry y(0) = 0 (fundamental solution S). neumann_count = p gives
/// problem L, p+1 gives problem L0.
struct StarProblem {
    int m = 0;
    int p = 0;
    int neumann_count = 0;
    std::vector<Potential> potentials; // edge j -> potentials[j-1]

    static StarProblem problem_L(int m, int p, std::vector<Potential> pots);
    static StarProblem problem_L0(int m, int p, std::vector<Potential> pots);

    void validate() const;
};

struct SpectrumEntry {
    int n = 0;
    int k = 0;
    double lambda = 0.0;
    double rho = 0.0; // sqrt(lambda) for lambda >= 0
};

/// Branch-labeled eigenvalue table. Branches follow the asymptotics
/// rho_{n1} = n-1+alpha/pi, rho_{n2} = n-alpha/pi, rho_{nk} = n-1/2 for
/// k in I3, rho_{nk} = n for k in I4, with the convention I3 = {3, 5, ...,
/// nc+2} and I4 = {4, nc+3, ..., m}.
struct SpectrumTable {
    int m = 0;
    int neumann_count = 0;
    double alpha = 0.0;
    std::vector<SpectrumEntry> entries;     // sorted by (k, n)
    std::vector<std::string> diagnostics;   // count mismatches, clusters, ...

    std::vector<SpectrumEntry> branch(int k) const;
    const SpectrumEntry* find(int n, int k) const;
    /// Entries with k <= k_max and n <= n_max, sorted by (k, n).
    std::vector<SpectrumEntry> take(int k_max, int n_max) const;

    std::string to_json_string() const;
    std::string to_csv_string() const;
    static SpectrumTable from_json_string(const std::string& text);
};

/// Shared per-problem evaluation cache: one EdgeIntegrator per edge.
class StarSolver {
public:
    explicit StarSolver(StarProblem prob, int steps = EdgeIntegrator::default_steps);

    const StarProblem& problem() const { return prob_; }
    int steps() const { return steps_; }
    bool edge_is_neumann(int j) const { return j <= prob_.neumann_count; }
    const EdgeIntegrator& edge(int j) const { return *edges_.at(static_cast<std::size_t>(j - 1)); }

    /// Boundary value of the edge-j factor entering the characteristic
    /// function: C_j(pi, lambda) for Neumann edges, S_j(pi, lambda) else.
    double factor_value(int j, double lambda) const;

    /// Characteristic function assembled from the per-edge fundamentals.
    double delta(double lambda) const;

    /// sum_j M_j(lambda); strictly increasing between its poles.
    double weyl_sum_all(double lambda) const;

private:
    StarProblem prob_;
    int steps_;
    std::vector<std::unique_ptr<EdgeIntegrator>> edges_;
};

double char_delta(const StarProblem& prob, double lambda,
                  int steps = EdgeIntegrator::default_steps);

/// Leading-order branch prediction for rho_{nk} (kappa_n = 0).
double asymptotic_prediction(int m, int neumann_count, int n, int k);

bool branch_in_I3(int k, int m, int neumann_count);

/// All zeros in lambda of C(pi, .) (neumann = true) or S(pi, .) for one
/// edge, for rho up to rho_max plus a scan of a negative-lambda margin.
std::vector<double> edge_factor_zeros(const EdgeIntegrator& edge, bool neumann,
                                      double rho_max, double lambda_floor = -6.0);

/// Eigenvalue table for rho in (0, n_max + 1/2]. Roots are bracketed
/// between consecutive per-edge factor zeros, where the Weyl sum crosses
/// zero exactly once; coincident factor zeros of multiplicity nu
/// contribute nu-1 eigenvalues at that point. Inconsistencies with the
/// asymptotic ledger are recorded in the table diagnostics, not repaired.
SpectrumTable find_eigenvalues(const StarProblem& prob, int n_max,
                               int steps = EdgeIntegrator::default_steps);
SpectrumTable find_eigenvalues(const StarSolver& solver, int n_max);

/// Per-assumption outcome of the checks (A1)-(A5).
struct AssumptionReport {
    struct Item {
        bool pass = false;
        double margin = 0.0;
        std::string detail;
    };
    Item a1, a2, a3, a4, a5;

    bool all_pass() const { return a1.pass && a2.pass && a3.pass && a4.pass && a5.pass; }
    std::string summary() const;
};

/// Checks (A1)-(A5) for the supplied problems and spectra; margins are
/// scale-normalized worst cases. Reporting only: never throws on failure.
AssumptionReport verify_assumptions(const StarProblem& probL, const StarProblem& probL0,
                                    const SpectrumTable& specL, const SpectrumTable& specL0,
                                    int steps = EdgeIntegrator::default_steps,
                                    double threshold = 1e-6);

} // namespace starsl
