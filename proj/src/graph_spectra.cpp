#include "starsl/graph_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "starsl/errors.hpp"
#include "starsl/rootscan.hpp"

namespace starsl {

namespace {
constexpr double kPi = std::numbers::pi;

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(15);
    os << x;
    return os.str();
}
} // namespace

// ---------------------------------------------------------------- problems

StarProblem StarProblem::problem_L(int m, int p, std::vector<Potential> pots) {
    StarProblem prob{m, p, p, std::move(pots)};
    prob.validate();
    return prob;
}

StarProblem StarProblem::problem_L0(int m, int p, std::vector<Potential> pots) {
    StarProblem prob{m, p, p + 1, std::move(pots)};
    prob.validate();
    return prob;
}

void StarProblem::validate() const {
    if (m < 4) throw config_error("star problem: m must be >= 4");
    if (p < 2 || p > m - 2) throw config_error("star problem: need 2 <= p <= m-2");
    if (neumann_count != p && neumann_count != p + 1)
        throw config_error("star problem: neumann_count must be p or p+1");
    if (static_cast<int>(potentials.size()) != m)
        throw config_error("star problem: need exactly m potentials");
}

// ------------------------------------------------------------------ table

std::vector<SpectrumEntry> SpectrumTable::branch(int k) const {
    std::vector<SpectrumEntry> out;
    for (const auto& e : entries)
        if (e.k == k) out.push_back(e);
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.n < b.n; });
    return out;
}

const SpectrumEntry* SpectrumTable::find(int n, int k) const {
    for (const auto& e : entries)
        if (e.n == n && e.k == k) return &e;
    return nullptr;
}

std::vector<SpectrumEntry> SpectrumTable::take(int k_max, int n_max) const {
    std::vector<SpectrumEntry> out;
    for (const auto& e : entries)
        if (e.k <= k_max && e.n <= n_max) out.push_back(e);
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) {
        return a.k != b.k ? a.k < b.k : a.n < b.n;
    });
    return out;
}

std::string SpectrumTable::to_json_string() const {
    auto arr = nlohmann::json::array();
    for (const auto& e : entries)
        arr.push_back({{"n", e.n}, {"k", e.k}, {"lambda", e.lambda}, {"rho", e.rho}});
    return arr.dump(2);
}

std::string SpectrumTable::to_csv_string() const {
    std::ostringstream os;
    os << "n,k,lambda,rho\n";
    os.precision(15);
    for (const auto& e : entries)
        os << e.n << "," << e.k << "," << e.lambda << "," << e.rho << "\n";
    return os.str();
}

SpectrumTable SpectrumTable::from_json_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("spectrum table: bad JSON: ") + e.what());
    }
    if (!j.is_array()) throw config_error("spectrum table: expected a JSON array");
    SpectrumTable t;
    for (const auto& e : j) {
        SpectrumEntry se;
        se.n = e.at("n").get<int>();
        se.k = e.at("k").get<int>();
        se.lambda = e.at("lambda").get<double>();
        se.rho = e.contains("rho") ? e.at("rho").get<double>()
                                   : std::sqrt(std::max(0.0, se.lambda));
        t.entries.push_back(se);
    }
    std::sort(t.entries.begin(), t.entries.end(), [](auto& a, auto& b) {
        return a.k != b.k ? a.k < b.k : a.n < b.n;
    });
    return t;
}

// ----------------------------------------------------------------- solver

StarSolver::StarSolver(StarProblem prob, int steps) : prob_(std::move(prob)), steps_(steps) {
    prob_.validate();
    edges_.reserve(static_cast<std::size_t>(prob_.m));
    for (const auto& pot : prob_.potentials)
        edges_.push_back(std::make_unique<EdgeIntegrator>(pot, steps));
}

double StarSolver::factor_value(int j, double lambda) const {
    QuasiState init = edge_is_neumann(j) ? QuasiState{1.0, 0.0} : QuasiState{0.0, 1.0};
    return edge(j).propagate(lambda, init).y;
}

double StarSolver::delta(double lambda) const {
    const int m = prob_.m;
    std::vector<double> v(static_cast<std::size_t>(m)), d(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) {
        QuasiState init = edge_is_neumann(j) ? QuasiState{1.0, 0.0} : QuasiState{0.0, 1.0};
        QuasiState st = edge(j).propagate(lambda, init);
        v[static_cast<std::size_t>(j - 1)] = st.y;
        d[static_cast<std::size_t>(j - 1)] = st.y1;
    }
    double total = 0.0;
    for (int j = 0; j < m; ++j) {
        double term = d[static_cast<std::size_t>(j)];
        for (int i = 0; i < m; ++i)
            if (i != j) term *= v[static_cast<std::size_t>(i)];
        total += term;
    }
    return total;
}

double StarSolver::weyl_sum_all(double lambda) const {
    double s = 0.0;
    for (int j = 1; j <= prob_.m; ++j) {
        QuasiState init = edge_is_neumann(j) ? QuasiState{1.0, 0.0} : QuasiState{0.0, 1.0};
        QuasiState st = edge(j).propagate(lambda, init);
        s += -st.y1 / st.y;
    }
    return s;
}

double char_delta(const StarProblem& prob, double lambda, int steps) {
    return StarSolver(prob, steps).delta(lambda);
}

// ------------------------------------------------------------- asymptotes

bool branch_in_I3(int k, int m, int neumann_count) {
    if (k < 3 || k > m) throw config_error("branch_in_I3: k out of range");
    int need3 = neumann_count - 1;
    int need4 = m - neumann_count - 1;
    std::vector<int> i3;
    for (int kk = 3; kk <= m; ++kk) {
        if (kk == 3 && need3 > 0) { i3.push_back(kk); continue; }
        if (kk == 4 && need4 > 0) continue;
        if (static_cast<int>(i3.size()) < need3) i3.push_back(kk);
    }
    return std::find(i3.begin(), i3.end(), k) != i3.end();
}

double asymptotic_prediction(int m, int neumann_count, int n, int k) {
    if (n < 1) throw config_error("asymptotic_prediction: n must be >= 1");
    if (k < 1 || k > m) throw config_error("asymptotic_prediction: invalid branch index");
    double beta = std::acos(std::sqrt(static_cast<double>(neumann_count) / m)) / kPi;
    if (k == 1) return n - 1 + beta;
    if (k == 2) return n - beta;
    return branch_in_I3(k, m, neumann_count) ? n - 0.5 : static_cast<double>(n);
}

// --------------------------------------------------------- factor zeros

std::vector<double> edge_factor_zeros(const EdgeIntegrator& edge, bool neumann,
                                      double rho_max, double lambda_floor) {
    QuasiState init = neumann ? QuasiState{1.0, 0.0} : QuasiState{0.0, 1.0};
    auto value_l = [&](double lambda) { return edge.propagate(lambda, init).y; };
    auto value_r = [&](double rho) { return value_l(rho * rho); };

    std::vector<double> zeros;
    // Negative-lambda margin: the factor is non-oscillatory there, a
    // coarse grid suffices.
    const double lo_end = 0.05 * 0.05;
    for (double z : find_roots_scan(value_l, lambda_floor, lo_end, (lo_end - lambda_floor) / 128.0))
        zeros.push_back(z);
    for (double r : find_roots_scan(value_r, 0.05, rho_max, 1.0 / 16.0))
        zeros.push_back(r * r);
    std::sort(zeros.begin(), zeros.end());
    return zeros;
}

// ----------------------------------------------------------- eigenvalues

namespace {

double rho_gap(double la, double lb) {
    // gap in rho units between two lambda values (lambda >= 0 expected)
    double ra = std::sqrt(std::max(la, 0.0));
    double rb = std::sqrt(std::max(lb, 0.0));
    double g = std::abs(rb - ra);
    return (la <= 0.0 || lb <= 0.0) ? std::abs(lb - la) : g;
}

struct MergedPole {
    double lambda;
    int mult;
};

} // namespace

SpectrumTable find_eigenvalues(const StarSolver& solver, int n_max) {
    const StarProblem& prob = solver.problem();
    if (n_max < 1) throw config_error("find_eigenvalues: n_max must be >= 1");

    SpectrumTable table;
    table.m = prob.m;
    table.neumann_count = prob.neumann_count;
    table.alpha = std::acos(std::sqrt(static_cast<double>(prob.neumann_count) / prob.m));
    const double beta = table.alpha / kPi;

    const double rho_start = 0.05;
    const double rho_end = n_max + 0.5;
    const double lambda_start = rho_start * rho_start;
    const double lambda_top = (rho_end + 0.75) * (rho_end + 0.75);

    // Zeros of the per-edge factors C_j / S_j: the poles of sum_j M_j.
    std::vector<double> poles;
    for (int j = 1; j <= prob.m; ++j)
        for (double z : edge_factor_zeros(solver.edge(j), solver.edge_is_neumann(j),
                                          rho_end + 0.75))
            if (z > lambda_start) poles.push_back(z);
    std::sort(poles.begin(), poles.end());

    const double merge_tol = 1e-8;   // rho units
    const double cluster_tol = 1e-7; // rho units
    std::vector<MergedPole> merged;
    for (double z : poles) {
        if (!merged.empty() && rho_gap(merged.back().lambda, z) < merge_tol) {
            MergedPole& mp = merged.back();
            mp.lambda = (mp.lambda * mp.mult + z) / (mp.mult + 1);
            mp.mult += 1;
        } else {
            if (!merged.empty() && rho_gap(merged.back().lambda, z) < cluster_tol)
                table.diagnostics.push_back("near-degenerate factor-zero cluster at lambda=" +
                                            fmt(z));
            merged.push_back({z, 1});
        }
    }

    std::vector<double> roots;

    // Coincident factor zeros of multiplicity nu carry nu-1 eigenvalues.
    for (const auto& mp : merged) {
        for (int c = 1; c < mp.mult; ++c) roots.push_back(mp.lambda);
        if (mp.mult >= 3)
            table.diagnostics.push_back("multiple eigenvalue (multiplicity " +
                                        std::to_string(mp.mult - 1) + ") at lambda=" +
                                        fmt(mp.lambda));
    }

    // Between consecutive poles the Weyl sum increases from -inf to +inf
    // and crosses zero exactly once.
    auto wsum = [&](double lambda) { return solver.weyl_sum_all(lambda); };
    std::vector<std::pair<double, double>> intervals;
    double lo = lambda_start;
    for (const auto& mp : merged) {
        intervals.emplace_back(lo, mp.lambda);
        lo = mp.lambda;
    }
    intervals.emplace_back(lo, lambda_top);

    for (std::size_t ii = 0; ii < intervals.size(); ++ii) {
        auto [a, b] = intervals[ii];
        if (!(b > a)) continue;
        const bool first = (ii == 0);
        const bool last = (ii + 1 == intervals.size());
        const double g = b - a;

        double fa = 0.0, fb = 0.0, ax = a, bx = b;
        bool ok_a = false, ok_b = false;
        for (double frac : {1e-4, 1e-7, 1e-10, 1e-13}) {
            if (!ok_a) {
                ax = a + (first ? 0.0 : frac * g);
                fa = wsum(ax);
                ok_a = fa < 0.0;
                if (first) break;
            } else {
                break;
            }
        }
        for (double frac : {1e-4, 1e-7, 1e-10, 1e-13}) {
            if (!ok_b) {
                bx = b - (last ? 0.0 : frac * g);
                fb = wsum(bx);
                ok_b = fb > 0.0;
                if (last) break;
            } else {
                break;
            }
        }
        if (first && !ok_a) {
            // The zero of the Weyl sum on this interval lies below the
            // scan start; it is not part of the requested range.
            if (fa > 0.0)
                table.diagnostics.push_back("possible eigenvalue below rho=0.05");
            continue;
        }
        if (last && !ok_b) continue; // zero lies beyond the top margin
        if (!ok_a || !ok_b) {
            table.diagnostics.push_back("unresolved root near factor zero at lambda=" +
                                        fmt(ok_a ? b : a));
            continue;
        }
        double xtol = 2e-12 * std::max(1.0, std::sqrt(std::max(b, 1.0)));
        roots.push_back(refine_root(wsum, ax, bx, xtol));
    }

    // lambda = 0 is outside the scan; report if it looks like a root.
    {
        double d0 = solver.delta(0.0);
        double scale = std::max(std::abs(solver.delta(0.01)), std::abs(solver.delta(-0.01)));
        if (std::abs(d0) <= 1e-8 * std::max(scale, 1e-300))
            table.diagnostics.push_back("characteristic function vanishes at lambda=0");
    }

    std::sort(roots.begin(), roots.end());
    while (!roots.empty() && std::sqrt(std::max(roots.back(), 0.0)) > rho_end + 1e-9)
        roots.pop_back();

    // Branch assignment by nearest asymptote.
    struct Keyed {
        int cls;
        int n;
        double lambda;
    };
    std::vector<Keyed> keyed;
    for (double la : roots) {
        if (la <= 0.0) {
            table.diagnostics.push_back("non-positive eigenvalue at lambda=" + fmt(la));
            continue;
        }
        double r = std::sqrt(la);
        auto near_n = [](double x) { return std::max(1, static_cast<int>(std::llround(x))); };
        int n1 = near_n(r + 1.0 - beta), n2 = near_n(r + beta);
        int n3 = near_n(r + 0.5), n4 = near_n(r);
        double pred[4] = {n1 - 1 + beta, n2 - beta, n3 - 0.5, static_cast<double>(n4)};
        int nn[4] = {n1, n2, n3, n4};
        int best = 0;
        double bestd = std::abs(r - pred[0]), secondd = 1e300;
        for (int c = 1; c < 4; ++c) {
            double d = std::abs(r - pred[c]);
            if (d < bestd) {
                secondd = bestd;
                bestd = d;
                best = c;
            } else {
                secondd = std::min(secondd, d);
            }
        }
        if (secondd - bestd < 1e-9)
            table.diagnostics.push_back("ambiguous branch assignment at rho=" + fmt(r));
        keyed.push_back({best, nn[best], la});
    }

    // Expected root count near each asymptote class.
    int expect[4] = {1, 1, prob.neumann_count - 1, prob.m - prob.neumann_count - 1};
    std::vector<int> i3, i4;
    for (int k = 3; k <= prob.m; ++k)
        (branch_in_I3(k, prob.m, prob.neumann_count) ? i3 : i4).push_back(k);

    std::map<std::pair<int, int>, std::vector<double>> groups;
    for (const auto& kd : keyed) groups[{kd.cls, kd.n}].push_back(kd.lambda);

    for (auto& [key, lam] : groups) {
        auto [cls, n] = key;
        std::sort(lam.begin(), lam.end());
        // The topmost window may be legitimately partial.
        bool top_window = n >= n_max;
        if (static_cast<int>(lam.size()) != expect[cls] && !(top_window && static_cast<int>(lam.size()) < expect[cls]))
            table.diagnostics.push_back("root count " + std::to_string(lam.size()) +
                                        " near class-" + std::to_string(cls + 1) +
                                        " asymptote, n=" + std::to_string(n) + " (expected " +
                                        std::to_string(expect[cls]) + ")");
        const std::vector<int>* klist = nullptr;
        std::vector<int> k12;
        if (cls == 0) k12 = {1};
        if (cls == 1) k12 = {2};
        klist = (cls == 0 || cls == 1) ? &k12 : (cls == 2 ? &i3 : &i4);
        for (std::size_t i = 0; i < lam.size(); ++i) {
            int k = klist->empty() ? 0
                                   : (*klist)[std::min(i, klist->size() - 1)];
            if (k == 0) continue;
            SpectrumEntry e;
            e.k = k;
            e.lambda = lam[i];
            e.rho = std::sqrt(lam[i]);
            e.n = 0; // re-indexed below
            table.entries.push_back(e);
        }
    }

    // Re-index each branch by increasing lambda.
    std::sort(table.entries.begin(), table.entries.end(), [](auto& a, auto& b) {
        return a.k != b.k ? a.k < b.k : a.lambda < b.lambda;
    });
    int cur_k = -1, cur_n = 0;
    for (auto& e : table.entries) {
        if (e.k != cur_k) {
            cur_k = e.k;
            cur_n = 0;
        }
        e.n = ++cur_n;
    }
    return table;
}

SpectrumTable find_eigenvalues(const StarProblem& prob, int n_max, int steps) {
    return find_eigenvalues(StarSolver(prob, steps), n_max);
}

std::string AssumptionReport::summary() const {
    auto line = [](const char* name, const Item& it) {
        return std::string(name) + ": " + (it.pass ? "pass" : "FAIL") +
               " (margin " + fmt(it.margin) + (it.detail.empty() ? "" : ", " + it.detail) + ")\n";
    };
    return line("A1", a1) + line("A2", a2) + line("A3", a3) + line("A4", a4) + line("A5", a5);
}

} // namespace starsl
