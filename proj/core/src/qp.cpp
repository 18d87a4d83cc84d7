#include "mdf/qp.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "mdf/project.hpp"

namespace mdf {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

std::vector<std::pair<int, int>> all_pairs(int k) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(k) * (k - 1) / 2);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
    }
    return pairs;
}

// Equality-constrained minimizer of |d - u|^2 subject to d_i + d_j = eps on
// the given pairs. With Hessian 2*I the stationarity condition is
//   d = u + A^T mu,   A_W A_W^T mu = eps*1 - A_W u,
// where A has one row e_i + e_j per pair. The Gram matrix entries count
// shared indices (2 on the diagonal, 1 for pairs sharing an object, else 0).
// Rank-deficient working sets (even cycles in the pair graph) are resolved
// by the minimum-norm least-squares solution.
struct EqpResult {
    VectorXd d;
    VectorXd mu;          // lambda = 2 * mu
    bool consistent = false;  // equalities actually hold at d
};

EqpResult solve_eqp(const VectorXd& u, const std::vector<std::pair<int, int>>& working, double eps,
                    double tol) {
    EqpResult res;
    const int m = static_cast<int>(working.size());
    if (m == 0) {
        res.d = u;
        res.mu = VectorXd();
        res.consistent = true;
        return res;
    }
    MatrixXd gram(m, m);
    VectorXd rhs(m);
    for (int a = 0; a < m; ++a) {
        const auto [i, j] = working[a];
        rhs[a] = eps - u[i] - u[j];
        for (int b = 0; b < m; ++b) {
            const auto [p, q] = working[b];
            int shared = 0;
            shared += (i == p) + (i == q) + (j == p) + (j == q);
            gram(a, b) = static_cast<double>(shared);
        }
    }
    res.mu = gram.completeOrthogonalDecomposition().solve(rhs);
    res.d = u;
    for (int a = 0; a < m; ++a) {
        const auto [i, j] = working[a];
        res.d[i] += res.mu[a];
        res.d[j] += res.mu[a];
    }
    double eq_residual = 0.0;
    for (int a = 0; a < m; ++a) {
        const auto [i, j] = working[a];
        eq_residual = std::max(eq_residual, std::abs(res.d[i] + res.d[j] - eps));
    }
    res.consistent = eq_residual <= tol;
    return res;
}

VectorXd to_eigen(const SdfVector& u) {
    VectorXd v(static_cast<int>(u.size()));
    for (std::size_t i = 0; i < u.size(); ++i) v[static_cast<int>(i)] = u[i];
    return v;
}

SdfVector to_sdf(const VectorXd& v) {
    return SdfVector(std::vector<double>(v.data(), v.data() + v.size()));
}

// Nudges the whole vector up by a few ulps so the result sits on the
// feasible side of min1 + min2 >= eps. The minimal pair sum is min1 + min2,
// so this restores every pairwise constraint at once.
void snap_feasible(VectorXd& d, double eps) {
    for (;;) {
        const ConstraintReport r = min1_min2(to_sdf(d));
        if (r.s2 >= eps) return;
        const double scale = std::max(std::abs(eps), d.cwiseAbs().maxCoeff());
        d.array() += std::max(0.5 * (eps - r.s2),
                              (scale + 1.0) * std::numeric_limits<double>::epsilon());
    }
}

}  // namespace

QpSolution project_qp(const SdfVector& u, double eps, const QpOptions& options) {
    const int k = static_cast<int>(u.size());
    if (k < 2) throw ValidationError("project_qp: requires K >= 2");
    if (k > 64) throw ValidationError("project_qp: K > 64 unsupported (C(K,2) constraints)");

    QpSolution sol;
    // Feasible inputs pass through untouched, with an empty active set.
    if (check_mdf(u, eps)) {
        sol.d = u;
        return sol;
    }

    const std::vector<std::pair<int, int>> pairs = all_pairs(k);
    const int m = static_cast<int>(pairs.size());
    const int max_iter = options.max_iterations_per_constraint * m;
    const VectorXd u0 = to_eigen(u);

    // Primal active-set iteration from the Shift-All point, which is feasible
    // and usually one equality solve away from optimal.
    VectorXd x = to_eigen(shift_all(u, eps));
    std::vector<std::pair<int, int>> working;
    std::vector<char> in_working(pairs.size(), 0);
    const double act_tol = 10.0 * options.feasibility_tol;
    for (int c = 0; c < m; ++c) {
        const auto [i, j] = pairs[c];
        if (std::abs(x[i] + x[j] - eps) <= act_tol) {
            working.push_back(pairs[c]);
            in_working[c] = 1;
        }
    }

    int iter = 0;
    for (; iter < max_iter; ++iter) {
        EqpResult eqp = solve_eqp(u0, working, eps, options.kkt_tol);

        if (!eqp.consistent) {
            // Inconsistent equality system: drop the most recently added
            // constraint and retry.
            const auto dropped = working.back();
            working.pop_back();
            for (std::size_t c = 0; c < pairs.size(); ++c) {
                if (pairs[c] == dropped) in_working[c] = 0;
            }
            continue;
        }

        const VectorXd step = eqp.d - x;
        if (step.lpNorm<Eigen::Infinity>() <= options.kkt_tol * 0.01) {
            // Candidate equals the current point; check the duals.
            int worst = -1;
            double worst_val = -1e-12;
            for (int a = 0; a < static_cast<int>(working.size()); ++a) {
                const double lambda = 2.0 * eqp.mu[a];
                if (lambda < worst_val) {
                    worst_val = lambda;
                    worst = a;
                }
            }
            if (worst < 0) {
                // KKT point. Assemble the solution.
                snap_feasible(eqp.d, eps);
                sol.d = to_sdf(eqp.d);
                sol.active = working;
                sol.duals.resize(working.size());
                for (std::size_t a = 0; a < working.size(); ++a) {
                    sol.duals[a] = std::max(0.0, 2.0 * eqp.mu[static_cast<int>(a)]);
                }
                sol.objective = (eqp.d - u0).squaredNorm();
                sol.iterations = iter + 1;
                return sol;
            }
            // Remove the constraint with the most negative multiplier
            // (lowest index on ties, by scan order).
            const auto removed = working[static_cast<std::size_t>(worst)];
            working.erase(working.begin() + worst);
            for (std::size_t c = 0; c < pairs.size(); ++c) {
                if (pairs[c] == removed) in_working[c] = 0;
            }
            continue;
        }

        // Step toward the equality-constrained minimizer, clipped at the
        // first blocking constraint (lowest index on ties).
        double alpha = 1.0;
        int blocking = -1;
        for (int c = 0; c < m; ++c) {
            if (in_working[c]) continue;
            const auto [i, j] = pairs[c];
            const double dir = step[i] + step[j];
            if (dir >= -1e-15) continue;  // constraint value not decreasing
            const double slack = x[i] + x[j] - eps;
            const double limit = std::max(0.0, slack) / (-dir);
            if (limit < alpha) {
                alpha = limit;
                blocking = c;
            }
        }
        x += alpha * step;
        if (blocking >= 0) {
            working.push_back(pairs[blocking]);
            in_working[blocking] = 1;
        }
    }

    throw NonConvergenceError(
        "project_qp: iteration cap (" + std::to_string(max_iter) + ") exceeded",
        std::vector<double>(x.data(), x.data() + x.size()));
}

SdfVector brute_force_project(const SdfVector& u, double eps) {
    const int k = static_cast<int>(u.size());
    if (k < 2) throw ValidationError("brute_force_project: requires K >= 2");
    if (k > 8) throw ValidationError("brute_force_project: K > 8 makes 2^C(K,2) enumeration unusable");

    const VectorXd u0 = to_eigen(u);
    const std::vector<std::pair<int, int>> pairs = all_pairs(k);

    // A pair already strictly satisfied can never be active at the optimum:
    // every KKT point has d >= u componentwise (nonnegative multipliers on
    // rows e_i + e_j), so d_i + d_j = eps < u_i + u_j is impossible.
    // Restricting enumeration to the remaining pairs is exactly the dual
    // feasibility filter applied up front.
    std::vector<std::pair<int, int>> eligible;
    for (const auto& [i, j] : pairs) {
        if (u0[i] + u0[j] <= eps) eligible.emplace_back(i, j);
    }

    const double feas_tol = 1e-10;
    const double dual_tol = 1e-9;
    const int me = static_cast<int>(eligible.size());

    double best_obj = std::numeric_limits<double>::infinity();
    VectorXd best_d;
    double fallback_obj = std::numeric_limits<double>::infinity();
    VectorXd fallback_d;

    std::vector<std::pair<int, int>> subset;
    for (std::uint64_t mask = 0; mask < (1ull << me); ++mask) {
        subset.clear();
        for (int c = 0; c < me; ++c) {
            if (mask >> c & 1) subset.push_back(eligible[static_cast<std::size_t>(c)]);
        }
        EqpResult eqp = solve_eqp(u0, subset, eps, 1e-9);
        if (!eqp.consistent) continue;

        bool primal_ok = true;
        for (const auto& [i, j] : pairs) {
            if (eqp.d[i] + eqp.d[j] < eps - feas_tol) {
                primal_ok = false;
                break;
            }
        }
        if (!primal_ok) continue;

        const double obj = (eqp.d - u0).squaredNorm();
        bool dual_ok = true;
        for (int a = 0; a < static_cast<int>(subset.size()); ++a) {
            if (2.0 * eqp.mu[a] < -dual_tol) {
                dual_ok = false;
                break;
            }
        }
        if (dual_ok && obj < best_obj) {
            best_obj = obj;
            best_d = eqp.d;
        }
        if (obj < fallback_obj) {
            fallback_obj = obj;
            fallback_d = eqp.d;
        }
    }

    // The empty subset covers interior points and the full eligible set is
    // always consistent, so a feasible candidate always exists. The dual
    // filter can only reject candidates when the minimum-norm multipliers of
    // a degenerate active set come out negative; fall back to the best
    // primal-feasible candidate in that case.
    if (best_d.size() == 0) best_d = fallback_d;
    return to_sdf(best_d);
}

}  // namespace mdf
