#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mdf/field.hpp"

namespace mdf {

// Exact Euclidean projection of u onto the polyhedron
//   { d : d_i + d_j >= eps for all 1 <= i < j <= K }.
// The objective |d - u|^2 is strictly convex, so the minimizer is unique and
// the KKT conditions characterize it exactly.

struct QpSolution {
    SdfVector d;
    // Constraints held at equality by the solver, as index pairs i < j,
    // with one nonnegative multiplier each. Stationarity:
    //   2 (d - u) = sum over active pairs of lambda_ij * (e_i + e_j).
    std::vector<std::pair<int, int>> active;
    std::vector<double> duals;
    double objective = 0.0;  // |d - u|^2
    int iterations = 0;
};

struct QpOptions {
    double feasibility_tol = 1e-10;
    double kkt_tol = 1e-8;
    // Iteration cap as a multiple of the constraint count C(K,2).
    int max_iterations_per_constraint = 50;
};

// Dual active-set projection. The Hessian is 2*I, so every equality
// subproblem reduces to a small least-squares solve on the multipliers.
// Starts from the Shift-All point, which is always feasible. Deterministic:
// identical input yields the identical active set. Throws
// NonConvergenceError (carrying the best iterate) if the iteration cap is
// hit; throws ValidationError for K < 2 or K > 64.
QpSolution project_qp(const SdfVector& u, double eps = 0.0, const QpOptions& options = {});

// Verification oracle: enumerates candidate active sets, solves each
// equality-constrained least-squares problem, and keeps the best candidate
// that satisfies every constraint. Exponential in the constraint count;
// restricted to K <= 8.
SdfVector brute_force_project(const SdfVector& u, double eps = 0.0);

}  // namespace mdf
