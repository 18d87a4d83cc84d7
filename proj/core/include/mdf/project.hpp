#pragma once

#include <cstdint>

#include "mdf/grid.hpp"

namespace mdf {

// Closed-form constraint restoration. Feasible inputs (min1 + min2 >= eps)
// are returned unchanged, bit for bit. Infeasible inputs are shifted by a
// common constant c = (eps - min1 - min2)/2, which restores the constraint
// with equality while preserving every pairwise difference. The result is
// guaranteed to pass check_mdf(., eps).
SdfVector shift_all(const SdfVector& u, double eps = 0.0);

// Exact Euclidean projection for the two-object case, written out from the
// KKT conditions of the constrained least-squares problem. Equivalent to
// shift_all on K = 2 inputs; kept separate so the equivalence stays testable.
SdfVector project_k2(const SdfVector& u, double eps = 0.0);

enum class ProjectionMethod { ShiftAll, Qp };

struct ProjectionSummary {
    std::int64_t modified_points = 0;
    double penalty_before = 0.0;
    double penalty_after = 0.0;
    std::int64_t infeasible_before = 0;
    std::int64_t infeasible_after = 0;
};

// Projects every lattice vector independently. Feasible vectors pass through
// unchanged; dims and bbox are preserved. Per-point solver failures carry the
// offending lattice index.
SampledMdfGrid project_grid(const SampledMdfGrid& grid, ProjectionMethod method,
                            double eps = 0.0, ProjectionSummary* summary = nullptr);

}  // namespace mdf
