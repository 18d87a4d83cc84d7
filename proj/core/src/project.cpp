#include "mdf/project.hpp"

#include <atomic>
#include <cmath>
#include <limits>

#include "mdf/parallel.hpp"
#include "mdf/qp.hpp"

namespace mdf {

namespace {

// Applies u + c*1 and nudges c upward until the result actually satisfies
// min1 + min2 >= eps in floating point. One shift is enough in exact
// arithmetic (adding c to every entry raises the sum of the two smallest by
// exactly 2c); the nudge covers the rounding of u_i + c. Each nudge is an
// ulp at the magnitude of the entries, so the loop ends after a step or two.
SdfVector shifted_feasible(const SdfVector& u, double s2, double eps) {
    double c = 0.5 * (eps - s2);
    double scale = std::abs(eps);
    for (std::size_t i = 0; i < u.size(); ++i) scale = std::max(scale, std::abs(u[i]));
    std::vector<double> v(u.size());
    for (;;) {
        for (std::size_t i = 0; i < u.size(); ++i) v[i] = u[i] + c;
        if (min1_min2(SdfVector(v)).s2 >= eps) break;
        c += (scale + std::abs(c) + 1.0) * std::numeric_limits<double>::epsilon();
    }
    return SdfVector(std::move(v));
}

}  // namespace

SdfVector shift_all(const SdfVector& u, double eps) {
    const ConstraintReport r = min1_min2(u);
    if (r.s2 >= eps) return u;
    return shifted_feasible(u, r.s2, eps);
}

SdfVector project_k2(const SdfVector& u, double eps) {
    if (u.size() != 2) {
        throw ValidationError("project_k2: requires K = 2, got K = " + std::to_string(u.size()));
    }
    // KKT cases for min |d - u|^2 s.t. d0 + d1 >= eps:
    //  inactive (u0 + u1 >= eps): lambda = 0, d = u;
    //  active: lambda = eps - u0 - u1 > 0, d = u + (lambda/2) * 1.
    const double sum = u[0] + u[1];
    if (sum >= eps) return u;
    return shifted_feasible(u, sum, eps);
}

SampledMdfGrid project_grid(const SampledMdfGrid& grid, ProjectionMethod method, double eps,
                            ProjectionSummary* summary) {
    if (grid.channels() < 2) {
        throw ValidationError("project_grid: needs K >= 2 channels");
    }
    SampledMdfGrid out = grid;
    const std::int64_t n = grid.point_count();

    std::atomic<std::int64_t> modified{0};
    std::atomic<std::int64_t> infeasible_before{0};
    // First solver failure wins; lattice index identifies the point.
    std::atomic<std::int64_t> failed_at{-1};

    parallel_for(n, [&](std::int64_t begin, std::int64_t end) {
        std::int64_t local_modified = 0;
        std::int64_t local_infeasible = 0;
        for (std::int64_t p = begin; p < end; ++p) {
            const SdfVector u = out.sdf_at(p);
            if (check_mdf(u, eps)) continue;
            ++local_infeasible;
            try {
                const SdfVector d =
                    method == ProjectionMethod::ShiftAll ? shift_all(u, eps) : project_qp(u, eps).d;
                out.set_vector_at(p, d.values());
                ++local_modified;
            } catch (const NonConvergenceError&) {
                std::int64_t expected = -1;
                failed_at.compare_exchange_strong(expected, p);
                return;
            }
        }
        modified += local_modified;
        infeasible_before += local_infeasible;
    });

    if (failed_at.load() >= 0) {
        const std::int64_t p = failed_at.load();
        throw NonConvergenceError(
            "project_grid: solver did not converge at lattice index " + std::to_string(p),
            grid.vector_at(p), p);
    }

    if (summary) {
        summary->modified_points = modified.load();
        summary->infeasible_before = infeasible_before.load();
        summary->infeasible_after = count_infeasible(out, eps);
        summary->penalty_before = intersection_penalty(grid);
        summary->penalty_after = intersection_penalty(out);
    }
    return out;
}

}  // namespace mdf
