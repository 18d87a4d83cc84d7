#include "mdf/field.hpp"

#include <cmath>
#include <string>

namespace mdf {

SdfVector::SdfVector(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw ValidationError("SdfVector: must hold at least one entry");
    }
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (!std::isfinite(values_[k])) {
            throw ValidationError("SdfVector: non-finite entry at index " + std::to_string(k));
        }
    }
}

namespace {

void require_constraint_arity(const SdfVector& u) {
    if (u.size() < 2) {
        throw ValidationError("constraint operations need K >= 2, got K = " +
                              std::to_string(u.size()));
    }
}

}  // namespace

ConstraintReport min1_min2(const SdfVector& u) {
    require_constraint_arity(u);
    // One pass; strict < keeps the lowest index on ties.
    std::size_t a = 0, b = 1;
    if (u[1] < u[0]) {
        a = 1;
        b = 0;
    }
    for (std::size_t k = 2; k < u.size(); ++k) {
        if (u[k] < u[a]) {
            b = a;
            a = k;
        } else if (u[k] < u[b]) {
            b = k;
        }
    }
    // Equal smallest values must report argmin1 < argmin2.
    if (u[a] == u[b] && b < a) std::swap(a, b);

    ConstraintReport r;
    r.min1 = u[a];
    r.min2 = u[b];
    r.argmin1 = a;
    r.argmin2 = b;
    r.s2 = r.min1 + r.min2;
    r.feasible_min2 = r.min2 >= 0.0;
    r.feasible_s2 = r.s2 >= 0.0;
    return r;
}

bool check_mdf(const SdfVector& u, double eps) {
    return min1_min2(u).s2 >= eps;
}

double intersection_penalty(const SdfVector& u) {
    const ConstraintReport r = min1_min2(u);
    double sum = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (k == r.argmin1) continue;
        sum += std::max(0.0, -(r.min1 + u[k]));
    }
    return sum / static_cast<double>(u.size() - 1);
}

}  // namespace mdf
