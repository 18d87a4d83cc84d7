#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "mdf/error.hpp"

namespace mdf {

// One K-dimensional signed-distance sample: entry k is the signed distance
// from the sample point to object k (negative inside). Entries are checked
// finite at construction; the constraint operations additionally require
// K >= 2.
class SdfVector {
public:
    SdfVector() = default;
    explicit SdfVector(std::vector<double> values);
    SdfVector(std::initializer_list<double> values)
        : SdfVector(std::vector<double>(values)) {}

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t k) const { return values_[k]; }
    const std::vector<double>& values() const { return values_; }

    bool operator==(const SdfVector& other) const = default;

private:
    std::vector<double> values_;
};

// Smallest and second-smallest entries of a signed-distance vector, their
// indices, and the feasibility of the two per-point constraints:
//   feasible_min2: min2 >= 0       (every point inside at most one object)
//   feasible_s2:   min1 + min2 >= 0 (the stronger, interpolation-closed form)
struct ConstraintReport {
    double min1 = 0.0;
    double min2 = 0.0;
    std::size_t argmin1 = 0;
    std::size_t argmin2 = 0;
    double s2 = 0.0;  // min1 + min2
    bool feasible_min2 = false;
    bool feasible_s2 = false;
};

// Smallest two entries with multiplicity ([a, a, b] has min1 = min2 = a).
// Ties resolve to the lowest index for argmin1 and the next lowest for
// argmin2. Throws ValidationError for K < 2.
ConstraintReport min1_min2(const SdfVector& u);

// min1(u) + min2(u) >= eps. eps = 0 is the plain multi-object constraint;
// eps > 0 adds a separation margin.
bool check_mdf(const SdfVector& u, double eps = 0.0);

// Pointwise overlap penalty:
//   1/(K-1) * sum_{k != argmin1} max(0, -(u_min + u_k))
// Zero exactly when the point satisfies the constraint.
double intersection_penalty(const SdfVector& u);

}  // namespace mdf
