#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rat.hpp"

namespace binomsum {

/**
 * Certify lhs_at == rhs_at as polynomials of degree <= degree_bound by
 * sampling: two polynomials of degree <= d that agree at d+1 distinct
 * points are identical, so with enough distinct sample points agreement
 * is a proof, not a heuristic.
 *
 * Throws insufficient_samples when fewer than degree_bound+1 distinct
 * points are supplied.
 */
template <class LhsAt, class RhsAt>
bool certify_poly_identity(long degree_bound, LhsAt&& lhs_at, RhsAt&& rhs_at,
                           const std::vector<Rat>& sample_points) {
    std::vector<Rat> pts = sample_points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (static_cast<long>(pts.size()) < degree_bound + 1)
        throw insufficient_samples("certify_poly_identity: need " +
                                   std::to_string(degree_bound + 1) + " distinct points, got " +
                                   std::to_string(pts.size()));
    for (const Rat& p : pts)
        if (lhs_at(p) != rhs_at(p))
            return false;
    return true;
}

} // namespace binomsum
