#pragma once

#include "shyp/numeric.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace shyp::oracle {

/// Point with arbitrary-precision rational coordinates. No floating point is
/// used anywhere in this module.
using ExactPoint = std::vector<Rat>;

struct OracleCaps {
    std::size_t max_points = 40;
    int max_dim = 6;
};

/// Facet of conv(points), relative to the affine hull of the input.
/// The normal is a primitive integer vector lying in the span of the hull
/// directions; every input point satisfies <normal, x> <= rhs.
struct OracleFacet {
    std::vector<Int> normal;
    Int rhs;
    std::vector<int> incident;  // indices of points on the facet hyperplane

    bool operator==(const OracleFacet&) const = default;
};

/// Dimension of the affine hull of a nonempty point set (0 for a single point).
int affine_dimension(const std::vector<ExactPoint>& points);

/// All facets of conv(points) within its affine hull, found by enumerating
/// spanning subsets and keeping one-sided hyperplanes. Complete for any finite
/// point set; deterministic canonical order.
std::vector<OracleFacet> brute_facets(const std::vector<ExactPoint>& points,
                                      const OracleCaps& caps = {});

/// Vertex pairs (v, w) forming edges of conv(points): the points lying on all
/// facets common to v and w are exactly {v, w}.
std::vector<std::pair<int, int>> brute_edges(const std::vector<ExactPoint>& points,
                                             const OracleCaps& caps = {});

/// Indices of points that are not convex combinations of the other points.
/// Duplicates are removed up front (a duplicate is never reported extreme);
/// decided by exact rational linear feasibility.
std::vector<int> extreme_points(const std::vector<ExactPoint>& points);

/// |det(p_1 - p_0, ..., p_n - p_0)| / n! for exactly n+1 points in dimension n.
/// Zero signals a degenerate simplex.
Rat simplex_volume(const std::vector<ExactPoint>& points);

/// Number of positions i with perm[i] > perm[i+1]; input must be a
/// permutation of 1..d.
int descent_count(const std::vector<int>& perm);

/// Exact feasibility: is p a convex combination of pts?
bool in_convex_hull(const ExactPoint& p, const std::vector<ExactPoint>& pts);

/// Barycentric membership test for a full-dimensional simplex. Returns the
/// barycentric coordinates of p if p lies in the simplex (strict = interior
/// only), otherwise nothing.
std::optional<std::vector<Rat>> point_in_simplex(const std::vector<ExactPoint>& simplex,
                                                 const ExactPoint& p, bool strict);

/// Canonical (normal, rhs) pair for the supporting inequality of conv(points)
/// induced by an ambient linear functional: the functional is projected into
/// the span of the hull directions, scaled to a primitive integer vector, and
/// the rhs recomputed tight. Formula-side facets are passed through this to
/// make them comparable with brute_facets output.
std::pair<std::vector<Int>, Int> hull_canonical_inequality(
    const std::vector<ExactPoint>& points, const std::vector<Rat>& functional);

}  // namespace shyp::oracle
