#pragma once

#include "shyp/core.hpp"
#include "shyp/oracle.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace shyp {

/// Total order on a vertex list; rank[v] is the pulling priority of vertex v
/// (lower rank is pulled first). Totality makes every face's minimum unique.
struct PullOrder {
    std::vector<int> rank;

    static PullOrder lex(int n);
    static PullOrder random(int n, std::uint64_t seed);
};

struct PullCaps {
    std::size_t max_vertices = 64;
    oracle::OracleCaps oracle;
};

/// face (sorted vertex indices) -> its facets as sorted vertex index lists
using FacetProvider =
    std::function<std::vector<std::vector<int>>(const std::vector<int>&)>;

/// Memo for face -> facets lookups, shareable across pulls of one polytope.
using FacetCache = std::map<std::vector<int>, std::vector<std::vector<int>>>;

/// Simplices of the pulling triangulation as sorted index lists into the
/// input point set.
std::vector<std::vector<int>> pulling_triangulation(
    const std::vector<oracle::ExactPoint>& pts, const PullOrder& order,
    const PullCaps& caps = {}, FacetCache* cache = nullptr);

std::vector<std::vector<int>> pulling_triangulation(
    const std::vector<oracle::ExactPoint>& pts, const PullOrder& order,
    const FacetProvider& provider, const PullCaps& caps = {});

struct Triangulation {
    SHypersimplex ambient;
    std::vector<std::vector<VertexSubset>> simplices;
};

/// Pulling triangulation of a proper S-hypersimplex; faces are recovered
/// through the exact oracle, memoized per call (or via a shared cache).
Triangulation pull_shypersimplex(const SHypersimplex& P, const PullOrder& order,
                                 const PullCaps& caps = {}, FacetCache* cache = nullptr);

/// Pulling triangulation of the halfcube through its structural facet
/// description: 2n coordinate facets and 2^{n-1} simplex facets per
/// parity-polytope face. No oracle involved.
Triangulation pull_halfcube(int d, const PullOrder& order);

/// Sum of |det| / d! over the simplices, exact.
Rat triangulation_volume(const Triangulation& T);
Rat pull_volume(const std::vector<oracle::ExactPoint>& pts,
                const std::vector<std::vector<int>>& simplices);

/// t(d): number of simplices in any pulling triangulation of H_d, closed form
/// sum_{l=3}^{d} d!/l! (2^{l-1} - l), with t(d) = 1 for d <= 3.
Int halfcube_pull_count(int d);
/// Same number via the recurrence t(d) = d t(d-1) + 2^{d-1} - d.
Int halfcube_pull_count_recurrence(int d);

/// Partial permutation tau plus an odd non-singleton B disjoint from it.
struct TauBPair {
    int d;
    std::vector<int> tau;    // ordered, distinct elements of [d]
    std::uint64_t b_mask;    // |B| odd, |B| >= 3
};

std::vector<TauBPair> enumerate_tau_b_pairs(int d);

/// Eulerian number A(d, i): permutations of [d] with exactly i descents.
Int eulerian(int d, int i);

/// Pulls Delta(d, [k, l]) and checks d! vol against the Eulerian counts and a
/// brute-force descent enumeration (permutations with descent number in
/// {k, ..., l-1}; for l = k+1 this is A(d, k)).
bool volume_identity_check(int d, int k, int l, const PullCaps& caps = {});

}  // namespace shyp
