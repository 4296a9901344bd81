#pragma once

#include "shyp/core.hpp"

#include <vector>

namespace shyp {

/// Permutahedron Pi(p): convex hull of all coordinate permutations of p,
/// stored by its decreasing representative.
struct Permutahedron {
    std::vector<long long> p;  // weakly decreasing

    explicit Permutahedron(std::vector<long long> entries);
    int d() const { return static_cast<int>(p.size()); }
    bool is_point() const;
    /// block form (nu_1^{k_1}, ..., nu_r^{k_r}) with nu_1 > ... > nu_r
    std::vector<std::pair<long long, int>> blocks() const;
    long long coordinate_sum() const;

    bool operator==(const Permutahedron&) const = default;
};

/// All distinct permutations of p, ascending lexicographic order.
std::vector<std::vector<long long>> perm_vertices(const Permutahedron& q);

/// Number of distinct permutations, d! / (k_1! ... k_r!).
Int perm_vertex_count(const Permutahedron& q);

/// Facets within the affine hull H(sum p). One facet per admissible I, with
/// representative normal e_I and tight offset p_1 + ... + p_{|I|}.
std::vector<FacetSpec> perm_facets(const Permutahedron& q);

/// Pi(p) + Pi(q) = Pi(p + q), entrywise on the decreasing representatives.
Permutahedron perm_minkowski(const Permutahedron& a, const Permutahedron& b);

/// Chain A_1 < A_2 < ... < A_k visiting every layer of S; the vertex path of
/// a coordinate-sum monotone walk.
struct MonotonePath {
    std::vector<VertexSubset> chain;
    bool operator==(const MonotonePath&) const = default;
};

std::vector<MonotonePath> monotone_paths(const SHypersimplex& P);
Int monotone_path_count(const SHypersimplex& P);

/// Certifying functional h = sum of the chain's indicator vectors. Checks the
/// defining property: on each layer of S, <h, e_B> is uniquely maximized by
/// the chain member of that layer. Throws if the chain is not a valid path.
std::vector<Int> coherence_certificate(const SHypersimplex& P, const MonotonePath& W);

/// The permutahedron Pi(p) with 1/2 * 1 + d * Sigma_card(P) = Pi(p), built
/// from S' = S united with {0, d}.
Permutahedron monotone_path_polytope(const SHypersimplex& P);
Int mpp_vertex_count(const SHypersimplex& P);

/// Brute-force fiber-polytope identity at scale 2: the extreme points of the
/// weighted vertex-sum cloud P_0 + 2 P_1 + ... + 2 P_{k-1} + P_k over the
/// slices at S' must be exactly 2 Pi(p) - 1.
bool fiber_formula_check(const SHypersimplex& P, int max_d = 5);

}  // namespace shyp
