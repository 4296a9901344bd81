#pragma once

#include "shyp/numeric.hpp"
#include "shyp/oracle.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace shyp {

/// Subset A of [d] = {1,...,d} standing for the 0/1 vertex e_A.
struct VertexSubset {
    int d = 0;
    std::uint64_t bits = 0;

    static VertexSubset from_elements(int d, const std::vector<int>& elems);

    int cardinality() const { return std::popcount(bits); }
    bool contains(int i) const { return (bits >> (i - 1)) & 1; }  // i in [d]
    std::vector<int> elements() const;
    oracle::ExactPoint point() const;

    bool operator==(const VertexSubset&) const = default;
    // canonical order: by cardinality, then colex (= numeric mask order)
    std::strong_ordering operator<=>(const VertexSubset& o) const {
        if (auto c = cardinality() <=> o.cardinality(); c != 0) return c;
        return bits <=> o.bits;
    }
};

/// The pair (d, S): ambient dimension and the allowed coordinate sums.
struct CardinalitySet {
    int d;
    std::vector<int> members;  // strictly increasing, within [0, d]

    CardinalitySet(int d, std::vector<int> members);
    bool contains(int s) const;
    int size() const { return static_cast<int>(members.size()); }
};

bool is_proper(const CardinalitySet& cs);

struct SHypersimplex {
    CardinalitySet card_set;
    bool proper;

    explicit SHypersimplex(CardinalitySet cs) : card_set(std::move(cs)), proper(is_proper(card_set)) {}
    int d() const { return card_set.d; }
};

SHypersimplex make_shypersimplex(int d, std::vector<int> members);
SHypersimplex halfcube(int d);   // Delta(d, even members of [0, d])
SHypersimplex cube(int d);       // Delta(d, [0, d])

/// The five facet families of an S-hypersimplex plus the block facets of a
/// permutahedron (which are none of the five).
enum class FacetKind { Top, Bottom, CoordUpper, CoordLower, Join, PermBlock };

struct FacetSpec {
    std::vector<Int> normal;  // primitive integer vector
    Int rhs;                  // every vertex satisfies <normal, e_A> <= rhs
    FacetKind kind;
    int coord = 0;                // kinds iii/iv: the coordinate i in [d]
    std::uint64_t set_mask = 0;   // kind v / perm block: the set I
    int set_size = 0;             // h = |I|
};

enum class EdgeKind { Chain, Swap };

struct EdgeSpec {
    VertexSubset a, b;  // a < b canonically
    EdgeKind kind;
};

// --- operations -------------------------------------------------------------

std::vector<VertexSubset> vertices(const SHypersimplex& P);
Int vertex_count(const SHypersimplex& P);

/// Edge test per the two edge families: CHAIN for nested pairs on consecutive
/// layers of S, SWAP within a layer s when {s-1, s+1} is not contained in S.
std::optional<EdgeSpec> is_edge(const SHypersimplex& P, const VertexSubset& A,
                                const VertexSubset& B);
std::vector<EdgeSpec> edges(const SHypersimplex& P);
Int edge_count(const SHypersimplex& P);

std::vector<VertexSubset> face_in_direction(const SHypersimplex& P,
                                            const std::vector<Int>& c);

std::vector<FacetSpec> facets(const SHypersimplex& P);
Int facet_count(const SHypersimplex& P);

std::vector<SHypersimplex> cayley_decomposition(const SHypersimplex& P);
std::vector<VertexSubset> slice(const SHypersimplex& P, int s);

/// Balas-style union bound 2d(|S|-1) on the extension complexity.
Int extension_upper_bound(const SHypersimplex& P);

/// Cardinality set of the facet in direction +e_i, living at dimension d-1:
/// {s-1 : s in S, s > 0}. Empty result reported as nullopt.
std::optional<CardinalitySet> coord_upper_set(const CardinalitySet& cs);
/// Same for -e_i: {s in S : s <= d-1}.
std::optional<CardinalitySet> coord_lower_set(const CardinalitySet& cs);

/// All subsets of [d] with popcount s, ascending mask order.
std::vector<std::uint64_t> masks_of_size(int d, int s);

}  // namespace shyp
