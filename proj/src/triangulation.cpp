#include "shyp/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace shyp {

PullOrder PullOrder::lex(int n) {
    PullOrder o;
    o.rank.resize(n);
    std::iota(o.rank.begin(), o.rank.end(), 0);
    return o;
}

PullOrder PullOrder::random(int n, std::uint64_t seed) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 gen(seed);
    for (int i = n - 1; i > 0; --i) {
        // engine output is pinned by the standard, so orders are reproducible
        int j = static_cast<int>(gen() % static_cast<std::uint64_t>(i + 1));
        std::swap(perm[i], perm[j]);
    }
    PullOrder o;
    o.rank.resize(n);
    for (int pos = 0; pos < n; ++pos) o.rank[perm[pos]] = pos;
    return o;
}

namespace {

struct Puller {
    const PullOrder& order;
    const FacetProvider& provider;
    std::vector<std::vector<int>> out;

    void rec(const std::vector<int>& face, int dim, std::vector<int>& apex) {
        if (face.size() == static_cast<size_t>(dim) + 1) {
            std::vector<int> simplex = apex;
            simplex.insert(simplex.end(), face.begin(), face.end());
            std::sort(simplex.begin(), simplex.end());
            out.push_back(std::move(simplex));
            return;
        }
        const int v = *std::min_element(face.begin(), face.end(), [&](int a, int b) {
            return order.rank[a] < order.rank[b];
        });
        apex.push_back(v);
        for (const auto& facet : provider(face)) {
            if (std::binary_search(facet.begin(), facet.end(), v)) continue;
            rec(facet, dim - 1, apex);
        }
        apex.pop_back();
    }
};

FacetProvider oracle_provider(const std::vector<oracle::ExactPoint>& pts,
                              const oracle::OracleCaps& caps, FacetCache* cache) {
    return [&pts, caps, cache](const std::vector<int>& face) {
        if (cache) {
            auto it = cache->find(face);
            if (it != cache->end()) return it->second;
        }
        std::vector<oracle::ExactPoint> sub;
        for (int i : face) sub.push_back(pts[i]);
        std::vector<std::vector<int>> facets;
        for (const auto& f : oracle::brute_facets(sub, caps)) {
            std::vector<int> g;
            for (int local : f.incident) g.push_back(face[local]);
            std::sort(g.begin(), g.end());
            facets.push_back(std::move(g));
        }
        if (cache) cache->emplace(face, facets);
        return facets;
    };
}

}  // namespace

std::vector<std::vector<int>> pulling_triangulation(
    const std::vector<oracle::ExactPoint>& pts, const PullOrder& order,
    const FacetProvider& provider, const PullCaps& caps) {
    if (pts.size() > caps.max_vertices)
        throw cap_exceeded("pulling_triangulation: vertex count exceeds cap");
    if (pts.empty()) throw std::invalid_argument("pulling_triangulation: no points");
    const int d = static_cast<int>(pts[0].size());
    if (oracle::affine_dimension(pts) != d)
        throw std::invalid_argument("pulling_triangulation: point set is degenerate");
    if (order.rank.size() != pts.size())
        throw std::invalid_argument("pulling_triangulation: order size mismatch");

    std::vector<int> all(pts.size());
    std::iota(all.begin(), all.end(), 0);
    Puller puller{order, provider, {}};
    std::vector<int> apex;
    puller.rec(all, d, apex);
    std::sort(puller.out.begin(), puller.out.end());
    return puller.out;
}

std::vector<std::vector<int>> pulling_triangulation(
    const std::vector<oracle::ExactPoint>& pts, const PullOrder& order,
    const PullCaps& caps, FacetCache* cache) {
    FacetCache local;
    if (!cache) cache = &local;
    return pulling_triangulation(pts, order, oracle_provider(pts, caps.oracle, cache), caps);
}

Triangulation pull_shypersimplex(const SHypersimplex& P, const PullOrder& order,
                                 const PullCaps& caps, FacetCache* cache) {
    auto verts = vertices(P);
    std::vector<oracle::ExactPoint> pts;
    for (const auto& v : verts) pts.push_back(v.point());
    auto simplices = pulling_triangulation(pts, order, caps, cache);
    Triangulation T{P, {}};
    for (const auto& s : simplices) {
        std::vector<VertexSubset> simplex;
        for (int i : s) simplex.push_back(verts[i]);
        T.simplices.push_back(std::move(simplex));
    }
    return T;
}

namespace {

// Structural facets of a parity-polytope face of the halfcube. The face is
// all 0/1 vectors on its varying coordinates with fixed parity; its facets
// are the coordinate sections plus one simplex facet per subset B of the
// varying coordinates with |B| of the opposite parity.
FacetProvider halfcube_provider(const std::vector<std::uint64_t>& masks) {
    return [&masks](const std::vector<int>& face) {
        std::uint64_t all = 0, common = ~std::uint64_t(0);
        for (int i : face) {
            all |= masks[i];
            common &= masks[i];
        }
        const std::uint64_t varying = all & ~common;
        const int n = std::popcount(varying);
        if (face.size() != (std::uint64_t(1) << (n - 1)) || n < 4)
            throw std::logic_error("halfcube pull: face is not a parity polytope");
        std::vector<int> vbits;
        for (int b = 0; b < 64; ++b)
            if ((varying >> b) & 1) vbits.push_back(b);
        const int eps = std::popcount(masks[face[0]] & varying) & 1;

        std::vector<std::vector<int>> facets;
        for (int b : vbits) {
            for (int delta = 0; delta <= 1; ++delta) {
                std::vector<int> g;
                for (int i : face)
                    if (static_cast<int>((masks[i] >> b) & 1) == delta) g.push_back(i);
                facets.push_back(std::move(g));
            }
        }
        for (std::uint64_t t = 0; t < (std::uint64_t(1) << n); ++t) {
            if ((std::popcount(t) & 1) == eps) continue;
            std::uint64_t B = 0;
            for (int j = 0; j < n; ++j)
                if ((t >> j) & 1) B |= std::uint64_t(1) << vbits[j];
            const int target = std::popcount(B) - 1;
            std::vector<int> g;
            for (int i : face) {
                const int val = std::popcount(masks[i] & B) -
                                std::popcount(masks[i] & (varying & ~B));
                if (val == target) g.push_back(i);
            }
            if (static_cast<int>(g.size()) != n)
                throw std::logic_error("halfcube pull: bad simplex facet");
            facets.push_back(std::move(g));
        }
        return facets;
    };
}

}  // namespace

Triangulation pull_halfcube(int d, const PullOrder& order) {
    SHypersimplex P = halfcube(d);
    auto verts = vertices(P);
    std::vector<std::uint64_t> masks;
    std::vector<oracle::ExactPoint> pts;
    for (const auto& v : verts) {
        masks.push_back(v.bits);
        pts.push_back(v.point());
    }
    PullCaps caps;
    caps.max_vertices = std::max<std::size_t>(64, masks.size());
    auto simplices = pulling_triangulation(pts, order, halfcube_provider(masks), caps);
    Triangulation T{P, {}};
    for (const auto& s : simplices) {
        std::vector<VertexSubset> simplex;
        for (int i : s) simplex.push_back(verts[i]);
        T.simplices.push_back(std::move(simplex));
    }
    return T;
}

Rat pull_volume(const std::vector<oracle::ExactPoint>& pts,
                const std::vector<std::vector<int>>& simplices) {
    Rat total = 0;
    for (const auto& s : simplices) {
        std::vector<oracle::ExactPoint> corners;
        for (int i : s) corners.push_back(pts[i]);
        Rat v = oracle::simplex_volume(corners);
        if (v == 0) throw std::logic_error("pull_volume: degenerate simplex");
        total += v;
    }
    return total;
}

Rat triangulation_volume(const Triangulation& T) {
    Rat total = 0;
    for (const auto& s : T.simplices) {
        std::vector<oracle::ExactPoint> corners;
        for (const auto& v : s) corners.push_back(v.point());
        Rat vol = oracle::simplex_volume(corners);
        if (vol == 0) throw std::logic_error("triangulation_volume: degenerate simplex");
        total += vol;
    }
    return total;
}

Int halfcube_pull_count(int d) {
    if (d < 1) throw std::invalid_argument("halfcube_pull_count: d must be positive");
    if (d <= 3) return 1;
    Int t = 0;
    for (int l = 3; l <= d; ++l)
        t += factorial(d) / factorial(l) * ((Int(1) << (l - 1)) - l);
    return t;
}

Int halfcube_pull_count_recurrence(int d) {
    if (d < 1) throw std::invalid_argument("halfcube_pull_count_recurrence: d must be positive");
    Int t = 1;
    for (int n = 4; n <= d; ++n) t = n * t + (Int(1) << (n - 1)) - n;
    return t;
}

std::vector<TauBPair> enumerate_tau_b_pairs(int d) {
    if (d < 3) throw std::invalid_argument("enumerate_tau_b_pairs: d must be at least 3");
    std::vector<TauBPair> out;
    std::vector<int> tau;
    std::uint64_t used = 0;
    auto emit_bs = [&]() {
        std::vector<int> rest;
        for (int i = 1; i <= d; ++i)
            if (!((used >> (i - 1)) & 1)) rest.push_back(i);
        const int m = static_cast<int>(rest.size());
        for (int size = 3; size <= m; size += 2) {
            for (std::uint64_t t : masks_of_size(m, size)) {
                std::uint64_t B = 0;
                for (int j = 0; j < m; ++j)
                    if ((t >> j) & 1) B |= std::uint64_t(1) << (rest[j] - 1);
                out.push_back({d, tau, B});
            }
        }
    };
    auto rec = [&](auto&& self) -> void {
        if (d - static_cast<int>(tau.size()) >= 3) emit_bs();
        if (d - static_cast<int>(tau.size()) <= 3) return;  // no room left for B
        for (int i = 1; i <= d; ++i) {
            if ((used >> (i - 1)) & 1) continue;
            tau.push_back(i);
            used |= std::uint64_t(1) << (i - 1);
            self(self);
            used &= ~(std::uint64_t(1) << (i - 1));
            tau.pop_back();
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end(), [](const TauBPair& x, const TauBPair& y) {
        if (x.tau.size() != y.tau.size()) return x.tau.size() < y.tau.size();
        if (x.tau != y.tau) return x.tau < y.tau;
        return x.b_mask < y.b_mask;
    });
    return out;
}

Int eulerian(int d, int i) {
    if (d < 1 || i < 0 || i >= d) throw std::invalid_argument("eulerian: need 0 <= i < d");
    std::vector<Int> row{1};  // A(1, 0)
    for (int n = 2; n <= d; ++n) {
        std::vector<Int> next(n, 0);
        for (int j = 0; j < n; ++j) {
            if (j < n - 1) next[j] += (j + 1) * row[j];
            if (j > 0) next[j] += (n - j) * row[j - 1];
        }
        row = std::move(next);
    }
    return row[i];
}

bool volume_identity_check(int d, int k, int l, const PullCaps& caps) {
    if (!(0 <= k && k < l && l <= d))
        throw std::invalid_argument("volume_identity_check: need 0 <= k < l <= d");
    if (d > 6) throw cap_exceeded("volume_identity_check: d exceeds the triangulation scale");
    std::vector<int> members;
    for (int s = k; s <= l; ++s) members.push_back(s);
    SHypersimplex P = make_shypersimplex(d, std::move(members));
    const int nverts = static_cast<int>(vertices(P).size());
    Triangulation T = pull_shypersimplex(P, PullOrder::lex(nverts), caps);
    Rat vol = triangulation_volume(T);

    // descent counts in {k, ..., l-1}: Eulerian sum and direct enumeration
    Int expected = 0;
    for (int i = k; i <= l - 1 && i < d; ++i) expected += eulerian(d, i);
    Int brute = 0;
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        const int des = oracle::descent_count(perm);
        if (k <= des && des <= l - 1) brute += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));

    return vol * Rat(factorial(d)) == Rat(expected) && expected == brute;
}

}  // namespace shyp
