#include "shyp/permutahedra.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace shyp {

Permutahedron::Permutahedron(std::vector<long long> entries) : p(std::move(entries)) {
    if (p.empty()) throw std::invalid_argument("permutahedron needs at least one entry");
    std::sort(p.begin(), p.end(), std::greater<>());
}

bool Permutahedron::is_point() const { return p.front() == p.back(); }

std::vector<std::pair<long long, int>> Permutahedron::blocks() const {
    std::vector<std::pair<long long, int>> b;
    for (long long v : p) {
        if (b.empty() || b.back().first != v)
            b.emplace_back(v, 1);
        else
            ++b.back().second;
    }
    return b;
}

long long Permutahedron::coordinate_sum() const {
    long long s = 0;
    for (long long v : p) s += v;
    return s;
}

std::vector<std::vector<long long>> perm_vertices(const Permutahedron& q) {
    std::vector<long long> v = q.p;
    std::sort(v.begin(), v.end());
    std::vector<std::vector<long long>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Int perm_vertex_count(const Permutahedron& q) {
    Int n = factorial(q.d());
    for (auto [value, mult] : q.blocks()) n /= factorial(mult);
    return n;
}

std::vector<FacetSpec> perm_facets(const Permutahedron& q) {
    if (q.is_point()) throw std::invalid_argument("perm_facets: a point has no facets");
    const int d = q.d();
    const auto blocks = q.blocks();
    const int k1 = blocks.front().second;
    const int kr = blocks.back().second;

    // P^{e_I} with h = |I| is a facet iff splitting p after position h leaves
    // dim (h-1 or 0) + (d-h-1 or 0) equal to d-2: both parts nonconstant, or
    // h = 1 with nonconstant tail, or h = d-1 with nonconstant head, or the
    // segment case d = 2 where both parts are single entries.
    auto admissible = [&](int h) {
        if (k1 + 1 <= h && h <= d - kr - 1) return true;
        if (h == 1 && kr < d - 1) return true;
        if (h == d - 1 && k1 < d - 1) return true;
        if (d == 2 && h == 1) return true;
        return false;
    };

    std::vector<FacetSpec> out;
    for (int h = 1; h <= d - 1; ++h) {
        if (!admissible(h)) continue;
        Int rhs = 0;
        for (int j = 0; j < h; ++j) rhs += q.p[j];
        for (std::uint64_t I : masks_of_size(d, h)) {
            FacetSpec f;
            f.normal.assign(d, 0);
            for (int j = 0; j < d; ++j)
                if ((I >> j) & 1) f.normal[j] = 1;
            f.rhs = rhs;
            f.kind = FacetKind::PermBlock;
            f.set_mask = I;
            f.set_size = h;
            out.push_back(std::move(f));
        }
    }
    return out;
}

Permutahedron perm_minkowski(const Permutahedron& a, const Permutahedron& b) {
    if (a.d() != b.d()) throw std::invalid_argument("perm_minkowski: length mismatch");
    std::vector<long long> sum(a.p.size());
    for (size_t i = 0; i < sum.size(); ++i) sum[i] = a.p[i] + b.p[i];
    return Permutahedron(std::move(sum));
}

std::vector<MonotonePath> monotone_paths(const SHypersimplex& P) {
    if (!P.proper) throw std::invalid_argument("monotone_paths: improper S-hypersimplex");
    const auto& s = P.card_set.members;
    const int d = P.d();
    std::vector<MonotonePath> out;
    std::vector<VertexSubset> chain;
    auto rec = [&](auto&& self, size_t layer, std::uint64_t below) -> void {
        if (layer == s.size()) {
            out.push_back({chain});
            return;
        }
        const int want = s[layer] - (layer == 0 ? 0 : s[layer - 1]);
        // extend by any subset of the free coordinates of the right size
        std::uint64_t free_mask = ((std::uint64_t(1) << d) - 1) & ~below;
        std::vector<int> free_bits;
        for (int i = 0; i < d; ++i)
            if ((free_mask >> i) & 1) free_bits.push_back(i);
        for (std::uint64_t t : masks_of_size(static_cast<int>(free_bits.size()), want)) {
            std::uint64_t add = 0;
            for (size_t j = 0; j < free_bits.size(); ++j)
                if ((t >> j) & 1) add |= std::uint64_t(1) << free_bits[j];
            chain.push_back({d, below | add});
            self(self, layer + 1, below | add);
            chain.pop_back();
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), [](const MonotonePath& x, const MonotonePath& y) {
        for (size_t i = 0; i < x.chain.size(); ++i)
            if (x.chain[i].bits != y.chain[i].bits) return x.chain[i].bits < y.chain[i].bits;
        return false;
    });
    return out;
}

Int monotone_path_count(const SHypersimplex& P) {
    const auto& s = P.card_set.members;
    Int n = 1;
    int used = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        n *= binomial(P.d() - used, s[i] - used);
        used = s[i];
    }
    return n;
}

std::vector<Int> coherence_certificate(const SHypersimplex& P, const MonotonePath& W) {
    const auto& s = P.card_set.members;
    const int d = P.d();
    if (W.chain.size() != s.size())
        throw std::invalid_argument("coherence_certificate: chain does not visit every layer");
    for (size_t i = 0; i < W.chain.size(); ++i) {
        if (W.chain[i].d != d || W.chain[i].cardinality() != s[i])
            throw std::invalid_argument("coherence_certificate: wrong layer cardinality");
        if (i > 0 && (W.chain[i - 1].bits & ~W.chain[i].bits) != 0)
            throw std::invalid_argument("coherence_certificate: chain not nested");
    }
    std::vector<Int> h(d, 0);
    for (const auto& a : W.chain)
        for (int i = 1; i <= d; ++i)
            if (a.contains(i)) h[i - 1] += 1;
    // the certificate property: on each layer the chain member is the unique
    // maximizer of <h, e_B>
    for (size_t i = 0; i < s.size(); ++i) {
        Int best = 0;
        for (int j = 1; j <= d; ++j)
            if (W.chain[i].contains(j)) best += h[j - 1];
        for (std::uint64_t m : masks_of_size(d, s[i])) {
            if (m == W.chain[i].bits) continue;
            Int v = 0;
            for (int j = 0; j < d; ++j)
                if ((m >> j) & 1) v += h[j];
            if (v >= best)
                throw std::logic_error("coherence certificate violated");
        }
    }
    return h;
}

Permutahedron monotone_path_polytope(const SHypersimplex& P) {
    std::vector<int> s = P.card_set.members;
    if (s.front() != 0) s.insert(s.begin(), 0);
    if (s.back() != P.d()) s.push_back(P.d());
    const int k = static_cast<int>(s.size()) - 1;
    std::vector<long long> p;
    for (int i = 0; i < k; ++i)
        for (int rep = 0; rep < s[i + 1] - s[i]; ++rep) p.push_back(k - i);
    return Permutahedron(std::move(p));
}

Int mpp_vertex_count(const SHypersimplex& P) {
    return perm_vertex_count(monotone_path_polytope(P));
}

bool fiber_formula_check(const SHypersimplex& P, int max_d) {
    const int d = P.d();
    if (d > max_d)
        throw cap_exceeded("fiber_formula_check: d exceeds the oracle scale cap");
    std::vector<int> s = P.card_set.members;
    if (s.front() != 0) s.insert(s.begin(), 0);
    if (s.back() != d) s.push_back(d);
    const size_t k = s.size() - 1;

    // cloud of sums v_0 + 2 v_1 + ... + 2 v_{k-1} + v_k, one vertex per slice
    std::vector<std::vector<std::vector<int>>> layers;
    for (size_t i = 0; i <= k; ++i) {
        const int coeff = (i == 0 || i == k) ? 1 : 2;
        std::vector<std::vector<int>> layer;
        for (std::uint64_t m : masks_of_size(d, s[i])) {
            std::vector<int> v(d, 0);
            for (int j = 0; j < d; ++j)
                if ((m >> j) & 1) v[j] = coeff;
            layer.push_back(std::move(v));
        }
        layers.push_back(std::move(layer));
    }
    std::set<std::vector<int>> cloud;
    std::vector<int> acc(d, 0);
    auto rec = [&](auto&& self, size_t layer) -> void {
        if (layer == layers.size()) {
            cloud.insert(acc);
            return;
        }
        for (const auto& v : layers[layer]) {
            for (int j = 0; j < d; ++j) acc[j] += v[j];
            self(self, layer + 1);
            for (int j = 0; j < d; ++j) acc[j] -= v[j];
        }
    };
    rec(rec, 0);

    std::vector<oracle::ExactPoint> pts;
    for (const auto& v : cloud) {
        oracle::ExactPoint p(d);
        for (int j = 0; j < d; ++j) p[j] = v[j];
        pts.push_back(std::move(p));
    }
    auto ext = oracle::extreme_points(pts);
    std::set<std::vector<int>> extremes;
    for (int idx : ext) {
        std::vector<int> v(d);
        for (int j = 0; j < d; ++j) v[j] = static_cast<int>(numerator(pts[idx][j]));
        extremes.insert(std::move(v));
    }

    // target: vertices of 2 Pi(p) - 1
    std::set<std::vector<int>> target;
    for (const auto& w : perm_vertices(monotone_path_polytope(P))) {
        std::vector<int> v(d);
        for (int j = 0; j < d; ++j) v[j] = static_cast<int>(2 * w[j] - 1);
        target.insert(std::move(v));
    }
    return extremes == target;
}

}  // namespace shyp
