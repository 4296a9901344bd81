#include "shyp/core.hpp"

#include <algorithm>
#include <set>

namespace shyp {

VertexSubset VertexSubset::from_elements(int d, const std::vector<int>& elems) {
    VertexSubset v{d, 0};
    for (int e : elems) {
        if (e < 1 || e > d) throw std::invalid_argument("subset element out of [d]");
        v.bits |= std::uint64_t(1) << (e - 1);
    }
    return v;
}

std::vector<int> VertexSubset::elements() const {
    std::vector<int> out;
    for (int i = 1; i <= d; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

oracle::ExactPoint VertexSubset::point() const {
    oracle::ExactPoint p(d);
    for (int i = 1; i <= d; ++i) p[i - 1] = contains(i) ? 1 : 0;
    return p;
}

CardinalitySet::CardinalitySet(int d_, std::vector<int> members_) : d(d_), members(std::move(members_)) {
    if (d < 1 || d > 62) throw std::invalid_argument("dimension must be in [1, 62]");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) throw std::invalid_argument("S must be nonempty");
    if (members.front() < 0 || members.back() > d)
        throw std::invalid_argument("members of S must lie in [0, d]");
}

bool CardinalitySet::contains(int s) const {
    return std::binary_search(members.begin(), members.end(), s);
}

bool is_proper(const CardinalitySet& cs) {
    if (cs.d == 1) return cs.members == std::vector<int>{0, 1};
    if (cs.size() == 1) return false;
    return !(cs.size() == 2 && cs.members[0] == 0 && cs.members[1] == cs.d);
}

SHypersimplex make_shypersimplex(int d, std::vector<int> members) {
    return SHypersimplex(CardinalitySet(d, std::move(members)));
}

SHypersimplex halfcube(int d) {
    std::vector<int> m;
    for (int s = 0; s <= d; s += 2) m.push_back(s);
    return make_shypersimplex(d, std::move(m));
}

SHypersimplex cube(int d) {
    std::vector<int> m(d + 1);
    for (int s = 0; s <= d; ++s) m[s] = s;
    return make_shypersimplex(d, std::move(m));
}

std::vector<std::uint64_t> masks_of_size(int d, int s) {
    std::vector<std::uint64_t> out;
    if (s < 0 || s > d) return out;
    if (s == 0) return {0};
    std::uint64_t m = (std::uint64_t(1) << s) - 1;
    const std::uint64_t limit = std::uint64_t(1) << d;
    while (m < limit) {
        out.push_back(m);
        // Gosper's hack: next mask with the same popcount
        std::uint64_t c = m & -m;
        std::uint64_t r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    return out;
}

std::vector<VertexSubset> vertices(const SHypersimplex& P) {
    std::vector<VertexSubset> out;
    for (int s : P.card_set.members)
        for (std::uint64_t m : masks_of_size(P.d(), s)) out.push_back({P.d(), m});
    return out;
}

Int vertex_count(const SHypersimplex& P) {
    Int n = 0;
    for (int s : P.card_set.members) n += binomial(P.d(), s);
    return n;
}

std::optional<EdgeSpec> is_edge(const SHypersimplex& P, const VertexSubset& A,
                                const VertexSubset& B) {
    if (A.d != P.d() || B.d != P.d()) throw std::invalid_argument("dimension mismatch");
    const auto& S = P.card_set;
    if (!S.contains(A.cardinality()) || !S.contains(B.cardinality()))
        throw std::invalid_argument("vertex cardinality not in S");
    if (A == B) throw std::invalid_argument("is_edge requires distinct vertices");

    const VertexSubset& lo = (A <=> B) < 0 ? A : B;
    const VertexSubset& hi = (A <=> B) < 0 ? B : A;
    const int ca = lo.cardinality(), cb = hi.cardinality();
    if (ca < cb) {
        if ((lo.bits & ~hi.bits) != 0) return std::nullopt;  // not nested
        auto it = std::find(S.members.begin(), S.members.end(), ca);
        if (it + 1 != S.members.end() && *(it + 1) == cb)
            return EdgeSpec{lo, hi, EdgeKind::Chain};
        return std::nullopt;
    }
    // equal cardinality s: swap edge iff |A ^ B| = 2 and not both s-1, s+1 in S
    if (std::popcount(lo.bits ^ hi.bits) != 2) return std::nullopt;
    if (S.contains(ca - 1) && S.contains(ca + 1)) return std::nullopt;
    return EdgeSpec{lo, hi, EdgeKind::Swap};
}

std::vector<EdgeSpec> edges(const SHypersimplex& P) {
    if (!P.proper) throw std::invalid_argument("edges: improper S-hypersimplex");
    auto verts = vertices(P);
    std::vector<EdgeSpec> out;
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (auto e = is_edge(P, verts[i], verts[j])) out.push_back(*e);
    return out;
}

Int edge_count(const SHypersimplex& P) {
    if (!P.proper) throw std::invalid_argument("edge_count: improper S-hypersimplex");
    const auto& s = P.card_set.members;
    const int d = P.d(), k = P.card_set.size();
    Int total = 0;
    // chain edges between consecutive layers; s_{k+1} = 0 vanishes via the
    // binomial convention
    for (int i = 0; i < k; ++i) {
        long long next = (i + 1 < k) ? s[i + 1] : 0;
        total += binomial(d - s[i], next - s[i]) * binomial(d, s[i]);
    }
    // swap edges within layers without both neighbors in S
    for (int j = 0; j < k; ++j) {
        if (P.card_set.contains(s[j] - 1) && P.card_set.contains(s[j] + 1)) continue;
        total += binomial(d, s[j]) * s[j] * (d - s[j]) / 2;
    }
    return total;
}

std::vector<VertexSubset> face_in_direction(const SHypersimplex& P,
                                            const std::vector<Int>& c) {
    if (static_cast<int>(c.size()) != P.d()) throw std::invalid_argument("direction length != d");
    auto verts = vertices(P);
    Int best = 0;
    bool first = true;
    std::vector<Int> vals(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) {
        Int v = 0;
        for (int j = 1; j <= P.d(); ++j)
            if (verts[i].contains(j)) v += c[j - 1];
        vals[i] = v;
        if (first || v > best) best = v, first = false;
    }
    std::vector<VertexSubset> out;
    for (size_t i = 0; i < verts.size(); ++i)
        if (vals[i] == best) out.push_back(verts[i]);
    return out;
}

std::optional<CardinalitySet> coord_upper_set(const CardinalitySet& cs) {
    std::vector<int> m;
    for (int s : cs.members)
        if (s > 0) m.push_back(s - 1);
    if (m.empty() || cs.d < 2) return std::nullopt;
    return CardinalitySet(cs.d - 1, std::move(m));
}

std::optional<CardinalitySet> coord_lower_set(const CardinalitySet& cs) {
    std::vector<int> m;
    for (int s : cs.members)
        if (s <= cs.d - 1) m.push_back(s);
    if (m.empty() || cs.d < 2) return std::nullopt;
    return CardinalitySet(cs.d - 1, std::move(m));
}

namespace {

std::vector<Int> unit_normal(int d, int i, int sign) {
    std::vector<Int> n(d, 0);
    n[i - 1] = sign;
    return n;
}

}  // namespace

std::vector<FacetSpec> facets(const SHypersimplex& P) {
    if (!P.proper || P.d() < 2)
        throw std::invalid_argument("facets: need a proper S-hypersimplex with d >= 2");
    const int d = P.d();
    const auto& s = P.card_set.members;
    std::vector<FacetSpec> out;

    if (s.back() < d)
        out.push_back({std::vector<Int>(d, 1), s.back(), FacetKind::Top, 0, 0, 0});
    if (s.front() > 0)
        out.push_back({std::vector<Int>(d, -1), -s.front(), FacetKind::Bottom, 0, 0, 0});

    auto up = coord_upper_set(P.card_set);
    if (up && is_proper(*up))
        for (int i = 1; i <= d; ++i)
            out.push_back({unit_normal(d, i, 1), 1, FacetKind::CoordUpper, i, 0, 0});
    auto low = coord_lower_set(P.card_set);
    if (low && is_proper(*low))
        for (int i = 1; i <= d; ++i)
            out.push_back({unit_normal(d, i, -1), 0, FacetKind::CoordLower, i, 0, 0});

    // joins across each gap of S: normal (s_{i+1}-h) e_I - (h-s_i) e_{I^c}
    for (size_t i = 0; i + 1 < s.size(); ++i) {
        for (int h = s[i] + 1; h < s[i + 1]; ++h) {
            const Int a = s[i + 1] - h, b = h - s[i];
            for (std::uint64_t I : masks_of_size(d, h)) {
                FacetSpec f;
                f.normal.resize(d);
                for (int j = 0; j < d; ++j) f.normal[j] = ((I >> j) & 1) ? a : -b;
                f.rhs = a * s[i];
                Int g = boost::multiprecision::gcd(a, b);
                if (g > 1) {
                    for (Int& x : f.normal) x /= g;
                    f.rhs /= g;
                }
                f.kind = FacetKind::Join;
                f.set_mask = I;
                f.set_size = h;
                out.push_back(std::move(f));
            }
        }
    }

    std::set<std::pair<std::vector<Int>, Int>> seen;
    for (const auto& f : out)
        if (!seen.emplace(f.normal, f.rhs).second)
            throw std::logic_error("facets: duplicate normal after canonicalization");
    return out;
}

Int facet_count(const SHypersimplex& P) {
    if (!P.proper || P.d() < 2)
        throw std::invalid_argument("facet_count: need a proper S-hypersimplex with d >= 2");
    const int d = P.d();
    const auto& s = P.card_set.members;
    Int n = 0;
    if (s.back() < d) n += 1;
    if (s.front() > 0) n += 1;
    auto up = coord_upper_set(P.card_set);
    if (up && is_proper(*up)) n += d;
    auto low = coord_lower_set(P.card_set);
    if (low && is_proper(*low)) n += d;
    for (size_t i = 0; i + 1 < s.size(); ++i)
        for (int h = s[i] + 1; h < s[i + 1]; ++h) n += binomial(d, h);
    return n;
}

std::vector<SHypersimplex> cayley_decomposition(const SHypersimplex& P) {
    const auto& s = P.card_set.members;
    if (s.size() < 2)
        throw std::invalid_argument("cayley_decomposition: |S| must be at least 2");
    std::vector<SHypersimplex> out;
    for (size_t i = 0; i + 1 < s.size(); ++i)
        out.push_back(make_shypersimplex(P.d(), {s[i], s[i + 1]}));
    return out;
}

std::vector<VertexSubset> slice(const SHypersimplex& P, int s) {
    if (!P.card_set.contains(s)) throw std::invalid_argument("slice level not in S");
    std::vector<VertexSubset> out;
    for (std::uint64_t m : masks_of_size(P.d(), s)) out.push_back({P.d(), m});
    return out;
}

Int extension_upper_bound(const SHypersimplex& P) {
    if (!P.proper) throw std::invalid_argument("extension_upper_bound: improper S-hypersimplex");
    return Int(2) * P.d() * (P.card_set.size() - 1);
}

}  // namespace shyp
