#include "shyp/oracle.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace shyp::oracle {

namespace {

// ---------------------------------------------------------------------------
// exact rational linear algebra (small dense systems)
// ---------------------------------------------------------------------------

// Row echelon over Q in place; returns rank.
int echelonize(std::vector<std::vector<Rat>>& m) {
    if (m.empty()) return 0;
    const size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        for (size_t r = row + 1; r < m.size(); ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[row][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
    }
    return static_cast<int>(row);
}

// Solve the square system A x = b; throws on a singular matrix.
std::vector<Rat> solve_square(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    const size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::runtime_error("singular linear system");
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rat> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

std::vector<Rat> sub(const ExactPoint& a, const ExactPoint& b) {
    std::vector<Rat> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Rat dot_rat(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Affine hull: origin index 0 plus a maximal independent set of differences.
struct AffineHull {
    ExactPoint origin;
    std::vector<std::vector<Rat>> dirs;  // n independent direction vectors
    std::vector<std::vector<Rat>> gram;  // dirs * dirs^T
};

AffineHull affine_hull(const std::vector<ExactPoint>& points) {
    if (points.empty()) throw std::invalid_argument("affine hull of empty set");
    AffineHull h;
    h.origin = points[0];
    std::vector<std::vector<Rat>> ech;
    for (size_t i = 1; i < points.size(); ++i) {
        auto d = sub(points[i], h.origin);
        auto trial = ech;
        trial.push_back(d);
        if (echelonize(trial) > static_cast<int>(ech.size())) {
            h.dirs.push_back(d);
            ech.push_back(d);
            echelonize(ech);
        }
    }
    const size_t n = h.dirs.size();
    h.gram.assign(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) h.gram[i][j] = dot_rat(h.dirs[i], h.dirs[j]);
    return h;
}

// Coordinates of p within the hull: solve gram * y = dirs * (p - origin).
std::vector<Rat> hull_coords(const AffineHull& h, const ExactPoint& p) {
    auto d = sub(p, h.origin);
    std::vector<Rat> rhs(h.dirs.size());
    for (size_t j = 0; j < h.dirs.size(); ++j) rhs[j] = dot_rat(h.dirs[j], d);
    return solve_square(h.gram, rhs);
}

// ---------------------------------------------------------------------------
// integer kernel for the spanning-subset facet search
// ---------------------------------------------------------------------------

std::vector<Int> clear_denominators(const std::vector<Rat>& v, const Int& scale) {
    std::vector<Int> z(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * scale;
        z[i] = numerator(s);  // denominator is 1 by construction
    }
    return z;
}

void sign_normalize(std::vector<Int>& v) {
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : v) y = -y;
        break;
    }
}

struct VecHash {
    size_t operator()(const std::vector<Int>& v) const {
        size_t seed = v.size();
        for (const Int& x : v) boost::hash_combine(seed, x);
        return seed;
    }
};

struct HyperplaneZ {
    std::vector<Int> normal;  // oriented: all points on the <= side
    Int rhs;
    std::vector<int> incident;
};

// Enumerates all hyperplanes spanned by n-subsets of z (full-dimensional
// integer point set in R^n), keeping the one-sided ones. The subset search
// maintains a fraction-free (Bareiss) echelon of difference rows so dependent
// prefixes are pruned early and entries stay minor-sized.
class FacetSearch {
  public:
    FacetSearch(const std::vector<std::vector<Int>>& z, int n) : z_(z), n_(n) {}

    std::vector<HyperplaneZ> run() {
        subset_.clear();
        dfs(0);
        std::vector<HyperplaneZ> out;
        for (auto& f : found_) out.push_back(std::move(f));
        return out;
    }

  private:
    void dfs(size_t start) {
        if (static_cast<int>(subset_.size()) == n_) {
            leaf();
            return;
        }
        const size_t need = n_ - subset_.size();
        for (size_t i = start; i + need <= z_.size(); ++i) {
            if (subset_.empty()) {
                subset_.push_back(static_cast<int>(i));
                dfs(i + 1);
                subset_.pop_back();
                continue;
            }
            std::vector<Int> row(n_);
            for (int c = 0; c < n_; ++c) row[c] = z_[i][c] - z_[subset_[0]][c];
            if (!reduce(row)) continue;  // affinely dependent on prefix
            rows_.push_back(std::move(row));
            subset_.push_back(static_cast<int>(i));
            dfs(i + 1);
            subset_.pop_back();
            rows_.pop_back();
        }
    }

    // One-step fraction-free reduction against the echelon; false if row
    // vanishes (dependent). Entries remain bordered minors of the input.
    bool reduce(std::vector<Int>& row) const {
        Int prev = 1;
        for (size_t k = 0; k < rows_.size(); ++k) {
            const int pc = pivcol(k);
            const Int& piv = rows_[k][pc];
            const Int coeff = row[pc];
            for (int c = 0; c < n_; ++c) {
                row[c] = (piv * row[c] - coeff * rows_[k][c]) / prev;
            }
            prev = piv;
        }
        for (int c = 0; c < n_; ++c)
            if (row[c] != 0) return true;
        return false;
    }

    int pivcol(size_t k) const {
        for (int c = 0; c < n_; ++c)
            if (rows_[k][c] != 0) return c;
        return -1;  // unreachable for stored rows
    }

    void leaf() {
        // Null vector of the (n-1) x n echelon: integer back-substitution,
        // processing rows last-to-first (later rows have zeros in earlier
        // pivot columns, so scaling the tail keeps them satisfied).
        std::vector<int> pivots(rows_.size());
        std::vector<bool> is_piv(n_, false);
        for (size_t k = 0; k < rows_.size(); ++k) {
            pivots[k] = pivcol(k);
            is_piv[pivots[k]] = true;
        }
        std::vector<Int> a(n_, 0);
        for (int c = 0; c < n_; ++c)
            if (!is_piv[c]) a[c] = 1;
        for (size_t t = rows_.size(); t-- > 0;) {
            const int pc = pivots[t];
            Int s = 0;
            for (int c = 0; c < n_; ++c)
                if (c != pc) s += rows_[t][c] * a[c];
            const Int& piv = rows_[t][pc];
            for (int c = 0; c < n_; ++c)
                if (c != pc) a[c] *= piv;
            a[pc] = -s;
        }
        make_primitive(a);
        sign_normalize(a);
        std::vector<Int> key = a;
        key.push_back(dot(a, z_[subset_[0]]));
        if (!seen_.insert(key).second) return;

        const Int b = key.back();
        Int lo = b, hi = b;
        std::vector<Int> vals(z_.size());
        for (size_t i = 0; i < z_.size(); ++i) {
            vals[i] = dot(a, z_[i]);
            lo = std::min(lo, vals[i]);
            hi = std::max(hi, vals[i]);
        }
        if (lo < b && hi > b) return;  // points on both sides
        HyperplaneZ f;
        if (hi > b) {
            for (Int& x : a) x = -x;
            f.rhs = -b;
        } else {
            f.rhs = b;
        }
        f.normal = std::move(a);
        for (size_t i = 0; i < z_.size(); ++i)
            if (vals[i] == b) f.incident.push_back(static_cast<int>(i));
        found_.push_back(std::move(f));
    }

    const std::vector<std::vector<Int>>& z_;
    int n_;
    std::vector<std::vector<Int>> rows_;
    std::vector<int> subset_;
    std::unordered_set<std::vector<Int>, VecHash> seen_;
    std::vector<HyperplaneZ> found_;
};

// Lift a hull-coordinate normal back to a canonical ambient inequality.
// The ambient normal is the unique representative in the span of the hull
// directions: c = dirs^T w with gram * w = a.
std::pair<std::vector<Int>, Int> lift_normal(const AffineHull& h,
                                             const std::vector<ExactPoint>& points,
                                             const std::vector<Rat>& a) {
    const size_t d = h.origin.size();
    std::vector<Rat> c(d, 0);
    if (h.dirs.empty()) throw std::invalid_argument("zero-dimensional hull");
    auto w = solve_square(h.gram, a);
    for (size_t j = 0; j < h.dirs.size(); ++j)
        for (size_t i = 0; i < d; ++i) c[i] += w[j] * h.dirs[j][i];
    Int scale = 1;
    for (const Rat& x : c) scale = boost::multiprecision::lcm(scale, denominator(x));
    std::vector<Int> cz = clear_denominators(c, scale);
    make_primitive(cz);
    // tight right-hand side over all points; orientation inherited from a
    Rat best;
    bool first = true;
    for (const auto& p : points) {
        Rat v = 0;
        for (size_t i = 0; i < d; ++i) v += Rat(cz[i]) * p[i];
        if (first || v > best) best = v, first = false;
    }
    if (denominator(best) != 1)
        throw std::runtime_error("non-integral facet offset for integer normal");
    return {std::move(cz), numerator(best)};
}

bool facet_less(const OracleFacet& x, const OracleFacet& y) {
    if (x.normal != y.normal) return x.normal < y.normal;
    return x.rhs < y.rhs;
}

struct RatVecHash {
    size_t operator()(const std::vector<Rat>& v) const {
        size_t seed = v.size();
        for (const Rat& x : v) {
            boost::hash_combine(seed, numerator(x));
            boost::hash_combine(seed, denominator(x));
        }
        return seed;
    }
};

}  // namespace

int affine_dimension(const std::vector<ExactPoint>& points) {
    if (points.empty()) throw std::invalid_argument("affine_dimension of empty set");
    std::vector<std::vector<Rat>> diffs;
    for (size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
    return echelonize(diffs);
}

std::vector<OracleFacet> brute_facets(const std::vector<ExactPoint>& points,
                                      const OracleCaps& caps) {
    AffineHull hull = affine_hull(points);
    const int n = static_cast<int>(hull.dirs.size());
    if (n == 0) throw std::invalid_argument("brute_facets: points span dimension 0");
    if (points.size() > caps.max_points || n > caps.max_dim)
        throw cap_exceeded("brute_facets: instance exceeds oracle caps (" +
                           std::to_string(points.size()) + " points, dim " +
                           std::to_string(n) + ")");

    // integer hull coordinates
    std::vector<std::vector<Rat>> ys(points.size());
    Int scale = 1;
    for (size_t i = 0; i < points.size(); ++i) {
        ys[i] = hull_coords(hull, points[i]);
        for (const Rat& x : ys[i]) scale = boost::multiprecision::lcm(scale, denominator(x));
    }
    std::vector<std::vector<Int>> z(points.size());
    for (size_t i = 0; i < points.size(); ++i) z[i] = clear_denominators(ys[i], scale);

    FacetSearch search(z, n);
    std::vector<OracleFacet> out;
    for (const HyperplaneZ& f : search.run()) {
        std::vector<Rat> a(f.normal.size());
        for (size_t i = 0; i < a.size(); ++i) a[i] = Rat(f.normal[i]);
        OracleFacet of;
        std::tie(of.normal, of.rhs) = lift_normal(hull, points, a);
        of.incident = f.incident;
        out.push_back(std::move(of));
    }
    std::sort(out.begin(), out.end(), facet_less);
    return out;
}

std::vector<std::pair<int, int>> brute_edges(const std::vector<ExactPoint>& points,
                                             const OracleCaps& caps) {
    const size_t npts = points.size();
    if (npts == 2) return {{0, 1}};
    auto facets = brute_facets(points, caps);
    const size_t words = (facets.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> mask(npts, std::vector<std::uint64_t>(words, 0));
    for (size_t f = 0; f < facets.size(); ++f)
        for (int v : facets[f].incident) mask[v][f / 64] |= std::uint64_t(1) << (f % 64);

    std::vector<std::pair<int, int>> edges;
    std::vector<std::uint64_t> common(words);
    for (size_t v = 0; v < npts; ++v) {
        for (size_t w = v + 1; w < npts; ++w) {
            for (size_t k = 0; k < words; ++k) common[k] = mask[v][k] & mask[w][k];
            bool is_edge = true;
            for (size_t j = 0; j < npts && is_edge; ++j) {
                if (j == v || j == w) continue;
                bool contains = true;
                for (size_t k = 0; k < words; ++k)
                    if ((common[k] & ~mask[j][k]) != 0) {
                        contains = false;
                        break;
                    }
                if (contains) is_edge = false;  // minimal face exceeds {v, w}
            }
            if (is_edge) edges.emplace_back(static_cast<int>(v), static_cast<int>(w));
        }
    }
    return edges;
}

std::vector<int> extreme_points(const std::vector<ExactPoint>& points) {
    // dedup, keeping the first index of each distinct point
    std::unordered_map<std::vector<Rat>, int, RatVecHash> first;
    std::vector<int> reps;
    for (size_t i = 0; i < points.size(); ++i)
        if (first.emplace(points[i], static_cast<int>(i)).second)
            reps.push_back(static_cast<int>(i));

    // midpoint sweep: a point that is the midpoint of two other current
    // points is a convex combination and can be discarded outright
    std::unordered_set<std::vector<Rat>, RatVecHash> alive;
    for (int r : reps) alive.insert(points[r]);
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = reps.begin(); it != reps.end();) {
            const ExactPoint& q = points[*it];
            bool drop = false;
            for (int r : reps) {
                if (r == *it) continue;
                const ExactPoint& a = points[r];
                std::vector<Rat> b(q.size());
                for (size_t c = 0; c < q.size(); ++c) b[c] = 2 * q[c] - a[c];
                if (b != q && alive.count(b)) {
                    drop = true;
                    break;
                }
            }
            if (drop) {
                alive.erase(q);
                it = reps.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
    }

    // exact LP sweep over the survivors
    for (auto it = reps.begin(); it != reps.end();) {
        std::vector<ExactPoint> others;
        for (int r : reps)
            if (r != *it) others.push_back(points[r]);
        if (!others.empty() && in_convex_hull(points[*it], others))
            it = reps.erase(it);
        else
            ++it;
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

bool in_convex_hull(const ExactPoint& p, const std::vector<ExactPoint>& pts) {
    // phase-1 simplex with Bland's rule: find lambda >= 0 with
    // sum lambda_i pts_i = p, sum lambda_i = 1
    const size_t d = p.size();
    const size_t m = d + 1;
    const size_t n = pts.size();
    std::vector<std::vector<Rat>> tab(m, std::vector<Rat>(n + m + 1, 0));
    for (size_t r = 0; r < d; ++r) {
        for (size_t j = 0; j < n; ++j) tab[r][j] = pts[j][r];
        tab[r][n + m] = p[r];
    }
    for (size_t j = 0; j < n; ++j) tab[d][j] = 1;
    tab[d][n + m] = 1;
    for (size_t r = 0; r < m; ++r) {
        if (tab[r][n + m] < 0)
            for (auto& x : tab[r]) x = -x;
        tab[r][n + r] = 1;
    }
    std::vector<size_t> basis(m);
    for (size_t r = 0; r < m; ++r) basis[r] = n + r;

    // objective: minimize sum of artificials; reduced costs via row sums
    std::vector<Rat> obj(n + m + 1, 0);
    for (size_t j = 0; j <= n + m; ++j)
        for (size_t r = 0; r < m; ++r) obj[j] -= tab[r][j];
    for (size_t r = 0; r < m; ++r) obj[n + r] = 0;

    while (true) {
        size_t enter = n + m;
        for (size_t j = 0; j < n + m; ++j)
            if (obj[j] < 0) {
                enter = j;
                break;
            }
        if (enter == n + m) break;
        size_t leave = m;
        Rat best;
        for (size_t r = 0; r < m; ++r) {
            if (tab[r][enter] <= 0) continue;
            Rat ratio = tab[r][n + m] / tab[r][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[r] < basis[leave]))
                leave = r, best = ratio;
        }
        if (leave == m) break;  // unbounded cannot occur in phase 1
        Rat piv = tab[leave][enter];
        for (auto& x : tab[leave]) x /= piv;
        for (size_t r = 0; r < m; ++r) {
            if (r == leave || tab[r][enter] == 0) continue;
            Rat f = tab[r][enter];
            for (size_t j = 0; j <= n + m; ++j) tab[r][j] -= f * tab[leave][j];
        }
        Rat fo = obj[enter];
        for (size_t j = 0; j <= n + m; ++j) obj[j] -= fo * tab[leave][j];
        basis[leave] = enter;
    }
    Rat value = 0;
    for (size_t r = 0; r < m; ++r)
        if (basis[r] >= n) value += tab[r][n + m];
    return value == 0;
}

Rat simplex_volume(const std::vector<ExactPoint>& points) {
    if (points.empty()) throw std::invalid_argument("simplex_volume: empty input");
    const size_t n = points[0].size();
    if (points.size() != n + 1)
        throw std::invalid_argument("simplex_volume: need exactly n+1 points in dimension n");
    std::vector<std::vector<Rat>> m;
    for (size_t i = 1; i < points.size(); ++i) m.push_back(sub(points[i], points[0]));
    Rat det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[col], m[piv]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    if (det < 0) det = -det;
    return det / Rat(factorial(static_cast<long long>(n)));
}

int descent_count(const std::vector<int>& perm) {
    const int d = static_cast<int>(perm.size());
    std::vector<bool> seen(d + 1, false);
    for (int x : perm) {
        if (x < 1 || x > d || seen[x])
            throw std::invalid_argument("descent_count: not a permutation of 1..d");
        seen[x] = true;
    }
    int c = 0;
    for (int i = 0; i + 1 < d; ++i)
        if (perm[i] > perm[i + 1]) ++c;
    return c;
}

std::optional<std::vector<Rat>> point_in_simplex(const std::vector<ExactPoint>& simplex,
                                                 const ExactPoint& p, bool strict) {
    const size_t n = p.size();
    if (simplex.size() != n + 1)
        throw std::invalid_argument("point_in_simplex: need n+1 vertices");
    // solve for barycentrics: [v_i; 1] * lambda = [p; 1]
    std::vector<std::vector<Rat>> a(n + 1, std::vector<Rat>(n + 1));
    std::vector<Rat> b(n + 1);
    for (size_t r = 0; r < n; ++r) {
        for (size_t j = 0; j <= n; ++j) a[r][j] = simplex[j][r];
        b[r] = p[r];
    }
    for (size_t j = 0; j <= n; ++j) a[n][j] = 1;
    b[n] = 1;
    std::vector<Rat> lambda = solve_square(a, b);
    for (const Rat& l : lambda) {
        if (strict ? (l <= 0) : (l < 0)) return std::nullopt;
    }
    return lambda;
}

std::pair<std::vector<Int>, Int> hull_canonical_inequality(
    const std::vector<ExactPoint>& points, const std::vector<Rat>& functional) {
    AffineHull hull = affine_hull(points);
    std::vector<Rat> a(hull.dirs.size());
    for (size_t j = 0; j < hull.dirs.size(); ++j) a[j] = dot_rat(hull.dirs[j], functional);
    return lift_normal(hull, points, a);
}

}  // namespace shyp::oracle
