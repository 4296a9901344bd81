// shyp: construct S-hypersimplices, enumerate their faces, triangulate, and
// cross-check every structural formula against the exact brute-force oracle.

#include "shyp/json_io.hpp"
#include "shyp/oracle.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

namespace {

using namespace shyp;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitCapViolation = 3;

struct Options {
    int d = 0;
    std::string s_spec;
    std::string format = "text";
    int max_d = 12;
    int oracle_max_d = 5;
    std::string order = "lex";
    std::uint64_t seed = 1;
    int level = 0;
    std::string against = "oracle";
    std::string checks;
};

std::vector<int> parse_s(const std::string& spec, int d) {
    std::vector<int> members;
    if (spec == "even") {
        for (int s = 0; s <= d; s += 2) members.push_back(s);
        return members;
    }
    if (spec == "all") {
        for (int s = 0; s <= d; ++s) members.push_back(s);
        return members;
    }
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, ',')) {
        size_t pos = 0;
        int v = std::stoi(token, &pos);
        if (pos != token.size()) throw std::invalid_argument("bad member in -S: " + token);
        members.push_back(v);
    }
    if (members.empty()) throw std::invalid_argument("-S must list at least one value");
    return members;
}

void enforce_formula_cap(const Options& opt) {
    if (opt.d > opt.max_d)
        throw cap_exceeded("d=" + std::to_string(opt.d) + " exceeds --max-d=" +
                           std::to_string(opt.max_d));
}

SHypersimplex polytope_from(const Options& opt) {
    return make_shypersimplex(opt.d, parse_s(opt.s_spec, opt.d));
}

PullOrder order_from(const Options& opt, int n) {
    if (opt.order == "lex") return PullOrder::lex(n);
    if (opt.order == "random") return PullOrder::random(n, opt.seed);
    throw std::invalid_argument("--order must be lex or random");
}

void emit(const Options& opt, const Json& j, const std::string& text) {
    if (opt.format == "json")
        std::cout << j.dump() << "\n";
    else
        std::cout << text;
}

Json polytope_header(const SHypersimplex& P) {
    return Json{{"d", P.d()}, {"S", P.card_set.members}};
}

// ---------------------------------------------------------------------------
// verify: formula vs oracle, one reported line per check
// ---------------------------------------------------------------------------

struct VerifyReport {
    int failed = 0;
    std::set<std::string> enabled;

    bool wants(const std::string& check) const {
        return enabled.empty() || enabled.count(check);
    }
    void line(bool ok, const std::string& label, const std::string& detail) {
        if (!ok) ++failed;
        std::cout << (ok ? "[ ok ] " : "[FAIL] ") << label;
        if (!detail.empty()) std::cout << ": " << detail;
        std::cout << "\n";
    }
};

std::vector<oracle::ExactPoint> vertex_points(const SHypersimplex& P) {
    std::vector<oracle::ExactPoint> pts;
    for (const auto& v : vertices(P)) pts.push_back(v.point());
    return pts;
}

std::set<std::pair<std::vector<Int>, Int>> normal_set(const std::vector<FacetSpec>& fs) {
    std::set<std::pair<std::vector<Int>, Int>> out;
    for (const auto& f : fs) out.emplace(f.normal, f.rhs);
    return out;
}

void verify_instance(const SHypersimplex& P, VerifyReport& rep) {
    const std::string tag = "d=" + std::to_string(P.d()) + " S=" + s_list(P.card_set);
    auto pts = vertex_points(P);
    auto oracle_edges = oracle::brute_edges(pts);

    if (rep.wants("edges")) {
        std::set<std::pair<int, int>> formula;
        auto verts = vertices(P);
        std::map<std::uint64_t, int> index;
        for (size_t i = 0; i < verts.size(); ++i) index[verts[i].bits] = static_cast<int>(i);
        for (const auto& e : edges(P)) {
            int a = index[e.a.bits], b = index[e.b.bits];
            formula.emplace(std::min(a, b), std::max(a, b));
        }
        std::set<std::pair<int, int>> got(oracle_edges.begin(), oracle_edges.end());
        bool ok = formula == got && Int(formula.size()) == edge_count(P);
        rep.line(ok, "edges " + tag,
                 "formula " + std::to_string(formula.size()) + ", oracle " +
                     std::to_string(got.size()) + ", count " + edge_count(P).str());
    }

    if (rep.wants("facets") && P.d() >= 2) {
        auto formula = normal_set(facets(P));
        std::set<std::pair<std::vector<Int>, Int>> got;
        for (const auto& f : oracle::brute_facets(pts)) got.emplace(f.normal, f.rhs);
        bool ok = formula == got && Int(formula.size()) == facet_count(P);
        rep.line(ok, "facets " + tag,
                 "formula " + std::to_string(formula.size()) + ", oracle " +
                     std::to_string(got.size()));
    }

    if (rep.wants("slices")) {
        bool ok = true;
        for (int s : P.card_set.members) {
            auto layer = slice(P, s);
            auto expect = vertices(make_shypersimplex(P.d(), {s}));
            if (layer != expect) ok = false;
            // no long edges: no oracle edge may cross the level strictly
            auto verts = vertices(P);
            for (auto [a, b] : oracle_edges) {
                int ca = verts[a].cardinality(), cb = verts[b].cardinality();
                if (std::min(ca, cb) < s && s < std::max(ca, cb)) ok = false;
            }
        }
        rep.line(ok, "slices " + tag, std::to_string(P.card_set.size()) + " levels");
    }

    if (rep.wants("fiber")) {
        bool ok = fiber_formula_check(P);
        rep.line(ok, "fiber " + tag, "monotone path polytope identity");
    }

    if (rep.wants("coherence")) {
        auto paths = monotone_paths(P);
        bool ok = Int(paths.size()) == monotone_path_count(P);
        for (const auto& w : paths) {
            try {
                coherence_certificate(P, w);
            } catch (const std::logic_error&) {
                ok = false;
            }
        }
        rep.line(ok, "coherence " + tag, std::to_string(paths.size()) + " paths certified");
    }

    if (rep.wants("volume")) {
        const int n = static_cast<int>(pts.size());
        FacetCache cache;
        Rat v1 = triangulation_volume(pull_shypersimplex(P, PullOrder::lex(n), {}, &cache));
        Rat v2 = triangulation_volume(
            pull_shypersimplex(P, PullOrder::random(n, 20180417), {}, &cache));
        rep.line(v1 == v2, "volume " + tag,
                 "pull volume " + rat_to_string(v1) + " under two orders");
    }
}

void verify_global(const Options& opt, VerifyReport& rep) {
    if (rep.wants("tdcount")) {
        bool ok = true;
        for (int d = 1; d <= 8; ++d)
            if (halfcube_pull_count(d) != halfcube_pull_count_recurrence(d)) ok = false;
        for (int d = 3; d <= 8; ++d)
            if (Int(enumerate_tau_b_pairs(d).size()) != halfcube_pull_count(d)) ok = false;
        for (int d = 3; d <= std::min(opt.d, 6); ++d)
            for (std::uint64_t seed = 1; seed <= 3; ++seed)
                if (Int(pull_halfcube(d, PullOrder::random(1 << (d - 1), seed)).simplices.size()) !=
                    halfcube_pull_count(d))
                    ok = false;
        rep.line(ok, "tdcount", "closed form, recurrence, (tau,B) pairs, pulls");
    }

    if (rep.wants("volumes")) {
        bool ok = true;
        const int dmax = std::min(opt.d, 4);
        for (int d = 1; d <= dmax; ++d)
            for (int k = 0; k < d; ++k)
                for (int l = k + 1; l <= d; ++l)
                    if (!volume_identity_check(d, k, l)) ok = false;
        rep.line(ok, "volumes", "Eulerian identities up to d=" + std::to_string(dmax));
    }

    if (rep.wants("minkowski")) {
        bool ok = true;
        const int dmax = std::min(opt.d, 3);
        for (int d = 1; d <= dmax; ++d) {
            std::vector<std::vector<long long>> decreasing;
            std::vector<long long> cur(d);
            auto gen = [&](auto&& self, int pos, long long hi) -> void {
                if (pos == d) {
                    decreasing.push_back(cur);
                    return;
                }
                for (long long v = 0; v <= hi; ++v) {
                    cur[pos] = v;
                    self(self, pos + 1, v);
                }
            };
            gen(gen, 0, 2);
            for (const auto& p : decreasing)
                for (const auto& q : decreasing) {
                    Permutahedron a{std::vector<long long>(p)}, b{std::vector<long long>(q)};
                    Permutahedron sum = perm_minkowski(a, b);
                    std::vector<oracle::ExactPoint> cloud;
                    for (const auto& va : perm_vertices(a))
                        for (const auto& vb : perm_vertices(b)) {
                            oracle::ExactPoint pt(d);
                            for (int j = 0; j < d; ++j) pt[j] = va[j] + vb[j];
                            cloud.push_back(std::move(pt));
                        }
                    std::set<oracle::ExactPoint> got;
                    for (int idx : oracle::extreme_points(cloud)) got.insert(cloud[idx]);
                    std::set<oracle::ExactPoint> expect;
                    for (const auto& w : perm_vertices(sum)) {
                        oracle::ExactPoint pt(d);
                        for (int j = 0; j < d; ++j) pt[j] = w[j];
                        expect.insert(std::move(pt));
                    }
                    if (got != expect) ok = false;
                }
        }
        rep.line(ok, "minkowski", "Pi(p) + Pi(q) = Pi(p+q) up to d=" + std::to_string(dmax));
    }
}

int run_verify(const Options& opt) {
    if (opt.against != "oracle")
        throw std::invalid_argument("--against supports only 'oracle'");
    if (opt.d > opt.oracle_max_d)
        throw cap_exceeded("verify needs d <= oracle cap " + std::to_string(opt.oracle_max_d) +
                           " (override with --oracle-max-d)");
    VerifyReport rep;
    if (!opt.checks.empty()) {
        std::istringstream in(opt.checks);
        std::string token;
        while (std::getline(in, token, ',')) rep.enabled.insert(token);
    }
    if (!opt.s_spec.empty()) {
        verify_instance(polytope_from(opt), rep);
    } else {
        for (int d = 2; d <= opt.d; ++d) {
            const std::uint64_t subsets = std::uint64_t(1) << (d + 1);
            for (std::uint64_t m = 1; m < subsets; ++m) {
                std::vector<int> members;
                for (int s = 0; s <= d; ++s)
                    if ((m >> s) & 1) members.push_back(s);
                SHypersimplex P = make_shypersimplex(d, std::move(members));
                if (P.proper) verify_instance(P, rep);
            }
        }
        verify_global(opt, rep);
    }
    std::cout << (rep.failed == 0 ? "verify: all checks passed\n"
                                  : "verify: " + std::to_string(rep.failed) + " check(s) FAILED\n");
    return rep.failed == 0 ? 0 : kExitVerifyFailure;
}

// ---------------------------------------------------------------------------

int run(const Options& opt, const std::string& cmd) {
    if (cmd == "tdcount") {
        enforce_formula_cap(opt);
        Int t = halfcube_pull_count(opt.d);
        emit(opt, Json{{"d", opt.d}, {"t", int_json(t)}}, t.str() + "\n");
        return 0;
    }
    if (cmd == "verify") return run_verify(opt);

    enforce_formula_cap(opt);
    SHypersimplex P = polytope_from(opt);

    if (cmd == "vertices") {
        Json j = polytope_header(P);
        j["count"] = int_json(vertex_count(P));
        Json arr = Json::array();
        for (const auto& v : vertices(P)) {
            std::vector<int> digits(P.d());
            for (int i = 1; i <= P.d(); ++i) digits[i - 1] = v.contains(i) ? 1 : 0;
            arr.push_back(digits);
        }
        j["vertices"] = arr;
        emit(opt, j, vertices_text(P));
        return 0;
    }
    if (cmd == "edges") {
        auto es = edges(P);
        Json j = polytope_header(P);
        j["count"] = es.size();
        Json arr = Json::array();
        for (const auto& e : es) arr.push_back(edge_json(e));
        j["edges"] = arr;
        std::ostringstream os;
        os << "d=" << P.d() << " S=" << s_list(P.card_set) << " edges=" << es.size() << "\n";
        for (const auto& e : es) {
            os << "{";
            auto ea = e.a.elements();
            for (size_t i = 0; i < ea.size(); ++i) os << (i ? "," : "") << ea[i];
            os << "} -- {";
            auto eb = e.b.elements();
            for (size_t i = 0; i < eb.size(); ++i) os << (i ? "," : "") << eb[i];
            os << "} [" << (e.kind == EdgeKind::Chain ? "chain" : "swap") << "]\n";
        }
        emit(opt, j, os.str());
        return 0;
    }
    if (cmd == "facets") {
        auto fs = facets(P);
        Json j = polytope_header(P);
        j["count"] = fs.size();
        Json arr = Json::array();
        for (const auto& f : fs) arr.push_back(facet_json(f));
        j["facets"] = arr;
        std::ostringstream os;
        os << "d=" << P.d() << " S=" << s_list(P.card_set) << " facets=" << fs.size() << "\n";
        for (const auto& f : fs) {
            os << kind_string(f.kind) << ": ";
            for (size_t i = 0; i < f.normal.size(); ++i) os << (i ? " " : "") << f.normal[i];
            os << " <= " << f.rhs << "\n";
        }
        emit(opt, j, os.str());
        return 0;
    }
    if (cmd == "decompose") {
        auto pieces = cayley_decomposition(P);
        Json j = polytope_header(P);
        Json arr = Json::array();
        std::ostringstream os;
        for (const auto& piece : pieces) {
            arr.push_back(polytope_header(piece));
            os << "Delta(" << piece.d() << ",{" << s_list(piece.card_set) << "})\n";
        }
        j["pieces"] = arr;
        emit(opt, j, os.str());
        return 0;
    }
    if (cmd == "slice") {
        auto layer = slice(P, opt.level);
        Json j = polytope_header(P);
        j["level"] = opt.level;
        Json arr = Json::array();
        std::ostringstream os;
        for (const auto& v : layer) {
            arr.push_back(subset_json(v));
            for (int i = 1; i <= P.d(); ++i) os << (i > 1 ? " " : "") << (v.contains(i) ? 1 : 0);
            os << "\n";
        }
        j["vertices"] = arr;
        emit(opt, j, os.str());
        return 0;
    }
    if (cmd == "triangulate" || cmd == "volume") {
        auto verts = vertices(P);
        PullOrder order = order_from(opt, static_cast<int>(verts.size()));
        Triangulation T = pull_shypersimplex(P, order);
        Rat vol = triangulation_volume(T);
        Json j = polytope_header(P);
        j["order"] = opt.order;
        if (opt.order == "random") j["seed"] = opt.seed;
        j["volume"] = rat_to_string(vol);
        if (cmd == "volume") {
            emit(opt, j, rat_to_string(vol) + "\n");
            return 0;
        }
        j["num_simplices"] = T.simplices.size();
        j["simplices"] = triangulation_json(T);
        std::ostringstream os;
        os << "simplices=" << T.simplices.size() << " volume=" << rat_to_string(vol) << "\n";
        for (const auto& s : T.simplices) {
            for (size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i].bits;
            os << "\n";
        }
        emit(opt, j, os.str());
        return 0;
    }
    if (cmd == "paths") {
        auto paths = monotone_paths(P);
        Json j = polytope_header(P);
        j["count"] = paths.size();
        j["paths"] = paths_json(paths);
        std::ostringstream os;
        os << "paths=" << paths.size() << "\n";
        for (const auto& w : paths) {
            for (size_t i = 0; i < w.chain.size(); ++i) {
                if (i) os << " < ";
                os << "{";
                auto e = w.chain[i].elements();
                for (size_t t = 0; t < e.size(); ++t) os << (t ? "," : "") << e[t];
                os << "}";
            }
            os << "\n";
        }
        emit(opt, j, os.str());
        return 0;
    }
    if (cmd == "mpp") {
        Json j = mpp_json(P);
        emit(opt, j, j.dump() + "\n");  // the JSON document is the canonical output
        return 0;
    }
    if (cmd == "extbound") {
        Int bound = extension_upper_bound(P);
        Int fc = facet_count(P);
        Json j = polytope_header(P);
        j["extension_upper_bound"] = int_json(bound);
        j["facet_count"] = int_json(fc);
        std::ostringstream os;
        os << "extension bound " << bound << (bound < fc ? " < " : " >= ") << fc
           << " facets\n";
        emit(opt, j, os.str());
        return 0;
    }
    throw std::invalid_argument("unknown subcommand " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"S-hypersimplex toolkit: faces, triangulations, volumes, and "
                 "monotone path polytopes with exact arithmetic"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("SHYP_MAX_D")) opt.max_d = std::atoi(env);

    auto add_common = [&](CLI::App* sub, bool need_s) {
        sub->add_option("-d,--dimension", opt.d, "ambient dimension")->required();
        auto* s = sub->add_option("-S,--set", opt.s_spec, "comma list, or 'even'/'all'");
        if (need_s) s->required();
        sub->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--max-d", opt.max_d, "cap for formula enumerations");
    };

    for (const char* name : {"vertices", "edges", "facets", "decompose", "paths", "mpp",
                             "extbound"})
        add_common(app.add_subcommand(name), true);

    auto* sl = app.add_subcommand("slice");
    add_common(sl, true);
    sl->add_option("-s,--level", opt.level, "slice level, must lie in S")->required();

    for (const char* name : {"triangulate", "volume"}) {
        auto* sub = app.add_subcommand(name);
        add_common(sub, true);
        sub->add_option("--order", opt.order, "lex or random")
            ->check(CLI::IsMember({"lex", "random"}));
        sub->add_option("--seed", opt.seed, "seed for random pull orders");
    }

    auto* td = app.add_subcommand("tdcount");
    td->add_option("-d,--dimension", opt.d, "halfcube dimension")->required();
    td->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    td->add_option("--max-d", opt.max_d);

    auto* vf = app.add_subcommand("verify");
    vf->add_option("-d,--dimension", opt.d, "dimension (sweeps all proper S when -S absent)")
        ->required();
    vf->add_option("-S,--set", opt.s_spec, "verify a single S-hypersimplex");
    vf->add_option("--against", opt.against, "oracle (default)");
    vf->add_option("--checks", opt.checks, "comma list of checks to run");
    vf->add_option("--oracle-max-d", opt.oracle_max_d, "cap for oracle cross-checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitBadArguments;
    }

    try {
        return run(opt, app.get_subcommands().front()->get_name());
    } catch (const shyp::cap_exceeded& e) {
        std::cerr << "cap violation: " << e.what() << "\n";
        return kExitCapViolation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    }
}
