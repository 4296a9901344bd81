#pragma once

#include "shyp/core.hpp"
#include "shyp/permutahedra.hpp"
#include "shyp/triangulation.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace shyp {

using Json = nlohmann::ordered_json;

inline Json int_json(const Int& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return x.convert_to<long long>();
    return x.str();
}

inline Json subset_json(const VertexSubset& v) { return Json(v.elements()); }

inline std::string kind_string(FacetKind k) {
    switch (k) {
        case FacetKind::Top: return "i";
        case FacetKind::Bottom: return "ii";
        case FacetKind::CoordUpper: return "iii";
        case FacetKind::CoordLower: return "iv";
        case FacetKind::Join: return "v";
        case FacetKind::PermBlock: return "perm";
    }
    return "?";
}

inline Json facet_json(const FacetSpec& f) {
    Json j;
    Json normal = Json::array();
    for (const Int& x : f.normal) normal.push_back(int_json(x));
    j["normal"] = normal;
    j["rhs"] = int_json(f.rhs);
    j["kind"] = kind_string(f.kind);
    if (f.kind == FacetKind::CoordUpper || f.kind == FacetKind::CoordLower) {
        j["witness"] = f.coord;
    } else if (f.kind == FacetKind::Join || f.kind == FacetKind::PermBlock) {
        std::vector<int> elems;
        for (int i = 0; i < 64; ++i)
            if ((f.set_mask >> i) & 1) elems.push_back(i + 1);
        j["witness"] = Json{{"I", elems}, {"h", f.set_size}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

inline Json edge_json(const EdgeSpec& e) {
    return Json{{"a", subset_json(e.a)},
                {"b", subset_json(e.b)},
                {"kind", e.kind == EdgeKind::Chain ? "chain" : "swap"}};
}

inline std::string s_list(const CardinalitySet& cs) {
    std::string out;
    for (size_t i = 0; i < cs.members.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(cs.members[i]);
    }
    return out;
}

/// One vertex per line as d space-separated 0/1 digits under a header line.
inline std::string vertices_text(const SHypersimplex& P) {
    std::ostringstream os;
    os << "d=" << P.d() << " S=" << s_list(P.card_set) << "\n";
    for (const auto& v : vertices(P)) {
        for (int i = 1; i <= P.d(); ++i) os << (i > 1 ? " " : "") << (v.contains(i) ? 1 : 0);
        os << "\n";
    }
    return os.str();
}

inline Json paths_json(const std::vector<MonotonePath>& paths) {
    Json arr = Json::array();
    for (const auto& w : paths) {
        Json chain = Json::array();
        for (const auto& a : w.chain) chain.push_back(subset_json(a));
        arr.push_back(chain);
    }
    return arr;
}

inline Json mpp_json(const SHypersimplex& P) {
    Permutahedron q = monotone_path_polytope(P);
    Json j;
    j["p"] = q.p;
    j["num_vertices"] = int_json(perm_vertex_count(q));
    return j;
}

inline Json triangulation_json(const Triangulation& T) {
    Json arr = Json::array();
    for (const auto& s : T.simplices) {
        Json simplex = Json::array();
        for (const auto& v : s) simplex.push_back(v.bits);
        arr.push_back(simplex);
    }
    return arr;
}

}  // namespace shyp
