#pragma once

#include <nlohmann/json.hpp>

#include <climits>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "snc/decompose.hpp"
#include "snc/errors.hpp"
#include "snc/graph.hpp"
#include "snc/hj.hpp"
#include "snc/rational.hpp"
#include "snc/resolution_sim.hpp"
#include "snc/tower.hpp"

// File formats. Emission is canonical (fixed key order, two-space indent,
// sorted vertices/edges, rationals in lowest terms), so serialize(parse(t))
// is byte-identical for files produced here. Parsers accept any key order
// and ignore unknown keys, which lets marker-extended files (chains,
// decorated graphs) feed any command expecting a plain graph.

namespace snc {

using json = nlohmann::ordered_json;

namespace detail {

inline json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw structural_error(std::string("malformed JSON: ") + e.what());
    }
}

inline const json& member(const json& obj, const char* key, const char* what) {
    require_structure(obj.is_object(), std::string(what) + " must be a JSON object");
    const auto it = obj.find(key);
    require_structure(it != obj.end(),
                      std::string(what) + " is missing the \"" + key + "\" key");
    return *it;
}

inline std::string string_member(const json& obj, const char* key, const char* what) {
    const json& v = member(obj, key, what);
    require_structure(v.is_string(), std::string(what) + ": \"" + key + "\" must be a string");
    return v.get<std::string>();
}

inline long long int_member(const json& obj, const char* key, const char* what) {
    const json& v = member(obj, key, what);
    require_structure(v.is_number_integer(),
                      std::string(what) + ": \"" + key + "\" must be an integer");
    return v.get<long long>();
}

inline Rational rational_member(const json& obj, const char* key, const char* what) {
    return parse_rational(string_member(obj, key, what));
}

} // namespace detail

// --- weighted dual graphs -------------------------------------------------

inline json graph_to_json(const WeightedDualGraph& g) {
    json out;
    out["vertices"] = json::array();
    for (const auto& [id, data] : g.vertices()) {
        json v;
        v["id"] = id;
        v["weight"] = data.weight;
        if (data.label)
            v["label"] = *data.label;
        out["vertices"].push_back(std::move(v));
    }
    out["edges"] = json::array();
    for (const auto& [a, b] : g.edges())
        out["edges"].push_back(json::array({a, b}));
    return out;
}

inline WeightedDualGraph graph_from_json(const json& j) {
    require_structure(j.is_object(), "graph must be a JSON object");
    WeightedDualGraph g;
    const json& vs = detail::member(j, "vertices", "graph");
    require_structure(vs.is_array(), "graph: \"vertices\" must be an array");
    for (const json& v : vs) {
        const auto id = detail::string_member(v, "id", "vertex");
        require_structure(!id.empty(), "vertex id must be nonempty");
        const auto w = detail::int_member(v, "weight", "vertex");
        require_structure(w >= INT_MIN && w <= INT_MAX, "vertex weight out of range");
        std::optional<std::string> label;
        if (const auto it = v.find("label"); it != v.end()) {
            require_structure(it->is_string(), "vertex: \"label\" must be a string");
            label = it->get<std::string>();
        }
        g.add_vertex(id, static_cast<int>(w), std::move(label));
    }
    const json& es = detail::member(j, "edges", "graph");
    require_structure(es.is_array(), "graph: \"edges\" must be an array");
    for (const json& e : es) {
        require_structure(e.is_array() && e.size() == 2 && e[0].is_string() && e[1].is_string(),
                          "edge must be a two-element array of vertex ids");
        g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return g;
}

inline std::string to_text(const json& j) { return j.dump(2) + "\n"; }

inline std::string graph_to_json_text(const WeightedDualGraph& g) {
    return to_text(graph_to_json(g));
}

inline WeightedDualGraph graph_from_json_text(const std::string& text) {
    return graph_from_json(detail::parse_json_text(text));
}

// --- resolution chains with attachment markers ----------------------------

struct MarkedChainGraph {
    WeightedDualGraph graph;
    VertexId x_side, y_side, minus_one;

    friend bool operator==(const MarkedChainGraph&, const MarkedChainGraph&) = default;
};

inline MarkedChainGraph mark_chain(const HJChain& c) {
    const auto id = [](std::size_t i) { return "C" + std::to_string(i + 1); };
    return {chain_to_graph(c), id(c.x_side()), id(c.y_side()), id(c.minus_one)};
}

inline json chain_to_json(const MarkedChainGraph& c) {
    json out = graph_to_json(c.graph);
    out["x_side"] = c.x_side;
    out["y_side"] = c.y_side;
    out["minus_one"] = c.minus_one;
    return out;
}

inline MarkedChainGraph chain_from_json(const json& j) {
    MarkedChainGraph c;
    c.graph = graph_from_json(j);
    c.x_side = detail::string_member(j, "x_side", "chain");
    c.y_side = detail::string_member(j, "y_side", "chain");
    c.minus_one = detail::string_member(j, "minus_one", "chain");
    for (const auto* v : {&c.x_side, &c.y_side, &c.minus_one})
        require_structure(c.graph.has_vertex(*v), "chain marker names missing vertex: " + *v);
    return c;
}

inline std::string chain_to_json_text(const MarkedChainGraph& c) {
    return to_text(chain_to_json(c));
}

inline MarkedChainGraph chain_from_json_text(const std::string& text) {
    return chain_from_json(detail::parse_json_text(text));
}

// --- decorated resolutions ------------------------------------------------

inline json decorated_to_json(const DecoratedGraph& d) {
    json out;
    out["vertices"] = json::array();
    for (const auto& [id, data] : d.graph.vertices()) {
        json v;
        v["id"] = id;
        v["weight"] = data.weight;
        v["coefficient"] = d.coefficient(id);
        v["kind"] = to_string(d.kind(id));
        out["vertices"].push_back(std::move(v));
    }
    out["edges"] = json::array();
    for (const auto& [a, b] : d.graph.edges())
        out["edges"].push_back(json::array({a, b}));
    return out;
}

inline VertexKind kind_from_name(const std::string& name) {
    if (name == "boundary-x")
        return VertexKind::BoundaryX;
    if (name == "boundary-y")
        return VertexKind::BoundaryY;
    if (name == "exceptional")
        return VertexKind::Exceptional;
    throw structural_error("unknown vertex kind: " + name);
}

inline DecoratedGraph decorated_from_json(const json& j) {
    DecoratedGraph d;
    d.graph = graph_from_json(j);
    const json& vs = detail::member(j, "vertices", "graph");
    for (const json& v : vs) {
        const auto id = detail::string_member(v, "id", "vertex");
        d.coefficients[id] = detail::int_member(v, "coefficient", "decorated vertex");
        d.kinds[id] = kind_from_name(detail::string_member(v, "kind", "decorated vertex"));
    }
    return d;
}

inline std::string decorated_to_json_text(const DecoratedGraph& d) {
    return to_text(decorated_to_json(d));
}

inline DecoratedGraph decorated_from_json_text(const std::string& text) {
    return decorated_from_json(detail::parse_json_text(text));
}

// --- factorization stage lists --------------------------------------------

inline json stages_to_json(const std::vector<FactorizationStage>& stages) {
    json out = json::array();
    for (const auto& s : stages) {
        json e;
        e["k"] = s.k;
        e["m"] = s.m;
        e["attach"] = s.attach == FactorizationStage::Attach::Generic ? "generic" : s.node;
        if (s.shift)
            e["shift"] = to_string(*s.shift);
        out.push_back(std::move(e));
    }
    return out;
}

inline std::vector<FactorizationStage> stages_from_json(const json& j) {
    require_structure(j.is_array(), "stage list must be a JSON array");
    std::vector<FactorizationStage> stages;
    for (const json& e : j) {
        FactorizationStage s;
        s.k = detail::int_member(e, "k", "stage");
        s.m = detail::int_member(e, "m", "stage");
        const auto attach = detail::string_member(e, "attach", "stage");
        require_structure(!attach.empty(), "stage: \"attach\" must be nonempty");
        if (attach != "generic") {
            s.attach = FactorizationStage::Attach::AtNode;
            s.node = attach;
        }
        if (const auto it = e.find("shift"); it != e.end()) {
            require_structure(it->is_string(), "stage: \"shift\" must be a rational string");
            s.shift = parse_rational(it->get<std::string>());
        }
        stages.push_back(std::move(s));
    }
    return stages;
}

inline std::string stages_to_json_text(const std::vector<FactorizationStage>& stages) {
    return to_text(stages_to_json(stages));
}

inline std::vector<FactorizationStage> stages_from_json_text(const std::string& text) {
    return stages_from_json(detail::parse_json_text(text));
}

// --- chart towers -----------------------------------------------------------

inline json tower_to_json(const ChartTower& t) {
    json out;
    out["stages"] = json::array();
    for (const auto& s : t.stages) {
        json e;
        e["c"] = to_string(s.c);
        e["k"] = s.k;
        e["m"] = s.m;
        e["n"] = s.n;
        e["l"] = s.l;
        out["stages"].push_back(std::move(e));
    }
    return out;
}

inline ChartTower tower_from_json(const json& j) {
    ChartTower t;
    const json& ss = detail::member(j, "stages", "tower");
    require_structure(ss.is_array(), "tower: \"stages\" must be an array");
    for (const json& e : ss) {
        TowerStage s;
        s.c = detail::rational_member(e, "c", "tower stage");
        s.k = detail::int_member(e, "k", "tower stage");
        s.m = detail::int_member(e, "m", "tower stage");
        s.n = detail::int_member(e, "n", "tower stage");
        s.l = detail::int_member(e, "l", "tower stage");
        t.stages.push_back(std::move(s));
    }
    validate_tower(t);
    return t;
}

inline std::string tower_to_json_text(const ChartTower& t) { return to_text(tower_to_json(t)); }

inline ChartTower tower_from_json_text(const std::string& text) {
    return tower_from_json(detail::parse_json_text(text));
}

// --- rational point sets ----------------------------------------------------

inline json points_to_json(const std::vector<RationalPoint>& pts) {
    json out;
    out["points"] = json::array();
    for (const auto& p : pts)
        out["points"].push_back(json::array({to_string(p.x), to_string(p.y)}));
    return out;
}

inline std::vector<RationalPoint> points_from_json(const json& j) {
    const json& ps = detail::member(j, "points", "point set");
    require_structure(ps.is_array(), "point set: \"points\" must be an array");
    std::vector<RationalPoint> pts;
    for (const json& p : ps) {
        require_structure(p.is_array() && p.size() == 2 && p[0].is_string() && p[1].is_string(),
                          "point must be a two-element array of rational strings");
        pts.push_back({parse_rational(p[0].get<std::string>()),
                       parse_rational(p[1].get<std::string>())});
    }
    return pts;
}

inline std::string points_to_json_text(const std::vector<RationalPoint>& pts) {
    return to_text(points_to_json(pts));
}

inline std::vector<RationalPoint> points_from_json_text(const std::string& text) {
    return points_from_json(detail::parse_json_text(text));
}

// --- files ------------------------------------------------------------------

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require_structure(in.good(), "cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace snc
