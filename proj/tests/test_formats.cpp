#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "snc/dot.hpp"
#include "snc/generate.hpp"
#include "snc/json_io.hpp"

using namespace snc;

namespace {

std::string golden_path(const std::string& name) {
    return std::string(SNC_GOLDEN_DIR) + "/" + name;
}

std::string golden_text(const std::string& name) { return read_text_file(golden_path(name)); }

} // namespace

TEST_CASE("graph JSON round-trips") {
    SECTION("compact input in documented form parses") {
        const auto g = graph_from_json_text(
            R"({"vertices":[{"id":"C1","weight":-2},{"id":"C2","weight":-1}],"edges":[["C1","C2"]]})");
        CHECK(g.vertex_count() == 2);
        CHECK(g.weight("C1") == -2);
        CHECK(g.has_edge("C1", "C2"));
    }
    SECTION("canonical emission is pinned") {
        WeightedDualGraph g;
        g.add_vertex("C1", -2);
        g.add_vertex("C2", -1);
        g.add_edge("C1", "C2");
        const std::string expected = "{\n"
                                     "  \"vertices\": [\n"
                                     "    {\n"
                                     "      \"id\": \"C1\",\n"
                                     "      \"weight\": -2\n"
                                     "    },\n"
                                     "    {\n"
                                     "      \"id\": \"C2\",\n"
                                     "      \"weight\": -1\n"
                                     "    }\n"
                                     "  ],\n"
                                     "  \"edges\": [\n"
                                     "    [\n"
                                     "      \"C1\",\n"
                                     "      \"C2\"\n"
                                     "    ]\n"
                                     "  ]\n"
                                     "}\n";
        CHECK(graph_to_json_text(g) == expected);
    }
    SECTION("key order does not matter on input") {
        const auto g = graph_from_json_text(
            R"({"edges":[],"vertices":[{"weight":3,"id":"A"}]})");
        CHECK(g.weight("A") == 3);
    }
    SECTION("labels and double edges survive") {
        WeightedDualGraph g;
        g.add_vertex("A", -1, "axis");
        g.add_vertex("B", -2);
        g.add_edge("A", "B");
        g.add_edge("A", "B");
        const auto back = graph_from_json_text(graph_to_json_text(g));
        CHECK(back == g);
        CHECK(back.vertex("A").label == "axis");
        CHECK(back.edge_multiplicity("A", "B") == 2);
    }
    SECTION("random graphs: parse of serialize is the identity, re-serialize is byte-stable") {
        Rng rng(4242);
        for (int trial = 0; trial < 40; ++trial) {
            const auto g = random_blowup_graph(rng, 8);
            const auto text = graph_to_json_text(g);
            const auto back = graph_from_json_text(text);
            REQUIRE(back == g);
            REQUIRE(graph_to_json_text(back) == text);
        }
    }
    SECTION("malformed inputs are rejected") {
        CHECK_THROWS_AS(graph_from_json_text("not json"), structural_error);
        CHECK_THROWS_AS(graph_from_json_text("[1,2]"), structural_error);
        CHECK_THROWS_AS(graph_from_json_text(R"({"vertices":[]})"), structural_error);
        CHECK_THROWS_AS(graph_from_json_text(R"({"vertices":{},"edges":[]})"), structural_error);
        CHECK_THROWS_AS(graph_from_json_text(R"({"vertices":[{"id":"A"}],"edges":[]})"),
                        structural_error);
        CHECK_THROWS_AS(graph_from_json_text(R"({"vertices":[{"id":"A","weight":"x"}],"edges":[]})"),
                        structural_error);
        CHECK_THROWS_AS(graph_from_json_text(R"({"vertices":[{"id":"","weight":1}],"edges":[]})"),
                        structural_error);
        CHECK_THROWS_AS(
            graph_from_json_text(
                R"({"vertices":[{"id":"A","weight":1},{"id":"A","weight":2}],"edges":[]})"),
            structural_error);
        CHECK_THROWS_AS(
            graph_from_json_text(R"({"vertices":[{"id":"A","weight":1}],"edges":[["A","B"]]})"),
            structural_error);
        CHECK_THROWS_AS(
            graph_from_json_text(R"({"vertices":[{"id":"A","weight":1}],"edges":[["A","A"]]})"),
            structural_error);
        CHECK_THROWS_AS(
            graph_from_json_text(R"({"vertices":[{"id":"A","weight":1}],"edges":[["A"]]})"),
            structural_error);
        CHECK_THROWS_AS(
            graph_from_json_text(R"({"vertices":[{"id":"A","weight":99999999999}],"edges":[]})"),
            structural_error);
    }
}

TEST_CASE("chain JSON carries attachment markers") {
    const auto chain = resolution_chain(5, 3);
    const auto marked = mark_chain(chain);
    SECTION("markers point at the documented ends") {
        CHECK(marked.y_side == "C1");
        CHECK(marked.x_side == "C" + std::to_string(chain.length()));
        CHECK(marked.graph.weight(marked.minus_one) == -1);
    }
    SECTION("round-trip preserves graph and markers") {
        const auto text = chain_to_json_text(marked);
        const auto back = chain_from_json_text(text);
        CHECK(back == marked);
        CHECK(chain_to_json_text(back) == text);
    }
    SECTION("a chain file still parses as a plain graph") {
        const auto g = graph_from_json_text(chain_to_json_text(marked));
        CHECK(g == marked.graph);
    }
    SECTION("missing or dangling markers are rejected") {
        auto j = chain_to_json(marked);
        j.erase("minus_one");
        CHECK_THROWS_AS(chain_from_json(j), structural_error);
        j["minus_one"] = "nope";
        CHECK_THROWS_AS(chain_from_json(j), structural_error);
    }
}

TEST_CASE("decorated resolution JSON keeps coefficients and kinds") {
    const auto d = simulate(3, 2);
    const auto text = decorated_to_json_text(d);
    SECTION("round-trip") {
        const auto back = decorated_from_json_text(text);
        CHECK(back.graph == d.graph);
        CHECK(back.coefficients == d.coefficients);
        CHECK(back.kinds == d.kinds);
        CHECK(decorated_to_json_text(back) == text);
    }
    SECTION("a decorated file still parses as a plain graph") {
        CHECK(graph_from_json_text(text) == d.graph);
    }
    SECTION("bad kind and missing coefficient are rejected") {
        CHECK_THROWS_AS(kind_from_name("inner"), structural_error);
        CHECK_THROWS_AS(
            decorated_from_json_text(
                R"({"vertices":[{"id":"A","weight":1,"kind":"exceptional"}],"edges":[]})"),
            structural_error);
        CHECK_THROWS_AS(
            decorated_from_json_text(
                R"({"vertices":[{"id":"A","weight":1,"coefficient":0,"kind":"edge"}],"edges":[]})"),
            structural_error);
    }
}

TEST_CASE("stage list JSON") {
    SECTION("documented example parses") {
        const auto stages = stages_from_json_text(R"([{"k":3,"m":2,"attach":"generic"}])");
        REQUIRE(stages.size() == 1);
        CHECK(stages[0].k == 3);
        CHECK(stages[0].m == 2);
        CHECK(stages[0].attach == FactorizationStage::Attach::Generic);
        CHECK_FALSE(stages[0].shift.has_value());
    }
    SECTION("node attachments and shifts round-trip") {
        std::vector<FactorizationStage> stages{generic_stage(3, 2), node_stage(2, 1, "C3")};
        stages[0].shift = Rational(1, 2);
        const auto text = stages_to_json_text(stages);
        const auto back = stages_from_json_text(text);
        REQUIRE(back == stages);
        CHECK(stages_to_json_text(back) == text);
    }
    SECTION("factorize output serializes and re-parses") {
        const auto g = synthesize({generic_stage(3, 2), node_stage(3, 2, "C3")});
        const auto stages = factorize(g);
        const auto back = stages_from_json_text(stages_to_json_text(stages));
        CHECK(back == stages);
        CHECK(isomorphic(synthesize(back), g));
    }
    SECTION("rejections") {
        CHECK_THROWS_AS(stages_from_json_text(R"({"k":1})"), structural_error);
        CHECK_THROWS_AS(stages_from_json_text(R"([{"m":2,"attach":"generic"}])"),
                        structural_error);
        CHECK_THROWS_AS(stages_from_json_text(R"([{"k":1,"m":2,"attach":""}])"),
                        structural_error);
        CHECK_THROWS_AS(stages_from_json_text(R"([{"k":1,"m":1,"attach":"generic","shift":3}])"),
                        structural_error);
        CHECK_THROWS_AS(stages_from_json_text(R"([{"k":1,"m":1,"attach":"generic","shift":"x"}])"),
                        structural_error);
    }
}

TEST_CASE("tower JSON") {
    SECTION("documented example parses") {
        const auto t = tower_from_json_text(R"({"stages":[{"c":"1/2","k":3,"m":2,"n":1,"l":1}]})");
        REQUIRE(t.depth() == 1);
        CHECK(t.stages[0].c == Rational(1, 2));
        CHECK(t.stages[0].k == 3);
        CHECK(t.stages[0].l == 1);
    }
    SECTION("round-trip is byte-stable and rationals canonicalize") {
        const auto t = tower_from_json_text(R"({"stages":[{"c":"2/4","k":1,"m":1,"n":0,"l":1}]})");
        const auto text = tower_to_json_text(t);
        CHECK(text.find("\"1/2\"") != std::string::npos);
        CHECK(tower_to_json_text(tower_from_json_text(text)) == text);
    }
    SECTION("stage validity is enforced on parse") {
        CHECK_THROWS_AS(tower_from_json_text(R"({"stages":[{"c":"0","k":3,"m":2,"n":2,"l":1}]})"),
                        domain_error);
        CHECK_THROWS_AS(tower_from_json_text(R"({"stages":[{"c":"0","k":3,"m":2,"l":1}]})"),
                        structural_error);
        CHECK_THROWS_AS(tower_from_json_text(R"({"stages":{}})"), structural_error);
    }
}

TEST_CASE("point set JSON") {
    const std::vector<RationalPoint> pts{{Rational(3), Rational(2)},
                                         {Rational(-1, 2), Rational(7, 3)}};
    const auto text = points_to_json_text(pts);
    SECTION("round-trip") {
        const auto back = points_from_json_text(text);
        REQUIRE(back.size() == 2);
        CHECK(back[0].x == 3);
        CHECK(back[1].y == Rational(7, 3));
        CHECK(points_to_json_text(back) == text);
    }
    SECTION("rejections") {
        CHECK_THROWS_AS(points_from_json_text(R"({"points":[["1"]]})"), structural_error);
        CHECK_THROWS_AS(points_from_json_text(R"({"points":[[1,2]]})"), structural_error);
        CHECK_THROWS_AS(points_from_json_text(R"({})"), structural_error);
    }
}

TEST_CASE("DOT export is pinned and escapes quotes") {
    WeightedDualGraph g;
    g.add_vertex("C1", -3);
    g.add_vertex("C2", -1);
    g.add_edge("C1", "C2");
    CHECK(graph_to_dot(g) == "graph G {\n"
                             "  node [shape=box];\n"
                             "  \"C1\" [label=\"C1\\n-3\"];\n"
                             "  \"C2\" [label=\"C2\\n-1\"];\n"
                             "  \"C1\" -- \"C2\";\n"
                             "}\n");

    WeightedDualGraph weird;
    weird.add_vertex("a\"b", 1);
    CHECK(graph_to_dot(weird).find("\"a\\\"b\" [label=\"a\\\"b\\n1\"]") != std::string::npos);

    const auto dot = decorated_to_dot(simulate(3, 2));
    CHECK(dot.find("\"E3\" [label=\"E3\\n-1\\ncoef 0\", fillcolor=\"gold\"]") !=
          std::string::npos);
    CHECK(dot.find("fillcolor=\"lightcoral\"") != std::string::npos);
    CHECK(dot.find("fillcolor=\"palegreen\"") != std::string::npos);
}

TEST_CASE("golden files byte-round-trip") {
    SECTION("graphs") {
        for (const auto* name : {"e8.json", "synth-sample.json"}) {
            const auto text = golden_text(name);
            CHECK(graph_to_json_text(graph_from_json_text(text)) == text);
        }
    }
    SECTION("chain") {
        const auto text = golden_text("resolve-4-1.json");
        CHECK(chain_to_json_text(chain_from_json_text(text)) == text);
    }
    SECTION("decorated") {
        const auto text = golden_text("simulate-3-2.json");
        CHECK(decorated_to_json_text(decorated_from_json_text(text)) == text);
    }
    SECTION("stages") {
        const auto text = golden_text("stages-sample.json");
        CHECK(stages_to_json_text(stages_from_json_text(text)) == text);
    }
    SECTION("tower") {
        const auto text = golden_text("tower-sample.json");
        CHECK(tower_to_json_text(tower_from_json_text(text)) == text);
    }
    SECTION("points") {
        const auto text = golden_text("points-sample.json");
        CHECK(points_to_json_text(points_from_json_text(text)) == text);
    }
    SECTION("the corpus is present") {
        for (const auto* name :
             {"simulate-3-2.dot", "synth-sample.dot", "contract-e8.json", "contract-synth.json",
              "verify-tower-sample.json"})
            CHECK(std::filesystem::exists(golden_path(name)));
    }
}
