#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "snc/cli.hpp"
#include "snc/isomorphism.hpp"

using namespace snc;
using cli::run;

namespace {

std::string golden(const std::string& name) {
    return read_text_file(std::string(SNC_GOLDEN_DIR) + "/" + name);
}

std::string golden_path(const std::string& name) {
    return std::string(SNC_GOLDEN_DIR) + "/" + name;
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = (std::filesystem::temp_directory_path() / ("snc-cli-" + name)).string();
    std::ofstream(path, std::ios::binary) << content;
    return path;
}

} // namespace

TEST_CASE("resolve command") {
    const auto r = run({"resolve", "--k", "4", "--m", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == golden("resolve-4-1.json"));
    CHECK(r.err.empty());

    CHECK(run({"resolve", "--k", "4", "--m", "1", "--json"}).out == r.out);

    const auto dot = run({"resolve", "--k", "4", "--m", "1", "--dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("graph G {", 0) == 0);
    CHECK(dot.out.find("\"C4\" [label=\"C4\\n-2\"]") != std::string::npos);

    SECTION("domain errors exit 1 with a one-line reason") {
        const auto bad = run({"resolve", "--k", "0", "--m", "1"});
        CHECK(bad.code == 1);
        CHECK(bad.out.empty());
        CHECK(bad.err.rfind("error: ", 0) == 0);
        CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);
    }
    SECTION("usage errors exit 2") {
        CHECK(run({"resolve", "--k", "x", "--m", "1"}).code == 2);
        CHECK(run({"resolve", "--k", "4"}).code == 2);
        CHECK(run({"resolve", "--k", "4", "--m", "1", "--dot", "--json"}).code == 2);
        CHECK(run({"resolve", "--k", "4", "--m", "1", "--verbose"}).code == 2);
        CHECK(run({"resolve", "--k"}).code == 2);
    }
}

TEST_CASE("simulate command") {
    const auto r = run({"simulate", "--k", "3", "--m", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == golden("simulate-3-2.json"));

    const auto dot = run({"simulate", "--k", "3", "--m", "2", "--dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out == golden("simulate-3-2.dot"));
}

TEST_CASE("contract command") {
    SECTION("a synthesized graph contracts and reports its order") {
        const auto r = run({"contract", golden_path("synth-sample.json")});
        CHECK(r.code == 0);
        CHECK(r.out == golden("contract-synth.json"));
        CHECK(r.err.empty());
    }
    SECTION("the stuck witness exits 1 and prints the residual") {
        const auto r = run({"contract", golden_path("e8.json")});
        CHECK(r.code == 1);
        CHECK(r.out == golden("contract-e8.json"));
        CHECK(r.err == "error: the graph is not contractible\n");

        const auto parsed = detail::parse_json_text(r.out);
        CHECK(parsed["contractible"] == false);
        CHECK(graph_from_json(parsed["residual"]) ==
              graph_from_json_text(golden("e8.json")));
    }
    SECTION("missing and malformed files exit 2") {
        CHECK(run({"contract", "/nonexistent/graph.json"}).code == 2);
        CHECK(run({"contract", temp_file("garbage.json", "{]")}).code == 2);
        CHECK(run({"contract"}).code == 2);
    }
}

TEST_CASE("decompose and synthesize commands") {
    SECTION("synthesize replays the sample stage list") {
        const auto r = run({"synthesize", golden_path("stages-sample.json")});
        CHECK(r.code == 0);
        CHECK(r.out == golden("synth-sample.json"));
    }
    SECTION("decompose inverts synthesize up to isomorphism") {
        const auto r = run({"decompose", golden_path("synth-sample.json")});
        REQUIRE(r.code == 0);
        const auto stages = stages_from_json_text(r.out);
        CHECK(isomorphic(synthesize(stages),
                         graph_from_json_text(golden("synth-sample.json"))));
    }
    SECTION("decompose honors the axis hint") {
        const auto chain = run({"resolve", "--k", "3", "--m", "2"});
        const auto path = temp_file("chain-3-2.json", chain.out);
        const auto hinted = run({"decompose", path, "--hint", "C1"});
        REQUIRE(hinted.code == 0);
        const auto stages = stages_from_json_text(hinted.out);
        REQUIRE(!stages.empty());
        CHECK(stages[0].attach == FactorizationStage::Attach::Generic);

        CHECK(run({"decompose", path, "--hint", "C2"}).code == 1);
    }
    SECTION("graphs outside the family exit 1") {
        const auto r = run({"decompose", golden_path("e8.json")});
        CHECK(r.code == 1);
        CHECK(r.err.rfind("error: ", 0) == 0);
    }
    SECTION("stage lists that cannot replay exit 1") {
        const auto path = temp_file("bad-stages.json", R"([{"k":2,"m":1,"attach":"C9"}])");
        CHECK(run({"synthesize", path}).code == 1);
    }
}

TEST_CASE("dot command") {
    const auto r = run({"dot", golden_path("synth-sample.json")});
    CHECK(r.code == 0);
    CHECK(r.out == golden("synth-sample.dot"));
}

TEST_CASE("verify-tower command") {
    SECTION("shift-free tower passes all certificates") {
        const auto r = run({"verify-tower", golden_path("tower-sample.json"), "--alpha", "3,5"});
        CHECK(r.code == 0);
        CHECK(r.out == golden("verify-tower-sample.json"));
        CHECK(r.err.empty());

        const auto parsed = detail::parse_json_text(r.out);
        CHECK(parsed["ok"] == true);
        CHECK(parsed["certificates"].size() == 2);
        CHECK(parsed.find("failure") == parsed.end());
    }
    SECTION("a shifted first stage fails with the certificate report") {
        const auto path = temp_file(
            "tower-shifted.json", R"({"stages":[{"c":"1","k":3,"m":2,"n":1,"l":1}]})");
        const auto r = run({"verify-tower", path, "--alpha", "3,5"});
        CHECK(r.code == 1);
        CHECK(r.err == "error: stage 1: the center x = 1 is not fixed\n");
        const auto parsed = detail::parse_json_text(r.out);
        CHECK(parsed["ok"] == false);
        CHECK(parsed["failure"] == "stage 1: the center x = 1 is not fixed");
    }
    SECTION("argument errors") {
        CHECK(run({"verify-tower", golden_path("tower-sample.json")}).code == 2);
        CHECK(run({"verify-tower", golden_path("tower-sample.json"), "--alpha", "3"}).code == 2);
        CHECK(run({"verify-tower", golden_path("tower-sample.json"), "--alpha", "0,5"}).code == 1);
    }
}

TEST_CASE("chi-check command") {
    const auto r = run({"chi-check", "--k", "3", "--m", "2", "--point", "2,3"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\n"
                   "  \"k\": 3,\n"
                   "  \"m\": 2,\n"
                   "  \"c\": \"0\",\n"
                   "  \"point\": [\n"
                   "    \"2\",\n"
                   "    \"3\"\n"
                   "  ],\n"
                   "  \"holds\": true\n"
                   "}\n");

    CHECK(run({"chi-check", "--k", "5", "--m", "3", "--c", "7", "--point", "-2/3,5"}).code == 0);
    CHECK(run({"chi-check", "--k", "3", "--m", "2", "--point", "0,3"}).code == 1);
    CHECK(run({"chi-check", "--k", "4", "--m", "2", "--point", "2,3"}).code == 1);
    CHECK(run({"chi-check", "--k", "3", "--m", "2", "--point", "2;3"}).code == 2);
}

TEST_CASE("parabola command") {
    const auto r =
        run({"parabola", "--target", "2,1", "--avoid", golden_path("points-sample.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "{\n"
                   "  \"a\": \"2\",\n"
                   "  \"b\": \"0\",\n"
                   "  \"c\": \"0\"\n"
                   "}\n");

    CHECK(run({"parabola", "--target", "2,1"}).out == r.out);
    CHECK(run({"parabola", "--target", "0,1"}).code == 1);
    CHECK(run({"parabola", "--target", "3,2", "--avoid",
               golden_path("points-sample.json")}).code == 1);
}

TEST_CASE("usage and dispatch errors") {
    const auto empty = run({});
    CHECK(empty.code == 2);
    CHECK(empty.err.find("usage: snccalc") != std::string::npos);

    const auto unknown = run({"frobnicate"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.rfind("error: unknown command: frobnicate", 0) == 0);
    CHECK(unknown.err.find("usage: snccalc") != std::string::npos);
}

TEST_CASE("identical invocations are byte-identical") {
    const std::vector<std::vector<std::string>> invocations = {
        {"resolve", "--k", "11", "--m", "7"},
        {"simulate", "--k", "11", "--m", "7", "--dot"},
        {"contract", golden_path("e8.json")},
        {"decompose", golden_path("synth-sample.json")},
        {"verify-tower", golden_path("tower-sample.json"), "--alpha", "2,7"},
        {"parabola", "--target", "5,3", "--avoid", golden_path("points-sample.json")},
    };
    for (const auto& argv : invocations) {
        const auto first = run(argv);
        const auto second = run(argv);
        CHECK(first.code == second.code);
        CHECK(first.out == second.out);
        CHECK(first.err == second.err);
    }
}
