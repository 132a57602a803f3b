#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "snc/resolution_sim.hpp"

using namespace snc;

TEST_CASE("simulate y^2/x^3") {
    const auto d = simulate(3, 2);

    REQUIRE(d.graph.vertex_count() == 5);
    CHECK(d.coefficient("bx") == -3);
    CHECK(d.coefficient("by") == 2);
    CHECK(d.kind("bx") == VertexKind::BoundaryX);
    CHECK(d.kind("by") == VertexKind::BoundaryY);

    // Creation order: E1 from the bx-by edge, E2 from E1-by, E3 from E1-E2.
    CHECK(d.coefficient("E1") == -1);
    CHECK(d.coefficient("E2") == 1);
    CHECK(d.coefficient("E3") == 0);
    CHECK(d.graph.weight("E1") == -3);
    CHECK(d.graph.weight("E2") == -2);
    CHECK(d.graph.weight("E3") == -1);
    CHECK(d.graph.has_edge("bx", "E1"));
    CHECK(d.graph.has_edge("E1", "E3"));
    CHECK(d.graph.has_edge("E3", "E2"));
    CHECK(d.graph.has_edge("E2", "by"));
    CHECK(blowup_count(d) == 3);

    const auto [chain, ids] = exceptional_chain(d);
    CHECK(chain == resolution_chain(3, 2));
    CHECK(ids == std::vector<VertexId>{"E2", "E3", "E1"});
}

TEST_CASE("simulate degenerate and linear cases") {
    SECTION("y/x") {
        const auto d = simulate(1, 1);
        CHECK(blowup_count(d) == 1);
        CHECK(d.coefficient("E1") == 0);
        CHECK(exceptional_chain(d).first == resolution_chain(1, 1));
    }
    SECTION("y/x^4") {
        const auto d = simulate(4, 1);
        CHECK(blowup_count(d) == 4);
        const auto [chain, ids] = exceptional_chain(d);
        CHECK(chain == resolution_chain(4, 1));
        CHECK(chain.weights == std::vector<int>{-1, -2, -2, -2});
    }
    SECTION("rejects bad exponents") {
        CHECK_THROWS_AS(simulate(4, 2), domain_error);
        CHECK_THROWS_AS(simulate(0, 1), domain_error);
    }
}

TEST_CASE("simulation agrees with the fan construction") {
    for (long long k = 1; k <= 30; ++k) {
        for (long long m = 1; m <= k; ++m) {
            if (std::gcd(k, m) != 1)
                continue;
            const auto d = simulate(k, m);
            const auto [chain, ids] = exceptional_chain(d);
            CHECK(chain == resolution_chain(k, m));

            const auto q = cf_quotients(k, m);
            CHECK(blowup_count(d) ==
                  static_cast<std::size_t>(std::accumulate(q.begin(), q.end(), 0LL)));

            // Boundary coefficients are never touched by the rewriting.
            CHECK(d.coefficient("bx") == -k);
            CHECK(d.coefficient("by") == m);
        }
    }
}

TEST_CASE("the coefficient-zero component is the (-1)-component") {
    for (long long k = 1; k <= 30; ++k) {
        for (long long m = 1; m <= k; ++m) {
            if (std::gcd(k, m) != 1)
                continue;
            const auto d = simulate(k, m);
            std::vector<VertexId> zero_coef, minus_one;
            for (const auto& [id, kind] : d.kinds) {
                if (kind != VertexKind::Exceptional)
                    continue;
                if (d.coefficient(id) == 0)
                    zero_coef.push_back(id);
                if (d.graph.weight(id) == -1)
                    minus_one.push_back(id);
            }
            REQUIRE(zero_coef.size() == 1);
            REQUIRE(minus_one.size() == 1);
            CHECK(zero_coef == minus_one);
        }
    }
}

TEST_CASE("attachment shape") {
    CHECK(attachment_shape(1, 1) == AttachmentShape{0, 0});
    CHECK(attachment_shape(3, 2) == AttachmentShape{2, 0});
    CHECK(attachment_shape(4, 1) == AttachmentShape{3, 0});

    // {x = 0} always meets the end carrying the head of the x-side reading,
    // {y = 0} the opposite end.
    for (long long k = 2; k <= 20; ++k) {
        for (long long m = 1; m <= k; ++m) {
            if (std::gcd(k, m) != 1)
                continue;
            const auto c = resolution_chain(k, m);
            const auto s = attachment_shape(k, m);
            CHECK(s.x_meets == c.x_side());
            CHECK(s.y_meets == c.y_side());
            CHECK(c.weights[s.x_meets] == c.weights_from_x_side().front());
        }
    }
}

TEST_CASE("to_string names the vertex kinds") {
    CHECK(to_string(VertexKind::BoundaryX) == "boundary-x");
    CHECK(to_string(VertexKind::BoundaryY) == "boundary-y");
    CHECK(to_string(VertexKind::Exceptional) == "exceptional");
}
