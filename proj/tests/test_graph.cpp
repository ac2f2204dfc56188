#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <string>

#include "hamilton/error.hpp"
#include "hamilton/graph.hpp"
#include "support/fixtures.hpp"

using namespace hamilton;
using fixtures::error_code;
using fixtures::set_from_mask;

TEST_CASE("build_graph constructs and validates") {
    const Graph tri = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(tri.n == 3);
    CHECK(tri.m == 3);
    CHECK(tri.degree(0) == 2);
    CHECK(tri.degree(1) == 2);
    CHECK(tri.degree(2) == 2);
    CHECK(tri.has_edge(0, 2));
    CHECK_FALSE(tri.has_edge(0, 0));

    const Graph k2 = build_graph(2, {{0, 1}});
    CHECK(k2.m == 1);

    CHECK((error_code([] { build_graph(3, {{0, 1}, {0, 1}}); })) == "DuplicateEdge");
    CHECK((error_code([] { build_graph(3, {{0, 1}, {1, 0}}); })) == "DuplicateEdge");
    CHECK((error_code([] { build_graph(3, {{1, 1}}); })) == "InvalidEdge");
    CHECK((error_code([] { build_graph(3, {{0, 3}}); })) == "VertexOutOfRange");
    CHECK((error_code([] { build_graph(0, {}); })) == "InvalidSize");
}

TEST_CASE("volume") {
    const Graph tri = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(volume(tri, VertexSet::full(3)) == 6);
    CHECK(volume(tri, VertexSet{}) == 0);

    const Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(volume(star, VertexSet{{0}}) == 3);
}

TEST_CASE("edge_count_between uses the ordered-pair convention") {
    const Graph tri = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(edge_count_between(tri, VertexSet::full(3), VertexSet::full(3)) == 6);
    CHECK(edge_count_between(tri, VertexSet{{0}}, VertexSet{{1}}) == 1);

    const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    const VertexSet x{{0, 1}};
    const VertexSet y{{1, 2}};
    CHECK(fixtures::brute_ordered_pairs(p3, x, y) == 2);
    CHECK(edge_count_between(p3, x, y) == 2);
}

TEST_CASE("neighborhood") {
    const Graph tri = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(neighborhood(tri, VertexSet{{0}}).members() == std::vector<Vertex>{1, 2});
    CHECK(neighborhood(tri, VertexSet::full(3)).empty());

    const Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(neighborhood(p4, VertexSet{{1}}).members() == std::vector<Vertex>{0, 2});
}

TEST_CASE("connected_components") {
    CHECK(connected_components(build_graph(3, {{0, 1}, {1, 2}, {2, 0}})).count == 1);

    const Components two = connected_components(build_graph(4, {{0, 1}, {2, 3}}));
    CHECK(two.count == 2);
    CHECK(two.labels[0] == two.labels[1]);
    CHECK(two.labels[2] == two.labels[3]);
    CHECK(two.labels[0] != two.labels[2]);

    CHECK(connected_components(build_graph(3, {})).count == 3);
}

TEST_CASE("set identities hold exhaustively on small graphs") {
    for (const Graph& g : fixtures::ensemble(6)) {
        if (g.n > 6) continue;
        const auto full = static_cast<std::uint64_t>(1) << g.n;
        for (std::uint64_t xm = 0; xm < full; ++xm) {
            const VertexSet x = set_from_mask(g.n, xm);
            REQUIRE(edge_count_between(g, x, x) == fixtures::brute_ordered_pairs(g, x, x));
            const VertexSet nx = neighborhood(g, x);
            REQUIRE(nx.members() == fixtures::brute_neighborhood(g, x));
            for (Vertex v : nx) REQUIRE(!x.contains(v));
            // disjoint partners
            const std::uint64_t comp = (full - 1) & ~xm;
            for (std::uint64_t ym = comp;; ym = (ym - 1) & comp) {
                const VertexSet y = set_from_mask(g.n, ym);
                const auto exy = edge_count_between(g, x, y);
                REQUIRE(exy == edge_count_between(g, y, x));
                REQUIRE(exy == fixtures::brute_ordered_pairs(g, x, y));
                REQUIRE(volume(g, set_from_mask(g.n, xm | ym)) == volume(g, x) + volume(g, y));
                const auto e_union = edge_count_between(g, set_from_mask(g.n, xm | ym),
                                                        set_from_mask(g.n, xm | ym)) /
                                     2;
                const auto e_x = edge_count_between(g, x, x) / 2;
                const auto e_y = edge_count_between(g, y, y) / 2;
                REQUIRE(e_union == e_x + e_y + exy);
                if (ym == 0) break;
            }
        }
    }
}

TEST_CASE("vertex set validation") {
    const Graph tri = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK((error_code([&] { volume(tri, VertexSet{{0, 5}}); })) == "VertexOutOfRange");
    CHECK(VertexSet{{2, 0, 1, 1}}.members() == std::vector<Vertex>{0, 1, 2});
}
