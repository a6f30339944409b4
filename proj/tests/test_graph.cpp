#include "treereg/graph.hpp"
#include "treereg/tree_enum.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

using namespace treereg;

namespace {

Graph edges_of(std::initializer_list<Edge> list, int order)
{
    std::vector<Edge> e(list);
    return Graph::from_edge_list(e, order);
}

std::string code_of(const Graph& g) { return canonical_code(TreeWitness(g)).str(); }

const Graph kSpider3 = edges_of({{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}, 7);

} // namespace

TEST_CASE("from_edge_list builds, symmetrizes and deduplicates")
{
    const Graph p2 = edges_of({{0, 1}}, 2);
    CHECK(p2.order() == 2);
    CHECK(p2.edge_count() == 1);
    CHECK(p2.adjacent(1, 0));

    const Graph dup = edges_of({{0, 1}, {1, 0}, {0, 1}}, 3);
    CHECK(dup.edge_count() == 1);
    CHECK(dup.degree(2) == 0);

    CHECK(edges_of({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}, 7) == path_graph(7));
    CHECK(kSpider3 == spider_graph(3, 2));
}

TEST_CASE("from_edge_list rejects bad labels and loops")
{
    CHECK_THROWS_AS(edges_of({{0, 2}}, 2), Error);
    CHECK_THROWS_AS(edges_of({{-1, 0}}, 2), Error);
    CHECK_THROWS_WITH_AS(edges_of({{1, 1}}, 3), doctest::Contains("(1,1)"), Error);
}

TEST_CASE("structural invariants of named trees")
{
    auto s = structural_invariants(path_graph(7));
    CHECK(s.n == 7);
    CHECK(s.p == 2);
    CHECK(s.d == 6);
    CHECK(s.pendant_set == std::vector<Vertex>{0, 6});
    CHECK(s.support_set == std::vector<Vertex>{1, 5});

    s = structural_invariants(star_graph(6));
    CHECK(s.n == 7);
    CHECK(s.p == 6);
    CHECK(s.d == 2);
    CHECK(s.support_set == std::vector<Vertex>{0});

    s = structural_invariants(spider_graph(4, 2));
    CHECK(s.n == 9);
    CHECK(s.p == 4);
    CHECK(s.d == 4);
}

TEST_CASE("structural invariants of paths")
{
    auto s = structural_invariants(path_graph(2));
    CHECK(s.p == 2);
    CHECK(s.d == 1);
    for (int n = 3; n <= 15; ++n) {
        s = structural_invariants(path_graph(n));
        CHECK(s.p == 2);
        CHECK(s.d == n - 1);
    }
    s = structural_invariants(path_graph(1));
    CHECK(s.n == 1);
    CHECK(s.p == 0);
    CHECK(s.d == 0);
}

TEST_CASE("structural invariants reject disconnected and empty input")
{
    CHECK_THROWS_WITH_AS(structural_invariants(disjoint_union(path_graph(2), path_graph(2))),
                         doctest::Contains("different components"), Error);
    CHECK_THROWS_AS(structural_invariants(Graph(0)), Error);
}

TEST_CASE("delete_vertex")
{
    const Graph p3 = delete_vertex(path_graph(3), 1);
    CHECK(p3.order() == 2);
    CHECK(p3.edge_count() == 0);
    CHECK(delete_vertex(path_graph(7), 0) == path_graph(6));
    CHECK(delete_vertex(path_graph(7), 6) == path_graph(6));
    CHECK(delete_vertex(star_graph(6), 6) == star_graph(5));
    CHECK_THROWS_AS(delete_vertex(path_graph(3), 3), Error);
    CHECK_THROWS_AS(delete_vertex(path_graph(3), -1), Error);
}

TEST_CASE("delete_closed_neighborhood")
{
    CHECK(delete_closed_neighborhood(path_graph(3), 1).order() == 0);
    CHECK(delete_closed_neighborhood(path_graph(7), 0) == path_graph(5));
    // N[center] of the 3-leg spider is the center and its three
    // neighbours, leaving the three leg ends isolated.
    const Graph leg_ends = delete_closed_neighborhood(kSpider3, 0);
    CHECK(leg_ends.order() == 3);
    CHECK(leg_ends.edge_count() == 0);
    const Graph three_edges = delete_vertex(kSpider3, 0);
    CHECK(three_edges.order() == 6);
    CHECK(three_edges.edge_count() == 3);
    CHECK(component_count(three_edges) == 3);
    CHECK_THROWS_AS(delete_closed_neighborhood(path_graph(3), 7), Error);
}

TEST_CASE("disjoint_union")
{
    const Graph two = disjoint_union(path_graph(2), path_graph(2));
    CHECK(two.order() == 4);
    CHECK(two.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(disjoint_union(path_graph(3), Graph(0)) == path_graph(3));
    const Graph mixed = disjoint_union(path_graph(2), path_graph(3));
    CHECK(mixed.order() == 5);
    CHECK(component_count(mixed) == 2);
    CHECK(is_forest(mixed));
    CHECK_FALSE(is_tree(mixed));
}

TEST_CASE("induced_subgraph")
{
    const std::vector<Vertex> first4{0, 1, 2, 3};
    CHECK(induced_subgraph(path_graph(7), first4) == path_graph(4));
    CHECK(induced_subgraph(path_graph(7), std::vector<Vertex>{}).order() == 0);
    const std::vector<Vertex> alternate{0, 2, 4};
    const Graph isolated = induced_subgraph(path_graph(7), alternate);
    CHECK(isolated.order() == 3);
    CHECK(isolated.edge_count() == 0);

    const std::vector<Vertex> unsorted{4, 2, 3};
    const auto mapped = induced_subgraph_mapped(path_graph(7), unsorted);
    CHECK(mapped.original == std::vector<Vertex>{2, 3, 4});
    CHECK(mapped.graph == path_graph(3));

    const std::vector<Vertex> bad{0, 9};
    CHECK_THROWS_AS(induced_subgraph(path_graph(7), bad), Error);
}

TEST_CASE("multi_whisker")
{
    CHECK(code_of(multi_whisker(path_graph(2), WhiskerVector::ones(2))) == code_of(path_graph(4)));

    const Graph w3 = multi_whisker(path_graph(3), WhiskerVector::ones(3));
    CHECK(w3.order() == 6);
    CHECK(w3.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {1, 4}, {2, 5}});

    const Graph big = multi_whisker(spider_graph(4, 2), WhiskerVector::constant(9, 2));
    CHECK(big.order() == 27);
    CHECK(big.edge_count() == 26);

    const Graph labels = multi_whisker(path_graph(2), WhiskerVector({2, 1}));
    CHECK(labels.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 4}});

    CHECK_THROWS_AS(multi_whisker(path_graph(3), WhiskerVector::ones(2)), Error);
    CHECK_THROWS_AS(WhiskerVector({1, 0}), Error);
    CHECK_THROWS_AS(WhiskerVector({1, -2}), Error);
}

TEST_CASE("multi_whisker degree and size laws on random trees")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const Graph t = random_tree(n, rng()).graph();
        std::vector<int> a(n);
        for (auto& x : a)
            x = 1 + static_cast<int>(rng() % 3);
        const WhiskerVector wv(a);
        const Graph w = multi_whisker(t, wv);
        CHECK(w.order() == n + wv.total());
        CHECK(w.edge_count() == t.edge_count() + wv.total());
        for (Vertex v = 0; v < n; ++v)
            CHECK(w.degree(v) == t.degree(v) + a[v]);
        for (Vertex v = n; v < w.order(); ++v)
            CHECK(w.degree(v) == 1);

        const Graph ones = multi_whisker(t, WhiskerVector::ones(n));
        CHECK(ones.order() == 2 * n);
        CHECK(ones.edge_count() == t.edge_count() + n);
    }
}

TEST_CASE("deleting two non-adjacent vertices commutes up to isomorphism")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 8);
        const Graph t = random_tree(n, rng()).graph();
        const Vertex u = static_cast<Vertex>(rng() % n);
        Vertex v = static_cast<Vertex>(rng() % n);
        if (u == v || t.adjacent(u, v))
            continue;
        // Deleting u shifts labels above it down by one.
        const Graph a = delete_vertex(delete_vertex(t, u), v > u ? v - 1 : v);
        const Graph b = delete_vertex(delete_vertex(t, v), u > v ? u - 1 : u);
        CHECK(a == b);
        const std::vector<Vertex> keep_all = [&] {
            std::vector<Vertex> k(a.order());
            for (int i = 0; i < a.order(); ++i)
                k[i] = i;
            return k;
        }();
        CHECK(induced_subgraph(a, keep_all) == a);
    }
}

TEST_CASE("induced_subgraph on all vertices keeps the canonical code")
{
    for (int n = 1; n <= 8; ++n)
        for (const auto& t : enumerate_trees(n)) {
            std::vector<Vertex> all(n);
            for (int i = 0; i < n; ++i)
                all[i] = i;
            CHECK(code_of(induced_subgraph(t.graph(), all)) == code_of(t.graph()));
        }
}

TEST_CASE("parse_edge_list")
{
    CHECK(parse_edge_list("0-1,1-2,2-3") == path_graph(4));
    CHECK(parse_edge_list("0-1", 4).order() == 4);
    CHECK(parse_edge_list("").order() == 0);
    CHECK(parse_edge_list("", 1).order() == 1);
    CHECK(parse_edge_list(" 0-1").edge_count() == 1);

    auto position_of = [](const char* text) -> std::size_t {
        try {
            parse_edge_list(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::string::npos;
    };
    CHECK(position_of("0-1,1x") == 5);
    CHECK(position_of("0-1,,2-3") == 4);
    CHECK(position_of("0-1;1-2") == 3);
    CHECK(position_of("a-1") == 0);
    CHECK(position_of("0--1") == 2);
    CHECK(position_of("0-1,") == 4);
    CHECK(position_of("0-1,2-2") == 4);
    CHECK_THROWS_AS(parse_edge_list("0-5", 3), Error);
}

TEST_CASE("parse_edge_pairs and files")
{
    CHECK(parse_edge_pairs("# path\n0 1\n1 2\n\n2 3\n") == path_graph(4));
    try {
        parse_edge_pairs("0 1\n1 x\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
    const auto path = std::filesystem::temp_directory_path() / "treereg_graph_test.txt";
    {
        std::ofstream f(path);
        f << "0 1\n0 2\n0 3\n";
    }
    CHECK(read_edge_file(path.string()) == star_graph(3));
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_edge_file("/nonexistent/edges.txt"), Error);
}

TEST_CASE("format_edge_list round trips")
{
    CHECK(format_edge_list(path_graph(4)) == "0-1,1-2,2-3");
    const Graph s = spider_graph(3, 2);
    CHECK(parse_edge_list(format_edge_list(s), s.order()) == s);
}

TEST_CASE("predicates")
{
    CHECK(is_tree(path_graph(1)));
    CHECK_FALSE(is_tree(Graph(0)));
    CHECK(is_forest(Graph(3)));
    CHECK(component_count(Graph(3)) == 3);
    const Graph cycle = parse_edge_list("0-1,1-2,2-0");
    CHECK(is_connected(cycle));
    CHECK_FALSE(is_forest(cycle));
    CHECK_THROWS_AS(TreeWitness{cycle}, Error);
    CHECK(diameter(cycle) == 1);
}
