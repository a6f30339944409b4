#ifndef TREEREG_GRAPH_HPP
#define TREEREG_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace treereg {

using Vertex = int;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed edge-list text. `position` is a 0-based character offset
/// (or line number, for file input) of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

struct Edge {
    Vertex u;
    Vertex v;
    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..order-1 with sorted adjacency.
/// Isolated vertices are allowed.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);

    /// Throws Error on out-of-range labels or loops. Duplicate edges collapse.
    static Graph from_edge_list(std::span<const Edge> edges, int order);

    int order() const noexcept { return static_cast<int>(adjacency_.size()); }
    int edge_count() const noexcept { return edge_count_; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Edges with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    int edge_count_ = 0;
};

/// Graph plus the evidence that it is connected with order-1 edges.
class TreeWitness {
public:
    /// Throws Error if `g` is not a tree (order 0 is not a tree).
    explicit TreeWitness(Graph g);

    const Graph& graph() const noexcept { return graph_; }
    int order() const noexcept { return graph_.order(); }

private:
    Graph graph_;
};

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
int component_count(const Graph& g);

/// Multi-whisker vector: a_i >= 1 pendants attached at vertex i.
class WhiskerVector {
public:
    explicit WhiskerVector(std::vector<int> entries);
    static WhiskerVector ones(int n) { return WhiskerVector(std::vector<int>(n, 1)); }
    static WhiskerVector constant(int n, int value) { return WhiskerVector(std::vector<int>(n, value)); }

    std::span<const int> entries() const noexcept { return entries_; }
    int size() const noexcept { return static_cast<int>(entries_.size()); }
    int total() const noexcept;

private:
    std::vector<int> entries_;
};

struct StructuralInvariants {
    int n = 0;
    int p = 0;
    int d = 0;
    std::vector<Vertex> pendant_set;
    std::vector<Vertex> support_set;
};

/// Order, pendant count, diameter, pendant and support vertices.
/// Throws Error for disconnected or empty input.
StructuralInvariants structural_invariants(const Graph& g);

/// Eccentricity-based diameter of a connected graph.
int diameter(const Graph& g);

/// Result of a relabeling surgery: `original[k]` is the label in the
/// source graph of vertex k of `graph`.
struct RelabeledGraph {
    Graph graph;
    std::vector<Vertex> original;
};

RelabeledGraph induced_subgraph_mapped(const Graph& g, std::span<const Vertex> keep);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
Graph delete_vertex(const Graph& g, Vertex v);
Graph delete_closed_neighborhood(const Graph& g, Vertex v);
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Original vertices keep labels 0..n-1; whiskers of vertex i follow in
/// increasing i, then increasing whisker index.
Graph multi_whisker(const Graph& g, const WhiskerVector& a);

Graph path_graph(int n);
Graph star_graph(int leaves);
/// Spider with `legs` legs of `leg_length` edges each; the center is vertex 0.
Graph spider_graph(int legs, int leg_length);

/// Parses `0-1,1-2` (comma separated, 0-based). Order is 1 + max label
/// unless `order` is non-negative. Throws ParseError.
Graph parse_edge_list(std::string_view text, int order = -1);

/// Parses one `u v` pair per line; blank lines and `#` comments skipped.
Graph parse_edge_pairs(std::string_view text, int order = -1);
Graph read_edge_file(const std::string& path, int order = -1);

std::string format_edge_list(const Graph& g);

} // namespace treereg

#endif
