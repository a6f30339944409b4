#include "treereg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>

namespace treereg {

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error(message + " (at position " + std::to_string(position) + ")"), position_(position)
{
}

Graph::Graph(int order)
{
    if (order < 0)
        throw Error("graph order must be non-negative, got " + std::to_string(order));
    adjacency_.resize(order);
}

Graph Graph::from_edge_list(std::span<const Edge> edges, int order)
{
    Graph g(order);
    for (const auto& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= order || e.v >= order)
            throw Error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        ") has a label outside 0.." + std::to_string(order - 1));
        if (e.u == e.v)
            throw Error("loop edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") rejected");
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    int twice = 0;
    for (auto& nbrs : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        twice += static_cast<int>(nbrs.size());
    }
    g.edge_count_ = twice / 2;
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    const auto& nbrs = adjacency_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v)
                out.push_back({u, v});
    return out;
}

namespace {

std::vector<int> component_labels(const Graph& g, int& count)
{
    std::vector<int> label(g.order(), -1);
    count = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (label[s] >= 0)
            continue;
        label[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u))
                if (label[w] < 0) {
                    label[w] = count;
                    stack.push_back(w);
                }
        }
        ++count;
    }
    return label;
}

void require_vertex(const Graph& g, Vertex v)
{
    if (v < 0 || v >= g.order())
        throw Error("vertex " + std::to_string(v) + " out of range for graph of order " +
                    std::to_string(g.order()));
}

std::vector<int> bfs_distances(const Graph& g, Vertex source)
{
    std::vector<int> dist(g.order(), -1);
    std::queue<Vertex> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

} // namespace

int component_count(const Graph& g)
{
    int count = 0;
    component_labels(g, count);
    return count;
}

bool is_connected(const Graph& g) { return g.order() > 0 && component_count(g) == 1; }

bool is_forest(const Graph& g) { return g.edge_count() == g.order() - component_count(g); }

bool is_tree(const Graph& g) { return is_connected(g) && g.edge_count() == g.order() - 1; }

TreeWitness::TreeWitness(Graph g) : graph_(std::move(g))
{
    if (!is_tree(graph_))
        throw Error("graph of order " + std::to_string(graph_.order()) + " with " +
                    std::to_string(graph_.edge_count()) + " edges is not a tree");
}

WhiskerVector::WhiskerVector(std::vector<int> entries) : entries_(std::move(entries))
{
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] < 1)
            throw Error("whisker vector entry " + std::to_string(i) + " is " +
                        std::to_string(entries_[i]) + "; entries must be positive");
}

int WhiskerVector::total() const noexcept { return std::accumulate(entries_.begin(), entries_.end(), 0); }

int diameter(const Graph& g)
{
    int best = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        auto dist = bfs_distances(g, s);
        best = std::max(best, *std::max_element(dist.begin(), dist.end()));
    }
    return best;
}

StructuralInvariants structural_invariants(const Graph& g)
{
    if (g.order() == 0)
        throw Error("structural invariants are undefined for the empty graph");
    int count = 0;
    auto label = component_labels(g, count);
    if (count > 1) {
        Vertex other = static_cast<Vertex>(std::find_if(label.begin(), label.end(), [](int c) { return c != 0; }) -
                                           label.begin());
        throw Error("graph is disconnected: vertices 0 and " + std::to_string(other) +
                    " lie in different components");
    }

    StructuralInvariants out;
    out.n = g.order();
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1)
            out.pendant_set.push_back(v);
    out.p = static_cast<int>(out.pendant_set.size());
    for (Vertex v = 0; v < g.order(); ++v) {
        auto nbrs = g.neighbors(v);
        if (std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return g.degree(w) == 1; }))
            out.support_set.push_back(v);
    }
    out.d = diameter(g);
    return out;
}

RelabeledGraph induced_subgraph_mapped(const Graph& g, std::span<const Vertex> keep)
{
    std::vector<Vertex> members(keep.begin(), keep.end());
    for (Vertex v : members)
        require_vertex(g, v);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    std::vector<int> rank(g.order(), -1);
    for (std::size_t k = 0; k < members.size(); ++k)
        rank[members[k]] = static_cast<int>(k);

    std::vector<Edge> edges;
    for (Vertex u : members)
        for (Vertex w : g.neighbors(u))
            if (u < w && rank[w] >= 0)
                edges.push_back({rank[u], rank[w]});
    return {Graph::from_edge_list(edges, static_cast<int>(members.size())), std::move(members)};
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep)
{
    return induced_subgraph_mapped(g, keep).graph;
}

Graph delete_vertex(const Graph& g, Vertex v)
{
    require_vertex(g, v);
    std::vector<Vertex> keep;
    for (Vertex u = 0; u < g.order(); ++u)
        if (u != v)
            keep.push_back(u);
    return induced_subgraph(g, keep);
}

Graph delete_closed_neighborhood(const Graph& g, Vertex v)
{
    require_vertex(g, v);
    std::vector<Vertex> keep;
    for (Vertex u = 0; u < g.order(); ++u)
        if (u != v && !g.adjacent(u, v))
            keep.push_back(u);
    return induced_subgraph(g, keep);
}

Graph disjoint_union(const Graph& g1, const Graph& g2)
{
    auto edges = g1.edges();
    const int shift = g1.order();
    for (const auto& e : g2.edges())
        edges.push_back({e.u + shift, e.v + shift});
    return Graph::from_edge_list(edges, g1.order() + g2.order());
}

Graph multi_whisker(const Graph& g, const WhiskerVector& a)
{
    if (a.size() != g.order())
        throw Error("whisker vector has length " + std::to_string(a.size()) + " but graph has order " +
                    std::to_string(g.order()));
    auto edges = g.edges();
    Vertex next = g.order();
    for (Vertex i = 0; i < g.order(); ++i)
        for (int k = 0; k < a.entries()[i]; ++k)
            edges.push_back({i, next++});
    return Graph::from_edge_list(edges, next);
}

Graph path_graph(int n)
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    return Graph::from_edge_list(edges, n);
}

Graph star_graph(int leaves)
{
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= leaves; ++i)
        edges.push_back({0, i});
    return Graph::from_edge_list(edges, leaves + 1);
}

Graph spider_graph(int legs, int leg_length)
{
    std::vector<Edge> edges;
    Vertex next = 1;
    for (int leg = 0; leg < legs; ++leg) {
        Vertex prev = 0;
        for (int k = 0; k < leg_length; ++k) {
            edges.push_back({prev, next});
            prev = next++;
        }
    }
    return Graph::from_edge_list(edges, next);
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Reads a non-negative integer at `pos`, advancing it.
int read_label(std::string_view text, std::size_t& pos, std::size_t report_at)
{
    while (pos < text.size() && is_space(text[pos]))
        ++pos;
    const std::size_t where = report_at == std::string_view::npos ? pos : report_at;
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
        throw ParseError("expected a vertex label", where);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc())
        throw ParseError("vertex label out of range", where);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && is_space(text[pos]))
        ++pos;
    return value;
}

Graph finish(const std::vector<Edge>& edges, int order)
{
    if (order < 0) {
        order = 0;
        for (const auto& e : edges)
            order = std::max({order, e.u + 1, e.v + 1});
    }
    return Graph::from_edge_list(edges, order);
}

} // namespace

Graph parse_edge_list(std::string_view text, int order)
{
    std::vector<Edge> edges;
    std::size_t pos = 0;
    while (pos < text.size() && (is_space(text[pos]) || text[pos] == '\n'))
        ++pos;
    if (pos == text.size())
        return finish(edges, order);
    while (true) {
        const std::size_t token_start = pos;
        int u = read_label(text, pos, std::string_view::npos);
        if (pos >= text.size() || text[pos] != '-')
            throw ParseError("expected '-' between vertex labels", pos);
        ++pos;
        int v = read_label(text, pos, std::string_view::npos);
        if (u == v)
            throw ParseError("loop edge " + std::to_string(u) + "-" + std::to_string(v), token_start);
        edges.push_back({u, v});
        while (pos < text.size() && text[pos] == '\n')
            ++pos;
        if (pos == text.size())
            break;
        if (text[pos] != ',')
            throw ParseError("expected ',' between edges", pos);
        ++pos;
    }
    if (order >= 0)
        for (const auto& e : edges)
            if (e.u >= order || e.v >= order)
                throw Error("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " exceeds order " +
                            std::to_string(order));
    return finish(edges, order);
}

Graph parse_edge_pairs(std::string_view text, int order)
{
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;
        std::string_view line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::size_t pos = 0;
        while (pos < line.size() && is_space(line[pos]))
            ++pos;
        if (pos < line.size()) {
            int u = read_label(line, pos, line_no);
            int v = read_label(line, pos, line_no);
            if (pos != line.size())
                throw ParseError("trailing characters after vertex pair", line_no);
            if (u == v)
                throw ParseError("loop edge " + std::to_string(u) + " " + std::to_string(v), line_no);
            edges.push_back({u, v});
        }
        if (end == text.size())
            break;
        start = end + 1;
    }
    if (order >= 0)
        for (const auto& e : edges)
            if (e.u >= order || e.v >= order)
                throw Error("edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " exceeds order " +
                            std::to_string(order));
    return finish(edges, order);
}

Graph read_edge_file(const std::string& path, int order)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open edge file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_edge_pairs(buffer.str(), order);
}

std::string format_edge_list(const Graph& g)
{
    std::string out;
    for (const auto& e : g.edges()) {
        if (!out.empty())
            out += ',';
        out += std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    return out;
}

} // namespace treereg
