#include "treereg/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

namespace treereg {

namespace {

constexpr int kMinusInf = std::numeric_limits<int>::min() / 4;

// Vertices of each component listed parent-before-child, with parents.
struct RootedForest {
    std::vector<Vertex> order;
    std::vector<Vertex> parent;
};

RootedForest root_forest(const Graph& g)
{
    RootedForest f;
    f.parent.assign(g.order(), -1);
    std::vector<char> seen(g.order(), 0);
    for (Vertex r = 0; r < g.order(); ++r) {
        if (seen[r])
            continue;
        seen[r] = 1;
        std::size_t head = f.order.size();
        f.order.push_back(r);
        while (head < f.order.size()) {
            Vertex u = f.order[head++];
            for (Vertex w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    f.parent[w] = u;
                    f.order.push_back(w);
                }
        }
    }
    return f;
}

// Maximum independent set of a graph on <= 32 vertices given as
// neighbourhood masks. Branches on the lowest candidate vertex.
struct MaskSearch {
    const std::vector<std::uint32_t>& nbr;
    std::uint32_t best = 0;
    int best_size = 0;

    void run(std::uint32_t chosen, int size, std::uint32_t candidates)
    {
        if (size + std::popcount(candidates) <= best_size)
            return;
        if (candidates == 0) {
            best = chosen;
            best_size = size;
            return;
        }
        const int v = std::countr_zero(candidates);
        const std::uint32_t bit = 1u << v;
        run(chosen | bit, size + 1, candidates & ~bit & ~nbr[v]);
        // A vertex with no candidate neighbours is always worth taking.
        if ((candidates & nbr[v]) != 0)
            run(chosen, size, candidates & ~bit);
    }
};

std::uint32_t max_independent_mask(const std::vector<std::uint32_t>& nbr)
{
    MaskSearch search{nbr};
    const int n = static_cast<int>(nbr.size());
    const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
    search.run(0, 0, all);
    return search.best;
}

std::vector<std::uint32_t> vertex_masks(const Graph& g)
{
    std::vector<std::uint32_t> nbr(g.order(), 0);
    for (const auto& e : g.edges()) {
        nbr[e.u] |= 1u << e.v;
        nbr[e.v] |= 1u << e.u;
    }
    return nbr;
}

// Two edges conflict if they share an endpoint or a host edge joins them.
std::vector<std::uint32_t> edge_conflict_masks(const Graph& g, const std::vector<Edge>& edges)
{
    const auto m = edges.size();
    std::vector<std::uint32_t> conflict(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const Vertex a[2] = {edges[i].u, edges[i].v};
            const Vertex b[2] = {edges[j].u, edges[j].v};
            bool clash = false;
            for (Vertex x : a)
                for (Vertex y : b)
                    clash = clash || x == y || g.adjacent(x, y);
            if (clash) {
                conflict[i] |= 1u << j;
                conflict[j] |= 1u << i;
            }
        }
    return conflict;
}

void require_edge_cap(const Graph& g)
{
    if (g.edge_count() > kBruteForceEdgeCap)
        throw Error("brute-force induced matching limited to " + std::to_string(kBruteForceEdgeCap) +
                    " edges; graph has " + std::to_string(g.edge_count()));
}

void require_order_cap(const Graph& g)
{
    if (g.order() > kBruteForceOrderCap)
        throw Error("brute-force independence number limited to order " + std::to_string(kBruteForceOrderCap) +
                    "; graph has order " + std::to_string(g.order()));
}

MatchingCertificate brute_force_matching(const Graph& g)
{
    require_edge_cap(g);
    const auto edges = g.edges();
    const auto mask = max_independent_mask(edge_conflict_masks(g, edges));
    MatchingCertificate out;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (mask & (1u << i))
            out.edges.push_back(edges[i]);
    return out;
}

IndependentSetCertificate brute_force_independent_set(const Graph& g)
{
    require_order_cap(g);
    const auto mask = max_independent_mask(vertex_masks(g));
    IndependentSetCertificate out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (mask & (1u << v))
            out.vertices.push_back(v);
    return out;
}

// Induced matching DP on a rooted forest. Per vertex:
//   free  - v is not an endpoint; children unconstrained
//   bare  - v is not an endpoint and neither is any child (v matched upward)
//   down  - v is matched to one of its children
MatchingCertificate forest_induced_matching(const Graph& g)
{
    const auto forest = root_forest(g);
    const int n = g.order();
    std::vector<int> free_val(n, 0), bare_val(n, 0), down_val(n, kMinusInf), partner(n, -1);
    std::vector<int> best_gain(n, kMinusInf);

    for (auto it = forest.order.rbegin(); it != forest.order.rend(); ++it) {
        const Vertex v = *it;
        if (best_gain[v] > kMinusInf)
            down_val[v] = bare_val[v] + best_gain[v];
        const Vertex up = forest.parent[v];
        if (up < 0)
            continue;
        free_val[up] += std::max(free_val[v], down_val[v]);
        bare_val[up] += free_val[v];
        const int gain = bare_val[v] + 1 - free_val[v];
        if (gain > best_gain[up]) {
            best_gain[up] = gain;
            partner[up] = v;
        }
    }

    enum class State { Best, Free, Bare };
    std::vector<State> state(n, State::Best);
    MatchingCertificate out;
    for (Vertex v : forest.order) {
        const State s = state[v];
        const bool matched_down = s == State::Best && down_val[v] > free_val[v];
        if (matched_down)
            out.edges.push_back({std::min(v, partner[v]), std::max(v, partner[v])});
        for (Vertex w : g.neighbors(v)) {
            if (w == forest.parent[v])
                continue;
            if (matched_down)
                state[w] = w == partner[v] ? State::Bare : State::Free;
            else if (s == State::Bare)
                state[w] = State::Free;
            else
                state[w] = State::Best;
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

IndependentSetCertificate forest_independent_set(const Graph& g)
{
    const auto forest = root_forest(g);
    const int n = g.order();
    std::vector<int> in(n, 1), out(n, 0);
    for (auto it = forest.order.rbegin(); it != forest.order.rend(); ++it) {
        const Vertex v = *it;
        const Vertex up = forest.parent[v];
        if (up < 0)
            continue;
        in[up] += out[v];
        out[up] += std::max(in[v], out[v]);
    }
    std::vector<char> excluded(n, 0);
    IndependentSetCertificate cert;
    for (Vertex v : forest.order) {
        const Vertex up = forest.parent[v];
        const bool forced_out = up >= 0 && excluded[up] == 0;
        if (!forced_out && in[v] >= out[v]) {
            cert.vertices.push_back(v);
        } else {
            excluded[v] = 1;
        }
    }
    std::sort(cert.vertices.begin(), cert.vertices.end());
    return cert;
}

} // namespace

MatchingCertificate induced_matching_number(const Graph& g)
{
    if (is_forest(g))
        return forest_induced_matching(g);
    if (g.edge_count() > kBruteForceEdgeCap)
        throw Error("induced matching of a non-forest with " + std::to_string(g.edge_count()) +
                    " edges exceeds the brute-force cap of " + std::to_string(kBruteForceEdgeCap) +
                    "; use the homology oracle (regularity >= im) instead");
    return brute_force_matching(g);
}

IndependentSetCertificate independence_number(const Graph& g)
{
    if (is_forest(g))
        return forest_independent_set(g);
    if (g.order() > kBruteForceOrderCap)
        throw Error("independence number of a non-forest of order " + std::to_string(g.order()) +
                    " exceeds the brute-force cap of " + std::to_string(kBruteForceOrderCap));
    return brute_force_independent_set(g);
}

int brute_force_im(const Graph& g) { return brute_force_matching(g).size(); }

int brute_force_alpha(const Graph& g) { return brute_force_independent_set(g).size(); }

bool is_induced_matching(const Graph& g, const MatchingCertificate& m)
{
    std::vector<int> owner(g.order(), -1);
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
        const auto& e = m.edges[i];
        if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v))
            return false;
        for (Vertex x : {e.u, e.v}) {
            if (owner[x] >= 0)
                return false;
            owner[x] = static_cast<int>(i);
        }
    }
    for (const auto& e : g.edges())
        if (owner[e.u] >= 0 && owner[e.v] >= 0 && owner[e.u] != owner[e.v])
            return false;
    return true;
}

bool is_independent_set(const Graph& g, const IndependentSetCertificate& s)
{
    std::vector<char> member(g.order(), 0);
    for (Vertex v : s.vertices) {
        if (v < 0 || v >= g.order() || member[v])
            return false;
        member[v] = 1;
    }
    for (const auto& e : g.edges())
        if (member[e.u] && member[e.v])
            return false;
    return true;
}

} // namespace treereg
