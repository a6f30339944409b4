#include "treereg/regularity.hpp"

#include "treereg/gf2.hpp"

#include <algorithm>
#include <bit>

namespace treereg {

namespace {

using Face = SimplicialComplex::Face;
using FaceGroups = std::vector<std::vector<Face>>;

std::size_t face_index(const std::vector<Face>& sorted, Face f)
{
    return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), f) - sorted.begin());
}

// Rank of the boundary map from faces of `size` vertices to faces of size-1.
std::size_t boundary_rank(const FaceGroups& groups, std::size_t size)
{
    if (size == 0 || size >= groups.size() || groups[size].empty())
        return 0;
    const auto& rows = groups[size];
    const auto& cols = groups[size - 1];
    BitMatrix m(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (Face rest = rows[r]; rest != 0; rest &= rest - 1) {
            const Face bit = rest & (~rest + 1);
            m.set(r, face_index(cols, rows[r] & ~bit));
        }
    return m.eliminate_rank();
}

// groups[k] must be sorted and downward closed across sizes.
std::vector<int> homology_of_groups(const FaceGroups& groups)
{
    std::vector<std::size_t> ranks(groups.size() + 1, 0);
    for (std::size_t s = 1; s < groups.size(); ++s)
        ranks[s] = boundary_rank(groups, s);
    std::vector<int> h(groups.size(), 0);
    for (std::size_t s = 0; s < groups.size(); ++s)
        h[s] = static_cast<int>(groups[s].size() - ranks[s] - ranks[s + 1]);
    return h;
}

// All independent subsets of `within`, grouped by size and sorted.
FaceGroups independent_sets(const std::vector<std::uint32_t>& nbr, std::uint32_t within)
{
    std::vector<Face> all{0};
    for (std::uint32_t rest = within; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const std::size_t existing = all.size();
        for (std::size_t k = 0; k < existing; ++k)
            if ((all[k] & nbr[v]) == 0)
                all.push_back(all[k] | (1u << v));
    }
    FaceGroups groups;
    for (Face f : all) {
        const auto s = static_cast<std::size_t>(std::popcount(f));
        if (groups.size() <= s)
            groups.resize(s + 1);
        groups[s].push_back(f);
    }
    for (auto& g : groups)
        std::sort(g.begin(), g.end());
    return groups;
}

std::vector<std::uint32_t> neighbour_masks(const Graph& g)
{
    std::vector<std::uint32_t> nbr(g.order(), 0);
    for (const auto& e : g.edges()) {
        nbr[e.u] |= 1u << e.v;
        nbr[e.v] |= 1u << e.u;
    }
    return nbr;
}

void require_betti_cap(const Graph& g)
{
    if (g.order() > kMaxBettiOrder)
        throw Error("Hochster sweep limited to order " + std::to_string(kMaxBettiOrder) + "; graph has order " +
                    std::to_string(g.order()));
}

// beta_{i+1,j} += h for each reduced homology rank h in dimension m, where
// i + 1 = j - m - 1.
template <typename Sink>
void spill(const std::vector<int>& h, int j, Sink&& sink)
{
    for (std::size_t k = 0; k < h.size(); ++k)
        if (h[k] != 0) {
            const int m = static_cast<int>(k) - 1;
            sink(j - m - 1, j, static_cast<std::uint64_t>(h[k]));
        }
}

void calibrate()
{
    static const bool ok = [] {
        BettiTable t = betti_table_serial(path_graph(2));
        BettiTable expected;
        expected.add(0, 0, 1);
        expected.add(1, 2, 1);
        return t == expected && t.regularity() == 1;
    }();
    if (!ok)
        throw Error("Hochster index calibration failed: beta_{1,2}(P_2) != 1");
}

} // namespace

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<Face> faces) : vertex_count_(vertex_count)
{
    if (vertex_count < 0 || vertex_count > 32)
        throw Error("simplicial complex supports at most 32 vertices");
    faces.push_back(0);
    const Face allowed = vertex_count == 32 ? ~0u : ((1u << vertex_count) - 1);
    for (Face f : faces) {
        if (f & ~allowed)
            throw Error("face uses a vertex outside 0.." + std::to_string(vertex_count - 1));
        const auto s = static_cast<std::size_t>(std::popcount(f));
        if (by_size_.size() <= s)
            by_size_.resize(s + 1);
        by_size_[s].push_back(f);
    }
    for (auto& group : by_size_) {
        std::sort(group.begin(), group.end());
        group.erase(std::unique(group.begin(), group.end()), group.end());
    }
}

SimplicialComplex SimplicialComplex::generated_by(int vertex_count, const std::vector<std::vector<Vertex>>& facets)
{
    std::vector<Face> faces;
    for (const auto& facet : facets) {
        Face top = 0;
        for (Vertex v : facet) {
            if (v < 0 || v >= vertex_count)
                throw Error("facet vertex " + std::to_string(v) + " out of range");
            top |= 1u << v;
        }
        // Every submask of the facet.
        for (Face sub = top;; sub = (sub - 1) & top) {
            faces.push_back(sub);
            if (sub == 0)
                break;
        }
    }
    return SimplicialComplex(vertex_count, std::move(faces));
}

const std::vector<Face>& SimplicialComplex::faces(int size) const
{
    static const std::vector<Face> none;
    if (size < 0 || static_cast<std::size_t>(size) >= by_size_.size())
        return none;
    return by_size_[size];
}

std::size_t SimplicialComplex::face_count() const noexcept
{
    std::size_t total = 0;
    for (const auto& g : by_size_)
        total += g.size();
    return total;
}

std::vector<Vertex> SimplicialComplex::face_vertices(Face f) const
{
    std::vector<Vertex> out;
    for (Face rest = f; rest != 0; rest &= rest - 1)
        out.push_back(std::countr_zero(rest));
    return out;
}

bool SimplicialComplex::is_closed() const
{
    for (std::size_t s = 1; s < by_size_.size(); ++s)
        for (Face f : by_size_[s])
            for (Face rest = f; rest != 0; rest &= rest - 1) {
                const Face sub = f & ~(rest & (~rest + 1));
                if (!std::binary_search(by_size_[s - 1].begin(), by_size_[s - 1].end(), sub))
                    return false;
            }
    return true;
}

SimplicialComplex independence_complex(const Graph& g)
{
    if (g.order() > kMaxComplexOrder)
        throw Error("independence complex limited to order " + std::to_string(kMaxComplexOrder));
    const auto nbr = neighbour_masks(g);
    const std::uint32_t all = g.order() == 32 ? ~0u : ((1u << g.order()) - 1);
    std::vector<Face> faces;
    for (const auto& group : independent_sets(nbr, all))
        faces.insert(faces.end(), group.begin(), group.end());
    return SimplicialComplex(g.order(), std::move(faces));
}

std::vector<int> reduced_homology_ranks(const SimplicialComplex& c)
{
    if (!c.is_closed())
        throw Error("malformed simplicial complex: not closed under taking subsets");
    FaceGroups groups(static_cast<std::size_t>(c.dimension() + 2));
    for (std::size_t s = 0; s < groups.size(); ++s)
        groups[s] = c.faces(static_cast<int>(s));
    return homology_of_groups(groups);
}

void BettiTable::add(int i, int j, std::uint64_t beta)
{
    if (beta != 0)
        entries_[{i, j}] += beta;
}

std::uint64_t BettiTable::at(int i, int j) const
{
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

int BettiTable::regularity() const
{
    int reg = 0;
    for (const auto& [key, beta] : entries_)
        reg = std::max(reg, key.second - key.first);
    return reg;
}

int BettiTable::projective_dimension() const
{
    int pd = 0;
    for (const auto& [key, beta] : entries_)
        pd = std::max(pd, key.first);
    return pd;
}

nlohmann::json BettiTable::to_json() const
{
    auto rows = nlohmann::json::array();
    for (const auto& [key, beta] : entries_)
        rows.push_back({key.first, key.second, beta});
    return {{"entries", rows}, {"reg", regularity()}, {"pdim", projective_dimension()}};
}

BettiTable betti_table_serial(const Graph& g)
{
    require_betti_cap(g);
    BettiTable table;
    const int n = g.order();
    for (std::uint32_t w = 0; w < (1u << n); ++w) {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < n; ++v)
            if (w & (1u << v))
                members.push_back(v);
        const auto h = reduced_homology_ranks(independence_complex(induced_subgraph(g, members)));
        spill(h, static_cast<int>(members.size()), [&](int i, int j, std::uint64_t b) { table.add(i, j, b); });
    }
    return table;
}

BettiTable betti_table(const Graph& g)
{
    require_betti_cap(g);
    calibrate();
    const int n = g.order();
    const auto nbr = neighbour_masks(g);
    const auto subsets = static_cast<std::int64_t>(1) << n;
    // accum[i * (n + 1) + j] holds beta_{i,j}; i ranges over 0..n.
    const std::size_t cells = static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1);
    std::vector<std::uint64_t> total(cells, 0);

#pragma omp parallel
    {
        std::vector<std::uint64_t> local(cells, 0);
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t s = 0; s < subsets; ++s) {
            const auto w = static_cast<std::uint32_t>(s);
            bool cone = false;
            for (std::uint32_t rest = w; rest != 0 && !cone; rest &= rest - 1)
                cone = (nbr[std::countr_zero(rest)] & w) == 0;
            if (cone)
                continue;
            const auto h = homology_of_groups(independent_sets(nbr, w));
            spill(h, std::popcount(w), [&](int i, int j, std::uint64_t b) {
                local[static_cast<std::size_t>(i) * (n + 1) + j] += b;
            });
        }
#pragma omp critical
        for (std::size_t k = 0; k < cells; ++k)
            total[k] += local[k];
    }

    BettiTable table;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            table.add(i, j, total[static_cast<std::size_t>(i) * (n + 1) + j]);
    return table;
}

int regularity(const Graph& g) { return betti_table(g).regularity(); }

} // namespace treereg
