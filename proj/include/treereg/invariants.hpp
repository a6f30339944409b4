#ifndef TREEREG_INVARIANTS_HPP
#define TREEREG_INVARIANTS_HPP

#include "treereg/graph.hpp"

#include <vector>

namespace treereg {

/// Pairwise vertex-disjoint edges, with no host edge joining two of them.
struct MatchingCertificate {
    std::vector<Edge> edges;
    int size() const noexcept { return static_cast<int>(edges.size()); }
};

struct IndependentSetCertificate {
    std::vector<Vertex> vertices;
    int size() const noexcept { return static_cast<int>(vertices.size()); }
};

/// Subset-enumeration caps for the brute-force paths.
inline constexpr int kBruteForceEdgeCap = 24;
inline constexpr int kBruteForceOrderCap = 24;

/// Exact induced matching number. Forests use a rooted DP; other graphs
/// fall back to brute force when they have at most kBruteForceEdgeCap edges.
MatchingCertificate induced_matching_number(const Graph& g);

/// Exact independence number (forest DP, otherwise brute force).
IndependentSetCertificate independence_number(const Graph& g);

int brute_force_im(const Graph& g);
int brute_force_alpha(const Graph& g);

bool is_induced_matching(const Graph& g, const MatchingCertificate& m);
bool is_independent_set(const Graph& g, const IndependentSetCertificate& s);

} // namespace treereg

#endif
