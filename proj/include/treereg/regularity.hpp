#ifndef TREEREG_REGULARITY_HPP
#define TREEREG_REGULARITY_HPP

#include "treereg/graph.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace treereg {

inline constexpr int kMaxComplexOrder = 24;
inline constexpr int kMaxBettiOrder = 12;

/// Finite simplicial complex on vertices 0..vertex_count-1. Faces are
/// bit masks (bit v set iff v is in the face), grouped by size so that
/// `faces(k)` holds the (k-1)-dimensional faces in increasing mask order.
class SimplicialComplex {
public:
    using Face = std::uint32_t;

    /// Takes an explicit face list (the empty face is added if missing).
    /// Duplicates collapse; closure is not checked here, see is_closed().
    SimplicialComplex(int vertex_count, std::vector<Face> faces);

    /// All subsets of the given facets.
    static SimplicialComplex generated_by(int vertex_count, const std::vector<std::vector<Vertex>>& facets);

    int vertex_count() const noexcept { return vertex_count_; }
    /// Largest face dimension; -1 for the complex {∅}.
    int dimension() const noexcept { return static_cast<int>(by_size_.size()) - 2; }
    const std::vector<Face>& faces(int size) const;
    std::size_t face_count() const noexcept;
    std::vector<Vertex> face_vertices(Face f) const;

    /// Every subset of every face is a face.
    bool is_closed() const;

private:
    int vertex_count_;
    std::vector<std::vector<Face>> by_size_;
};

/// Faces are exactly the independent sets of g. Order capped at kMaxComplexOrder.
SimplicialComplex independence_complex(const Graph& g);

/// Reduced homology ranks over GF(2); element k is the rank in dimension
/// k-1, covering dimensions -1..dimension(). Throws if not closed.
std::vector<int> reduced_homology_ranks(const SimplicialComplex& c);

/// Graded Betti numbers of S/I(G), keyed by (homological index, degree).
class BettiTable {
public:
    using Key = std::pair<int, int>;

    void add(int i, int j, std::uint64_t beta);
    std::uint64_t at(int i, int j) const;
    const std::map<Key, std::uint64_t>& entries() const noexcept { return entries_; }

    /// max{j - i} over nonzero entries.
    int regularity() const;
    /// max{i} over nonzero entries.
    int projective_dimension() const;

    nlohmann::json to_json() const;

    bool operator==(const BettiTable&) const = default;

private:
    std::map<Key, std::uint64_t> entries_;
};

/// Hochster's formula over all vertex subsets W:
///   beta_{i+1,|W|}(S/I) += rank H~_{|W|-i-2}(Ind(G[W]))
/// OpenMP-parallel over subsets; skips subsets whose induced independence
/// complex is a cone. Order capped at kMaxBettiOrder.
BettiTable betti_table(const Graph& g);

/// Straight reference for betti_table: every subset goes through
/// induced_subgraph, independence_complex and reduced_homology_ranks.
BettiTable betti_table_serial(const Graph& g);

/// Castelnuovo-Mumford regularity of S/I(G) from the Betti table; 0 for
/// edgeless graphs.
int regularity(const Graph& g);

} // namespace treereg

#endif
