#ifndef TREEREG_TREE_ENUM_HPP
#define TREEREG_TREE_ENUM_HPP

#include "treereg/graph.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace treereg {

/// Canonical level sequence of a free tree.
///
/// The tree is rooted at its center. For a bicentral tree the root is the
/// center whose half (the component left after cutting the central edge)
/// is larger, ties broken by the lexicographically larger half. Children
/// are ordered so the level sequence is lexicographically maximal, which
/// puts the other center first in the bicentral case. Equal codes hold
/// exactly for isomorphic trees, and code length equals the tree order.
class TreeCode {
public:
    TreeCode() = default;
    explicit TreeCode(std::vector<std::uint8_t> levels) : levels_(std::move(levels)) {}

    const std::vector<std::uint8_t>& levels() const noexcept { return levels_; }
    int order() const noexcept { return static_cast<int>(levels_.size()); }

    /// Space-separated levels, e.g. "0 1 2 1".
    std::string str() const;
    static TreeCode parse(const std::string& text);

    /// Tree realised by the level sequence; vertex k is position k.
    Graph to_graph() const;

    auto operator<=>(const TreeCode&) const = default;

private:
    std::vector<std::uint8_t> levels_;
};

TreeCode canonical_code(const TreeWitness& t);

/// Default ceiling on enumeration order; TREEREG_MAX_ORDER overrides it.
inline constexpr int kDefaultMaxOrder = 20;
int max_enumeration_order();

/// One code per isomorphism class of free trees on n vertices, ascending.
/// Throws Error when n is outside 1..max_enumeration_order().
std::vector<TreeCode> enumerate_tree_codes(int n);
std::vector<TreeWitness> enumerate_trees(int n);

/// Raw successor-based generation (free-tree level sequences in the order
/// the generator visits them). `visit` returns false to stop early.
void generate_free_trees(int n, const std::function<bool(const std::vector<std::uint8_t>&)>& visit);

/// Free-tree count via Otter's formula on rooted-tree counts.
std::uint64_t count_trees(int n);

/// Uniform labeled tree from a Prüfer sequence drawn with the given seed.
TreeWitness random_tree(int n, std::uint64_t seed);

/// Standard Prüfer decoding; `sequence` has length n-2 with labels < n.
Graph tree_from_pruefer(const std::vector<int>& sequence, int n);

} // namespace treereg

#endif
