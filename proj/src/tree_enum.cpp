#include "treereg/tree_enum.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <random>
#include <sstream>

namespace treereg {

std::string TreeCode::str() const
{
    std::string out;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += std::to_string(static_cast<int>(levels_[i]));
    }
    return out;
}

TreeCode TreeCode::parse(const std::string& text)
{
    std::istringstream in(text);
    std::vector<std::uint8_t> levels;
    int level = 0;
    while (in >> level) {
        if (level < 0 || level > 255)
            throw Error("tree code level " + std::to_string(level) + " out of range");
        levels.push_back(static_cast<std::uint8_t>(level));
    }
    if (!in.eof())
        throw Error("malformed tree code '" + text + "'");
    if (levels.empty() || levels[0] != 0)
        throw Error("tree code must start with level 0");
    for (std::size_t i = 1; i < levels.size(); ++i)
        if (levels[i] < 1 || levels[i] > levels[i - 1] + 1)
            throw Error("tree code '" + text + "' is not a level sequence");
    return TreeCode(std::move(levels));
}

Graph TreeCode::to_graph() const
{
    std::vector<Edge> edges;
    std::vector<Vertex> ancestors; // ancestors[level] = latest vertex at that level
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        const int level = levels_[i];
        ancestors.resize(level + 1);
        ancestors[level] = static_cast<Vertex>(i);
        if (level > 0)
            edges.push_back({ancestors[level - 1], static_cast<Vertex>(i)});
    }
    return Graph::from_edge_list(edges, order());
}

namespace {

using Levels = std::vector<std::uint8_t>;

// Lexicographically maximal level sequence of the subtree at `root`,
// never crossing into `blocked`.
Levels rooted_code(const Graph& g, Vertex root, Vertex parent, Vertex blocked)
{
    std::vector<Levels> children;
    for (Vertex w : g.neighbors(root))
        if (w != parent && w != blocked)
            children.push_back(rooted_code(g, w, root, blocked));
    std::sort(children.begin(), children.end(), std::greater<>());
    Levels out{0};
    for (const auto& child : children)
        for (auto level : child)
            out.push_back(static_cast<std::uint8_t>(level + 1));
    return out;
}

std::vector<Vertex> centers(const Graph& g)
{
    const int n = g.order();
    if (n <= 2) {
        std::vector<Vertex> all(n);
        for (int i = 0; i < n; ++i)
            all[i] = i;
        return all;
    }
    std::vector<int> degree(n);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        if (degree[v] == 1)
            layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<Vertex> next;
        for (Vertex leaf : layer)
            for (Vertex w : g.neighbors(leaf))
                if (--degree[w] == 1)
                    next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

} // namespace

TreeCode canonical_code(const TreeWitness& t)
{
    const Graph& g = t.graph();
    const auto c = centers(g);
    if (c.size() == 1)
        return TreeCode(rooted_code(g, c[0], -1, -1));

    Levels first = rooted_code(g, c[0], -1, c[1]);
    Levels second = rooted_code(g, c[1], -1, c[0]);
    // Root at the center owning the larger half.
    if (first.size() < second.size() || (first.size() == second.size() && first < second))
        std::swap(first, second);
    Levels out{0};
    for (auto level : second)
        out.push_back(static_cast<std::uint8_t>(level + 1));
    out.insert(out.end(), first.begin() + 1, first.end());
    return TreeCode(std::move(out));
}

int max_enumeration_order()
{
    if (const char* env = std::getenv("TREEREG_MAX_ORDER")) {
        char* end = nullptr;
        long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value >= 1 && value <= 255)
            return static_cast<int>(value);
    }
    return kDefaultMaxOrder;
}

namespace {

void require_order(int n)
{
    const int cap = max_enumeration_order();
    if (n < 1 || n > cap)
        throw Error("tree order " + std::to_string(n) + " outside supported range 1.." + std::to_string(cap));
}

// Next rooted level sequence in the generator's order, altering positions
// from `p` onward. Returns false when exhausted.
bool next_rooted(Levels& seq, std::size_t p)
{
    if (p == 0)
        return false;
    std::size_t q = p - 1;
    while (seq[q] != seq[p] - 1)
        --q;
    for (std::size_t i = p; i < seq.size(); ++i)
        seq[i] = seq[i - p + q];
    return true;
}

bool next_rooted(Levels& seq)
{
    std::size_t p = seq.size() - 1;
    while (p > 0 && seq[p] == 1)
        --p;
    return next_rooted(seq, p);
}

struct Split {
    std::size_t left_size; // vertices in the first subtree of the root
    int left_height;
    int rest_height;
};

// The first subtree of the root versus the root with its other subtrees.
Split split(const Levels& seq, Levels& left, Levels& rest)
{
    std::size_t m = seq.size();
    for (std::size_t i = 2; i < seq.size(); ++i)
        if (seq[i] == 1) {
            m = i;
            break;
        }
    left.clear();
    rest.assign(1, 0);
    for (std::size_t i = 1; i < m; ++i)
        left.push_back(static_cast<std::uint8_t>(seq[i] - 1));
    for (std::size_t i = m; i < seq.size(); ++i)
        rest.push_back(seq[i]);
    return {left.size(), *std::max_element(left.begin(), left.end()),
            *std::max_element(rest.begin(), rest.end())};
}

// Advances `seq` to the nearest sequence that is a valid free-tree
// representative (the center-rooted form described on TreeCode).
bool next_free(Levels& seq, Levels& left, Levels& rest)
{
    auto s = split(seq, left, rest);
    bool valid = s.rest_height >= s.left_height;
    if (valid && s.rest_height == s.left_height) {
        if (left.size() > rest.size())
            valid = false;
        else if (left.size() == rest.size() && left > rest)
            valid = false;
    }
    if (valid)
        return true;

    const std::size_t p = s.left_size;
    const bool deep = seq[p] > 2;
    if (!next_rooted(seq, p))
        return false;
    if (deep) {
        auto fresh = split(seq, left, rest);
        const std::size_t suffix = static_cast<std::size_t>(fresh.left_height) + 1;
        for (std::size_t k = 0; k < suffix; ++k)
            seq[seq.size() - suffix + k] = static_cast<std::uint8_t>(k + 1);
    }
    return true;
}

} // namespace

void generate_free_trees(int n, const std::function<bool(const Levels&)>& visit)
{
    require_order(n);
    if (n <= 2) {
        Levels seq(n);
        for (int i = 0; i < n; ++i)
            seq[i] = static_cast<std::uint8_t>(i);
        visit(seq);
        return;
    }
    // Start from the path rooted at its center.
    Levels seq;
    for (int i = 0; i <= n / 2; ++i)
        seq.push_back(static_cast<std::uint8_t>(i));
    for (int i = 1; i < (n + 1) / 2; ++i)
        seq.push_back(static_cast<std::uint8_t>(i));

    Levels left, rest;
    while (next_free(seq, left, rest)) {
        if (!visit(seq))
            return;
        if (!next_rooted(seq))
            return;
    }
}

std::vector<TreeCode> enumerate_tree_codes(int n)
{
    std::vector<TreeCode> codes;
    generate_free_trees(n, [&](const Levels& seq) {
        codes.emplace_back(seq);
        return true;
    });
    std::sort(codes.begin(), codes.end());
    return codes;
}

std::vector<TreeWitness> enumerate_trees(int n)
{
    std::vector<TreeWitness> out;
    for (const auto& code : enumerate_tree_codes(n))
        out.emplace_back(code.to_graph());
    return out;
}

std::uint64_t count_trees(int n)
{
    require_order(n);
    // rooted[k]: rooted unlabeled trees on k vertices.
    std::vector<std::uint64_t> rooted(n + 1, 0);
    rooted[1] = 1;
    std::vector<std::uint64_t> divisor_sum(n + 1, 0);
    for (int m = 1; m < n; ++m) {
        divisor_sum[m] = 0;
        for (int d = 1; d <= m; ++d)
            if (m % d == 0)
                divisor_sum[m] += static_cast<std::uint64_t>(d) * rooted[d];
        std::uint64_t total = 0;
        for (int k = 1; k <= m; ++k)
            total += divisor_sum[k] * rooted[m - k + 1];
        rooted[m + 1] = total / static_cast<std::uint64_t>(m);
    }
    std::uint64_t pairs = 0;
    for (int k = 1; k < n; ++k)
        pairs += rooted[k] * rooted[n - k];
    if (n % 2 == 0)
        pairs -= rooted[n / 2];
    return rooted[n] - pairs / 2;
}

Graph tree_from_pruefer(const std::vector<int>& sequence, int n)
{
    if (n < 2 || static_cast<int>(sequence.size()) != n - 2)
        throw Error("Pruefer sequence length must be n-2 for n >= 2");
    std::vector<int> degree(n, 1);
    for (int x : sequence) {
        if (x < 0 || x >= n)
            throw Error("Pruefer label " + std::to_string(x) + " out of range");
        ++degree[x];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves.push(v);
    std::vector<Edge> edges;
    for (int x : sequence) {
        int leaf = leaves.top();
        leaves.pop();
        edges.push_back({leaf, x});
        if (--degree[x] == 1)
            leaves.push(x);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.push_back({a, b});
    return Graph::from_edge_list(edges, n);
}

TreeWitness random_tree(int n, std::uint64_t seed)
{
    if (n < 1)
        throw Error("random tree order must be positive");
    if (n == 1)
        return TreeWitness(Graph(1));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> label(0, n - 1);
    std::vector<int> sequence(n - 2);
    for (auto& x : sequence)
        x = label(rng);
    return TreeWitness(tree_from_pruefer(sequence, n));
}

} // namespace treereg
