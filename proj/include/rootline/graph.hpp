#ifndef ROOTLINE_GRAPH_HPP
#define ROOTLINE_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rootline {

/// Undirected graph without loops or multiple edges. Adjacency rows are
/// bit-packed; vertex order is whatever the caller supplied and is preserved
/// by every operation that does not say otherwise.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);
    SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    std::size_t size() const;  // edge count

    bool adjacent(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void set_edge(int u, int v, bool present);

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const;
    std::span<const std::uint64_t> row(int v) const;
    int words_per_row() const { return words_; }

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    void check_vertex(int v) const;
    std::uint64_t* row_ptr(int v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

using VertexPair = std::pair<int, int>;

/// Loopless multigraph. Edge instances are ordered by endpoint pair and, within
/// a pair, by instance number; `edge_instances()` exposes that order.
class MultiGraph {
public:
    MultiGraph() = default;
    explicit MultiGraph(int n) : n_(n) {}

    int order() const { return n_; }
    void add_edge(int u, int v, int multiplicity = 1);
    int multiplicity(int u, int v) const;
    const std::map<VertexPair, int>& multiplicities() const { return mult_; }
    std::size_t edge_count() const;  // counts instances
    std::vector<VertexPair> edge_instances() const;
    int degree(int v) const;  // counts instances

    friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

private:
    int n_ = 0;
    std::map<VertexPair, int> mult_;
};

enum class Family { A, D, E, Cycle, Clique, Star };

/// Standard graphs: A_n path, D_n (path with a fork), E_6..E_8 (branch at the
/// third vertex), cycles, cliques and stars K_{1,n} (centre is vertex 0).
SimpleGraph named_graph(Family family, int n);

struct LineGraph {
    SimpleGraph graph;
    std::vector<VertexPair> edge_labels;  // root endpoints of each vertex
};

/// One vertex per edge instance; two vertices are adjacent iff their edges
/// share exactly one endpoint. Parallel edges are therefore non-adjacent.
LineGraph line_graph(const MultiGraph& root);
LineGraph line_graph(const SimpleGraph& root);

SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const int> vertices);
/// Vertex v of g becomes vertex perm[v] of the result.
SimpleGraph permute(const SimpleGraph& g, std::span<const int> perm);
SimpleGraph complement(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
bool is_tree(const SimpleGraph& g);
std::vector<std::vector<int>> connected_components(const SimpleGraph& g);
std::vector<int> degree_sequence(const SimpleGraph& g);  // sorted descending

/// Canonical form: the upper-triangle adjacency bits (column-major, the graph6
/// order) of a canonically relabelled copy. Forms compare as bit strings, with
/// the vertex count as tie-break.
class CanonicalForm {
public:
    CanonicalForm() = default;
    CanonicalForm(int n, std::string bits);

    int order() const { return n_; }
    const std::string& bits() const { return bits_; }
    SimpleGraph graph() const;
    std::string graph6() const;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        if (auto c = a.bits_ <=> b.bits_; c != 0) return c;
        return a.n_ <=> b.n_;
    }

private:
    int n_ = 0;
    std::string bits_;
};

inline constexpr int kExhaustiveCanonicalLimit = 10;

struct Labeling {
    CanonicalForm form;
    std::vector<int> perm;  // vertex v of the input sits at position perm[v]
};

/// Exhaustive lexicographic minimisation for up to 10 vertices, partition
/// refinement with individualisation beyond that.
Labeling canonical_labeling(const SimpleGraph& g);
CanonicalForm canonical(const SimpleGraph& g);

/// An isomorphism g -> h as a vertex map, if one exists.
std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h);
bool is_isomorphic(const SimpleGraph& g, const SimpleGraph& h);

/// Vertices of g inducing a copy of h; entry i is the image of h's vertex i.
std::optional<std::vector<int>> contains_induced(const SimpleGraph& g, const SimpleGraph& h);

inline constexpr int kMaxEnumerationOrder = 7;

/// One canonical form per isomorphism class of connected graphs on n vertices,
/// sorted ascending.
std::vector<CanonicalForm> enumerate_connected_graphs(int n);

}  // namespace rootline

#endif  // ROOTLINE_GRAPH_HPP
