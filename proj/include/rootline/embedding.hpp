#ifndef ROOTLINE_EMBEDDING_HPP
#define ROOTLINE_EMBEDDING_HPP

#include <vector>

#include "rootline/f2.hpp"
#include "rootline/graph.hpp"

namespace rootline {

/// Anisotropic vectors spanning a quadratic space. Vertex i of the induced
/// graph is vectors()[i]; two vertices are adjacent iff f(v, w) = 1.
class EmbeddedGraph {
public:
    EmbeddedGraph(QuadraticSpace space, std::vector<F2Vector> vectors);

    const QuadraticSpace& space() const { return space_; }
    const std::vector<F2Vector>& vectors() const { return vectors_; }
    int order() const { return static_cast<int>(vectors_.size()); }
    SimpleGraph graph() const;
    bool adjacent(int i, int j) const;

    /// Replaces vector i, keeping the invariants; used by elementary
    /// transformations.
    void set_vector(int i, const F2Vector& v);

private:
    QuadraticSpace space_;
    std::vector<F2Vector> vectors_;
};

/// Vertex i maps to the basis vector at position ordering[i]. Q and f do not
/// depend on the ordering; it only decides which order-dependent bilinear map
/// is used to derive them.
EmbeddedGraph universal_embedding(const SimpleGraph& g, const std::vector<int>& ordering);
EmbeddedGraph universal_embedding(const SimpleGraph& g);

struct MinimalEmbedding {
    EmbeddedGraph embedded;        // one vector per twin class
    std::vector<int> class_of;     // vertex -> index into embedded.vectors()
    std::vector<int> representatives;  // lowest vertex of each class
};

MinimalEmbedding minimal_embedding(const SimpleGraph& g);

/// Twin classes: maximal sets of pairwise non-adjacent vertices with equal
/// neighbourhoods, each sorted, ordered by their lowest vertex.
std::vector<std::vector<int>> twin_classes(const SimpleGraph& g);

inline constexpr int kMaxClosureDim = 20;

/// Smallest set containing the vertex images that is closed under p, q -> p + q
/// whenever f(p, q) = 1. Sorted by bit pattern.
std::vector<F2Vector> cotriangular_closure(const EmbeddedGraph& eg);

}  // namespace rootline

#endif  // ROOTLINE_EMBEDDING_HPP
