#ifndef ROOTLINE_MUTATION_HPP
#define ROOTLINE_MUTATION_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rootline/embedding.hpp"
#include "rootline/graph.hpp"

namespace rootline {

/// Sequence of elementary transformations (v, w): the vector at index w is
/// replaced by w + f(v, w) v.
struct TransformationLog {
    std::vector<std::pair<int, int>> steps;

    std::string to_json() const;  // [[v, w], ...]
    static TransformationLog from_json(const std::string& text);
    friend bool operator==(const TransformationLog&, const TransformationLog&) = default;
};

EmbeddedGraph elementary_transform(const EmbeddedGraph& eg, int v, int w);
/// Graph-level shadow of elementary_transform: when v ~ w, the neighbourhood
/// of w outside {v, w} is XORed with that of v. Otherwise g is returned as is.
SimpleGraph graph_mutation(const SimpleGraph& g, int v, int w);

EmbeddedGraph replay(const EmbeddedGraph& eg, const TransformationLog& log);
SimpleGraph replay(const SimpleGraph& g, const TransformationLog& log);

inline constexpr std::size_t kDefaultMaxClasses = 10000;

/// Bound from ROOTLINE_MAX_CLASSES when set to a positive integer, else the default.
std::size_t max_classes_from_env();

class ClassBoundExceeded : public std::runtime_error {
public:
    ClassBoundExceeded(std::size_t bound, std::vector<CanonicalForm> partial);
    std::size_t bound() const { return bound_; }
    const std::vector<CanonicalForm>& partial() const { return partial_; }

private:
    std::size_t bound_;
    std::vector<CanonicalForm> partial_;
};

/// All isomorphism classes reachable from g by graph mutations, sorted.
/// Throws ClassBoundExceeded (carrying what was found) once more than
/// max_classes classes have been seen.
std::vector<CanonicalForm> equivalence_class(const SimpleGraph& g, std::size_t max_classes);
std::vector<CanonicalForm> equivalence_class(const SimpleGraph& g);

struct TreeReduction {
    SimpleGraph tree;  // same vertex labels as the input
    TransformationLog log;
};

/// Mutates a connected graph into an equivalent tree by repeatedly shortening
/// a minimal cycle through a leaf of a growing induced subtree. Only steps that
/// change the graph are logged.
TreeReduction reduce_to_tree(const SimpleGraph& g);

/// A tree avoids an induced E6 iff removing its leaves leaves a path (or
/// nothing) and every leaf hangs off an end of that path. Both this and a
/// direct induced-subgraph search are run and must agree.
bool tree_is_An_reducible(const SimpleGraph& t);

}  // namespace rootline

#endif  // ROOTLINE_MUTATION_HPP
