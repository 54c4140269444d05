#ifndef ROOTLINE_RECOGNITION_HPP
#define ROOTLINE_RECOGNITION_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rootline/catalog.hpp"
#include "rootline/graph.hpp"

namespace rootline {

class DisconnectedInput : public std::invalid_argument {
public:
    DisconnectedInput() : std::invalid_argument("input graph must be connected and nonempty") {}
};

/// Entry i of edge_to_vertex is the input vertex playing the role of
/// root.edge_instances()[i].
struct RootCertificate {
    MultiGraph root;
    std::vector<int> edge_to_vertex;
    friend bool operator==(const RootCertificate&, const RootCertificate&) = default;
};

/// The listed input vertices induce the member of `list` at catalog_index.
struct WitnessCertificate {
    ForbiddenList list = ForbiddenList::E6;
    std::vector<int> vertices;  // ascending
    int catalog_index = -1;
    friend bool operator==(const WitnessCertificate&, const WitnessCertificate&) = default;
};

using Certificate = std::variant<RootCertificate, WitnessCertificate>;

std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);

/// Re-checks a certificate against g from scratch.
bool verify_certificate(const SimpleGraph& g, const Certificate& c);

/// Simple root together with the root edge of every input vertex.
struct OrdinaryRoot {
    SimpleGraph root;
    std::vector<VertexPair> edge_of;  // edge_of[v] = (a, b), a < b
};

inline constexpr int kSmallRootLimit = 6;

/// A simple graph whose line graph is g, if any. Up to 6 vertices every
/// Krausz partition is tried and the root with the least canonical form is
/// returned, relabelled canonically. Larger inputs use the partition cut out
/// by odd triangles, which is the only candidate there.
std::optional<OrdinaryRoot> reconstruct_ordinary(const SimpleGraph& g);

/// Non-adjacent twins merged: one vertex per twin class, keeping the lowest.
struct TwinQuotient {
    SimpleGraph graph;
    std::vector<std::vector<int>> classes;  // classes[i] is the class of quotient vertex i
};
TwinQuotient twin_quotient(const SimpleGraph& g);

/// Root when g is the line graph of a multigraph, a 6-vertex E6-class witness
/// otherwise.
Certificate recognize_multigraph_line_graph(const SimpleGraph& g);

struct ListDecision {
    bool member = false;
    std::optional<WitnessCertificate> witness;
    std::optional<RootCertificate> root;
};

/// Decided by the Beineke list; a simple root is attached when positive.
ListDecision is_ordinary_line_graph(const SimpleGraph& g);

/// Decided by the 31-graph list; when positive the attached root has edge
/// multiplicities at most two and every doubled pair has an endpoint on no
/// other edge.
ListDecision is_generalized_line_graph(const SimpleGraph& g);

/// Merges twins, reduces to a tree and tests whether that tree is A_n-equivalent.
bool recognize_via_tree(const SimpleGraph& g);

/// Subsets of more than this many candidates are not scanned exhaustively;
/// a witness is then found by deleting vertices while the graph stays
/// connected and outside the class.
inline constexpr std::uint64_t kMaxExhaustiveSubsets = 20'000'000;

/// Least witness in colex order over vertices sorted by descending degree,
/// smaller members first.
std::optional<WitnessCertificate> find_forbidden_witness(const SimpleGraph& g, ForbiddenList list = ForbiddenList::E6);

/// Root of a generalized line graph in the normal form above, if g is one.
std::optional<RootCertificate> generalized_root(const SimpleGraph& g);

}  // namespace rootline

#endif  // ROOTLINE_RECOGNITION_HPP
