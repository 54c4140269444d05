#ifndef ROOTLINE_CATALOG_HPP
#define ROOTLINE_CATALOG_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rootline/graph.hpp"

namespace rootline {

enum class ForbiddenList { E6, H, G, Beineke, GLG };

std::string to_string(ForbiddenList list);
std::optional<ForbiddenList> forbidden_list_from_string(const std::string& name);

struct Catalog {
    std::vector<CanonicalForm> e6_class;  // sorted; index = position
    std::vector<CanonicalForm> h_list;    // H1, H2, H3
    std::vector<MultiGraph> g_roots;      // roots whose line graphs are G1..G11
    std::vector<CanonicalForm> g_list;
    std::vector<CanonicalForm> beineke;   // H list, then the H-free E6-class members
    std::vector<CanonicalForm> glg;       // G list, then the G-free E6-class members

    const std::vector<CanonicalForm>& list(ForbiddenList which) const;
};

/// Regenerates everything from scratch: the E6 class by mutation search, the
/// H and G lists from hard-coded drawings, and the derived lists. Structural
/// invariants are checked and a std::logic_error is thrown if one fails.
Catalog build_catalog();

/// Built once on first use.
const Catalog& catalog();

/// Position of g's isomorphism class in the E6 class, if present.
std::optional<int> catalog_index(const SimpleGraph& g);

/// Catalog member as graph6 lines, one per member, in index order.
std::string snapshot_text(ForbiddenList which);

/// Constant-time membership for labelled induced subgraphs: every relabelling
/// of every member of a list (members have 4 to 6 vertices) is tabulated by
/// its upper-triangle adjacency mask.
class ForbiddenIndex {
public:
    explicit ForbiddenIndex(const std::vector<CanonicalForm>& members);

    /// Index of the member isomorphic to g[vertices], or -1.
    int lookup(const SimpleGraph& g, std::span<const int> vertices) const;
    int min_order() const { return min_order_; }
    int max_order() const { return max_order_; }

    static const ForbiddenIndex& for_list(ForbiddenList which);

private:
    static constexpr int kMaxOrder = 6;
    std::array<std::vector<std::int16_t>, kMaxOrder + 1> tables_;
    int min_order_ = kMaxOrder + 1;
    int max_order_ = 0;
};

}  // namespace rootline

#endif  // ROOTLINE_CATALOG_HPP
