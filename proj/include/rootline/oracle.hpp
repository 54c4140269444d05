#ifndef ROOTLINE_ORACLE_HPP
#define ROOTLINE_ORACLE_HPP

#include <optional>
#include <set>
#include <stdexcept>

#include "rootline/graph.hpp"

namespace rootline {

/// Brute-force reference decisions straight from the definitions. Nothing here
/// calls the recognition, canonical-form or enumeration code of the library;
/// graphs are compared by minimising over all vertex permutations.

struct OracleBudget {
    int max_root_vertices = 7;
    int max_edge_instances = 6;
    int max_multiplicity = 6;
};

enum class OracleKind { Multigraph, Ordinary, Generalized };

class BudgetExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

inline constexpr int kOracleMaxOrder = 7;

/// A root whose line graph is isomorphic to g, searched over every loopless
/// multigraph within the budget (Ordinary: multiplicity one; Generalized:
/// multiplicity at most two and a doubled pair has an endpoint on no other
/// edge). Throws BudgetExceeded when the budget cannot cover |V(g)|.
std::optional<MultiGraph> oracle_line_graph_root(const SimpleGraph& g, OracleKind kind = OracleKind::Multigraph,
                                                 OracleBudget budget = {});

inline std::optional<MultiGraph> oracle_is_multigraph_line_graph(const SimpleGraph& g, OracleBudget budget = {}) {
    return oracle_line_graph_root(g, OracleKind::Multigraph, budget);
}

/// Connected graphs on at most n_max vertices outside the class whose proper
/// connected induced subgraphs all lie inside it.
std::set<CanonicalForm> oracle_minimal_forbidden(int n_max, OracleKind kind = OracleKind::Multigraph, OracleBudget budget = {});

/// Number of isomorphism classes of connected graphs on n vertices.
int oracle_connected_count(int n);

}  // namespace rootline

#endif  // ROOTLINE_ORACLE_HPP
