#include "rootline/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

namespace rootline {

namespace {

using Code = std::uint32_t;

// At most 8 vertices, one byte of neighbours per vertex.
struct Tiny {
    int n = 0;
    std::array<std::uint8_t, 8> adj{};

    bool has(int a, int b) const { return (adj[static_cast<std::size_t>(a)] >> b) & 1u; }
    void join(int a, int b) {
        adj[static_cast<std::size_t>(a)] |= static_cast<std::uint8_t>(1u << b);
        adj[static_cast<std::size_t>(b)] |= static_cast<std::uint8_t>(1u << a);
    }
};

int pair_count(int n) { return n * (n - 1) / 2; }

// Upper-triangle bits in column order, first bit most significant, minimised
// over every permutation.
Code min_code(const Tiny& g) {
    std::array<int, 8> p{};
    std::iota(p.begin(), p.begin() + g.n, 0);
    Code best = ~Code{0};
    do {
        Code c = 0;
        for (int j = 1; j < g.n; ++j) {
            for (int i = 0; i < j; ++i) c = (c << 1) | (g.has(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]) ? 1u : 0u);
        }
        best = std::min(best, c);
    } while (std::next_permutation(p.begin(), p.begin() + g.n));
    return best;
}

Tiny decode(int n, Code c) {
    Tiny g;
    g.n = n;
    int t = pair_count(n) - 1;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, --t) {
            if ((c >> t) & 1u) g.join(i, j);
        }
    }
    return g;
}

std::string code_bits(int n, Code c) {
    std::string s;
    for (int t = pair_count(n) - 1; t >= 0; --t) s += ((c >> t) & 1u) ? '1' : '0';
    return s;
}

bool tiny_connected(const Tiny& g) {
    if (g.n == 0) return false;
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < g.n; ++v) {
            if ((frontier >> v) & 1u) next |= g.adj[static_cast<std::size_t>(v)];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1u << g.n) - 1;
}

Tiny from_simple(const SimpleGraph& g) {
    Tiny t;
    t.n = g.order();
    for (int a = 0; a < t.n; ++a) {
        for (int b = a + 1; b < t.n; ++b) {
            if (g.adjacent(a, b)) t.join(a, b);
        }
    }
    return t;
}

struct Instance {
    int a;
    int b;
};

Tiny line_of(const std::vector<Instance>& edges) {
    Tiny t;
    t.n = static_cast<int>(edges.size());
    for (int i = 0; i < t.n; ++i) {
        for (int j = i + 1; j < t.n; ++j) {
            const auto& e = edges[static_cast<std::size_t>(i)];
            const auto& f = edges[static_cast<std::size_t>(j)];
            const int shared = (e.a == f.a || e.a == f.b) + (e.b == f.a || e.b == f.b);
            if (shared == 1) t.join(i, j);
        }
    }
    return t;
}

bool normal_form(int v, const std::vector<std::pair<int, int>>& pairs, const std::vector<int>& mult) {
    std::vector<int> deg(static_cast<std::size_t>(v), 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        deg[static_cast<std::size_t>(pairs[i].first)] += mult[i];
        deg[static_cast<std::size_t>(pairs[i].second)] += mult[i];
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mult[i] > 2) return false;
        if (mult[i] == 2 && deg[static_cast<std::size_t>(pairs[i].first)] != 2 && deg[static_cast<std::size_t>(pairs[i].second)] != 2) return false;
    }
    return true;
}

using RootTable = std::map<Code, MultiGraph>;

// Every line graph on n vertices of a root within the budget, keyed by code.
RootTable build_table(int n, OracleKind kind, const OracleBudget& budget) {
    RootTable table;
    const int max_mult = kind == OracleKind::Ordinary ? 1 : (kind == OracleKind::Generalized ? std::min(2, budget.max_multiplicity) : budget.max_multiplicity);
    for (int v = 2; v <= std::min(budget.max_root_vertices, n + 1); ++v) {
        std::vector<std::pair<int, int>> all;
        for (int j = 1; j < v; ++j) {
            for (int i = 0; i < j; ++i) all.emplace_back(i, j);
        }
        const int total = static_cast<int>(all.size());
        for (int e = v - 1; e <= std::min(n, total); ++e) {
            std::vector<int> pick(static_cast<std::size_t>(e));
            std::iota(pick.begin(), pick.end(), 0);
            while (true) {
                Tiny support;
                support.n = v;
                std::vector<std::pair<int, int>> pairs;
                for (int p : pick) {
                    pairs.push_back(all[static_cast<std::size_t>(p)]);
                    support.join(pairs.back().first, pairs.back().second);
                }
                if (tiny_connected(support)) {
                    // Compositions of n into e parts of size 1..max_mult.
                    std::vector<int> mult(static_cast<std::size_t>(e), 1);
                    const int extra = n - e;
                    std::function<void(int, int)> distribute = [&](int idx, int left) {
                        if (idx == e - 1) {
                            if (left + 1 > max_mult) return;
                            mult[static_cast<std::size_t>(idx)] = left + 1;
                            if (kind == OracleKind::Generalized && !normal_form(v, pairs, mult)) return;
                            std::vector<Instance> inst;
                            for (std::size_t i = 0; i < pairs.size(); ++i) {
                                for (int k = 0; k < mult[i]; ++k) inst.push_back({pairs[i].first, pairs[i].second});
                            }
                            const Code c = min_code(line_of(inst));
                            if (!table.count(c)) {
                                MultiGraph m(v);
                                for (std::size_t i = 0; i < pairs.size(); ++i) m.add_edge(pairs[i].first, pairs[i].second, mult[i]);
                                table.emplace(c, m);
                            }
                            return;
                        }
                        for (int x = 0; x <= std::min(left, max_mult - 1); ++x) {
                            mult[static_cast<std::size_t>(idx)] = x + 1;
                            distribute(idx + 1, left - x);
                        }
                    };
                    distribute(0, extra);
                }
                int j = e - 1;
                while (j >= 0 && pick[static_cast<std::size_t>(j)] == total - e + j) --j;
                if (j < 0) break;
                ++pick[static_cast<std::size_t>(j)];
                for (int i = j + 1; i < e; ++i) pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
            }
        }
    }
    return table;
}

void check_budget(int n, const OracleBudget& b) {
    if (b.max_root_vertices <= 0 || b.max_edge_instances <= 0 || b.max_multiplicity <= 0) {
        throw std::invalid_argument("oracle budget entries must be positive");
    }
    if (n > kOracleMaxOrder) throw BudgetExceeded("oracle handles at most 7 vertices");
    if (n > b.max_edge_instances || n + 1 > b.max_root_vertices || std::max(1, n - 1) > b.max_multiplicity) {
        throw BudgetExceeded("oracle budget too small for " + std::to_string(n) + " vertices");
    }
}

const RootTable& table_for(int n, OracleKind kind, const OracleBudget& budget) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int, int, int>, RootTable> cache;
    const auto key = std::make_tuple(n, static_cast<int>(kind), budget.max_root_vertices, budget.max_edge_instances, budget.max_multiplicity);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_table(n, kind, budget)).first;
    return it->second;
}

std::vector<Code> connected_codes(int n) {
    if (n < 1 || n > 6) throw BudgetExceeded("connected-graph enumeration covers 1..6 vertices");
    std::set<Code> codes;
    const int pc = pair_count(n);
    for (Code mask = 0; mask < (Code{1} << pc); ++mask) {
        const Tiny g = decode(n, mask);
        if (tiny_connected(g)) codes.insert(min_code(g));
    }
    return {codes.begin(), codes.end()};
}

}  // namespace

std::optional<MultiGraph> oracle_line_graph_root(const SimpleGraph& g, OracleKind kind, OracleBudget budget) {
    const int n = g.order();
    check_budget(n, budget);
    if (n == 0) return std::nullopt;
    const auto& table = table_for(n, kind, budget);
    const auto it = table.find(min_code(from_simple(g)));
    if (it == table.end()) return std::nullopt;
    return it->second;
}

std::set<CanonicalForm> oracle_minimal_forbidden(int n_max, OracleKind kind, OracleBudget budget) {
    if (n_max > 6) throw BudgetExceeded("minimal forbidden search covers at most 6 vertices");
    std::set<CanonicalForm> out;
    for (int n = 1; n <= n_max; ++n) check_budget(n, budget);
    for (int n = 1; n <= n_max; ++n) {
        for (Code c : connected_codes(n)) {
            if (table_for(n, kind, budget).count(c)) continue;
            const Tiny g = decode(n, c);
            bool minimal = true;
            for (std::uint32_t sub = 1; sub + 1 < (1u << n) && minimal; ++sub) {
                std::vector<int> keep;
                for (int v = 0; v < n; ++v) {
                    if ((sub >> v) & 1u) keep.push_back(v);
                }
                Tiny h;
                h.n = static_cast<int>(keep.size());
                for (int i = 0; i < h.n; ++i) {
                    for (int j = i + 1; j < h.n; ++j) {
                        if (g.has(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)])) h.join(i, j);
                    }
                }
                if (tiny_connected(h) && !table_for(h.n, kind, budget).count(min_code(h))) minimal = false;
            }
            if (minimal) out.insert(CanonicalForm(n, code_bits(n, c)));
        }
    }
    return out;
}

int oracle_connected_count(int n) { return static_cast<int>(connected_codes(n).size()); }

}  // namespace rootline
