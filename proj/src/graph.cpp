#include "rootline/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace rootline {

SimpleGraph::SimpleGraph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    bits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0);
}

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges) : SimpleGraph(n) {
    for (const auto& [u, v] : edges) add_edge(u, v);
}

void SimpleGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
    }
}

std::size_t SimpleGraph::size() const {
    std::size_t total = 0;
    for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total / 2;
}

bool SimpleGraph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v / 64)] >> (v % 64)) & 1u;
}

void SimpleGraph::set_edge(int u, int v, bool present) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    const std::uint64_t bu = std::uint64_t{1} << (u % 64);
    const std::uint64_t bv = std::uint64_t{1} << (v % 64);
    auto& wu = row_ptr(u)[v / 64];
    auto& wv = row_ptr(v)[u / 64];
    if (present) {
        wu |= bv;
        wv |= bu;
    } else {
        wu &= ~bv;
        wv &= ~bu;
    }
}

void SimpleGraph::add_edge(int u, int v) { set_edge(u, v, true); }
void SimpleGraph::remove_edge(int u, int v) { set_edge(u, v, false); }

int SimpleGraph::degree(int v) const {
    int d = 0;
    for (auto w : row(v)) d += std::popcount(w);
    return d;
}

std::vector<int> SimpleGraph::neighbors(int v) const {
    std::vector<int> out;
    const auto r = row(v);
    for (int k = 0; k < words_; ++k) {
        std::uint64_t w = r[static_cast<std::size_t>(k)];
        while (w != 0) {
            out.push_back(k * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        for (int v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

std::span<const std::uint64_t> SimpleGraph::row(int v) const {
    check_vertex(v);
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
}

void MultiGraph::add_edge(int u, int v, int multiplicity) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("multigraph vertex out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (multiplicity < 1) throw std::invalid_argument("edge multiplicity must be positive");
    mult_[{std::min(u, v), std::max(u, v)}] += multiplicity;
}

int MultiGraph::multiplicity(int u, int v) const {
    const auto it = mult_.find({std::min(u, v), std::max(u, v)});
    return it == mult_.end() ? 0 : it->second;
}

std::size_t MultiGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& [pair, k] : mult_) total += static_cast<std::size_t>(k);
    return total;
}

std::vector<VertexPair> MultiGraph::edge_instances() const {
    std::vector<VertexPair> out;
    for (const auto& [pair, k] : mult_) out.insert(out.end(), static_cast<std::size_t>(k), pair);
    return out;
}

int MultiGraph::degree(int v) const {
    int d = 0;
    for (const auto& [pair, k] : mult_) {
        if (pair.first == v || pair.second == v) d += k;
    }
    return d;
}

SimpleGraph named_graph(Family family, int n) {
    auto path = [](int len, SimpleGraph& g) {
        for (int i = 0; i + 1 < len; ++i) g.add_edge(i, i + 1);
    };
    switch (family) {
        case Family::A: {
            if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
            SimpleGraph g(n);
            path(n, g);
            return g;
        }
        case Family::D: {
            if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
            SimpleGraph g(n);
            path(n - 1, g);
            g.add_edge(1, n - 1);
            return g;
        }
        case Family::E: {
            if (n < 6 || n > 8) throw std::invalid_argument("E_n needs n in {6, 7, 8}");
            SimpleGraph g(n);
            path(n - 1, g);
            g.add_edge(2, n - 1);
            return g;
        }
        case Family::Cycle: {
            if (n < 3) throw std::invalid_argument("cycles need at least 3 vertices");
            SimpleGraph g(n);
            path(n, g);
            g.add_edge(n - 1, 0);
            return g;
        }
        case Family::Clique: {
            if (n < 1) throw std::invalid_argument("K_n needs n >= 1");
            SimpleGraph g(n);
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
            }
            return g;
        }
        case Family::Star: {
            if (n < 1) throw std::invalid_argument("K_{1,n} needs n >= 1");
            SimpleGraph g(n + 1);
            for (int i = 1; i <= n; ++i) g.add_edge(0, i);
            return g;
        }
    }
    throw std::invalid_argument("unknown graph family");
}

LineGraph line_graph(const MultiGraph& root) {
    LineGraph out;
    out.edge_labels = root.edge_instances();
    const int m = static_cast<int>(out.edge_labels.size());
    out.graph = SimpleGraph(m);
    for (int i = 0; i < m; ++i) {
        const auto [a, b] = out.edge_labels[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j) {
            const auto [c, d] = out.edge_labels[static_cast<std::size_t>(j)];
            const int shared = (a == c || a == d) + (b == c || b == d);
            if (shared == 1) out.graph.add_edge(i, j);
        }
    }
    return out;
}

LineGraph line_graph(const SimpleGraph& root) {
    MultiGraph m(root.order());
    for (const auto& [u, v] : root.edges()) m.add_edge(u, v);
    return line_graph(m);
}

SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const int> vertices) {
    const int k = static_cast<int>(vertices.size());
    SimpleGraph h(k);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (g.adjacent(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)])) h.add_edge(i, j);
        }
    }
    return h;
}

SimpleGraph permute(const SimpleGraph& g, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("permutation has wrong length");
    SimpleGraph h(g.order());
    for (const auto& [u, v] : g.edges()) h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return h;
}

SimpleGraph complement(const SimpleGraph& g) {
    SimpleGraph h(g.order());
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) h.add_edge(u, v);
        }
    }
    return h;
}

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[static_cast<std::size_t>(s)] = id;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            out.back().push_back(v);
            for (int w : g.neighbors(v)) {
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = id;
                    q.push(w);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool is_connected(const SimpleGraph& g) { return g.order() > 0 && connected_components(g).size() == 1; }

bool is_tree(const SimpleGraph& g) {
    return is_connected(g) && g.size() == static_cast<std::size_t>(g.order() - 1);
}

std::vector<int> degree_sequence(const SimpleGraph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
    std::sort(d.rbegin(), d.rend());
    return d;
}

// ---------------------------------------------------------------------------
// Canonical forms

CanonicalForm::CanonicalForm(int n, std::string bits) : n_(n), bits_(std::move(bits)) {
    if (bits_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2) {
        throw std::invalid_argument("canonical bit string has the wrong length");
    }
}

SimpleGraph CanonicalForm::graph() const {
    SimpleGraph g(n_);
    std::size_t k = 0;
    for (int j = 1; j < n_; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (bits_[k] == '1') g.add_edge(i, j);
        }
    }
    return g;
}

namespace {

std::string code_of(const SimpleGraph& g, const std::vector<int>& order) {
    // order[pos] = vertex at position pos
    const int n = g.order();
    std::string bits;
    bits.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2);
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            bits.push_back(g.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]) ? '1' : '0');
        }
    }
    return bits;
}

std::vector<int> invert(const std::vector<int>& order) {
    std::vector<int> perm(order.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) perm[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
    return perm;
}

// Branch and bound over position assignments. Column j of the code only
// depends on the vertices placed at positions 0..j, so at each depth only the
// vertices giving the smallest column can lead to the minimum, and a prefix
// already larger than the best code found so far is abandoned.
class ExhaustiveMinimizer {
public:
    explicit ExhaustiveMinimizer(const SimpleGraph& g)
        : n_(g.order()), order_(static_cast<std::size_t>(n_)), used_(static_cast<std::size_t>(n_), false),
          cols_(static_cast<std::size_t>(n_), 0) {
        for (int v = 0; v < n_; ++v) {
            std::uint32_t m = 0;
            for (int w = 0; w < n_; ++w) {
                if (g.adjacent(v, w)) m |= 1u << w;
            }
            adj_.push_back(m);
        }
    }

    std::vector<int> run() {
        if (n_ > 0) search(0);
        return best_order_;
    }

private:
    // Bit (depth - 1 - i) holds adjacency to the vertex at position i, so
    // numeric order equals lexicographic order of the column.
    std::uint32_t column(int depth, int v) const {
        std::uint32_t c = 0;
        for (int i = 0; i < depth; ++i) {
            if ((adj_[static_cast<std::size_t>(v)] >> order_[static_cast<std::size_t>(i)]) & 1u) c |= 1u << (depth - 1 - i);
        }
        return c;
    }

    // -1, 0, 1 as cols_[0..len) compares to the best code's prefix.
    int compare_prefix(int len) const {
        if (best_order_.empty()) return -1;
        for (int d = 0; d < len; ++d) {
            const auto a = cols_[static_cast<std::size_t>(d)];
            const auto b = best_cols_[static_cast<std::size_t>(d)];
            if (a != b) return a < b ? -1 : 1;
        }
        return 0;
    }

    void search(int depth) {
        if (depth == n_) {
            if (compare_prefix(n_) < 0) {
                best_order_ = order_;
                best_cols_ = cols_;
            }
            return;
        }
        std::uint32_t min_col = UINT32_MAX;
        for (int v = 0; v < n_; ++v) {
            if (!used_[static_cast<std::size_t>(v)]) min_col = std::min(min_col, column(depth, v));
        }
        cols_[static_cast<std::size_t>(depth)] = min_col;
        for (int v = 0; v < n_; ++v) {
            if (used_[static_cast<std::size_t>(v)] || column(depth, v) != min_col) continue;
            if (compare_prefix(depth + 1) > 0) return;
            used_[static_cast<std::size_t>(v)] = true;
            order_[static_cast<std::size_t>(depth)] = v;
            search(depth + 1);
            used_[static_cast<std::size_t>(v)] = false;
            cols_[static_cast<std::size_t>(depth)] = min_col;
        }
    }

    int n_;
    std::vector<std::uint32_t> adj_;
    std::vector<int> order_;
    std::vector<bool> used_;
    std::vector<std::uint32_t> cols_;
    std::vector<std::uint32_t> best_cols_;
    std::vector<int> best_order_;
};

using Partition = std::vector<std::vector<int>>;

// Refine an ordered partition to the coarsest equitable one. Splitting only
// looks at cell order and neighbour counts, so it commutes with relabelling.
void refine(const SimpleGraph& g, Partition& cells) {
    const int n = g.order();
    std::vector<int> cell_of(static_cast<std::size_t>(n));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            for (int v : cells[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
        }
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            const std::vector<int> splitter = cells[s];
            Partition next;
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<int, int>> keyed;
                for (int v : cell) {
                    int cnt = 0;
                    for (int w : splitter) cnt += g.adjacent(v, w);
                    keyed.emplace_back(cnt, v);
                }
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                std::vector<int> current{keyed.front().second};
                for (std::size_t k = 1; k < keyed.size(); ++k) {
                    if (keyed[k].first != keyed[k - 1].first) {
                        next.push_back(current);
                        current.clear();
                        changed = true;
                    }
                    current.push_back(keyed[k].second);
                }
                next.push_back(current);
            }
            if (changed) cells = std::move(next);
        }
    }
}

class RefinedMinimizer {
public:
    explicit RefinedMinimizer(const SimpleGraph& g) : g_(g) {}

    std::vector<int> run() {
        Partition cells;
        std::vector<int> all(static_cast<std::size_t>(g_.order()));
        std::iota(all.begin(), all.end(), 0);
        if (!all.empty()) cells.push_back(all);
        refine(g_, cells);
        search(cells);
        return best_order_;
    }

private:
    void search(const Partition& cells) {
        const auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
        if (target == cells.end()) {
            std::vector<int> order;
            for (const auto& c : cells) order.push_back(c.front());
            std::string code = code_of(g_, order);
            if (best_order_.empty() || code < best_code_) {
                best_code_ = std::move(code);
                best_order_ = std::move(order);
            }
            return;
        }
        const auto idx = static_cast<std::size_t>(target - cells.begin());
        for (int v : *target) {
            Partition next;
            next.insert(next.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(idx));
            next.push_back({v});
            std::vector<int> rest;
            for (int w : *target) {
                if (w != v) rest.push_back(w);
            }
            next.push_back(rest);
            next.insert(next.end(), cells.begin() + static_cast<std::ptrdiff_t>(idx) + 1, cells.end());
            refine(g_, next);
            search(next);
        }
    }

    const SimpleGraph& g_;
    std::string best_code_;
    std::vector<int> best_order_;
};

}  // namespace

Labeling canonical_labeling(const SimpleGraph& g) {
    std::vector<int> order;
    if (g.order() <= kExhaustiveCanonicalLimit) {
        order = ExhaustiveMinimizer(g).run();
    } else {
        order = RefinedMinimizer(g).run();
    }
    return Labeling{CanonicalForm(g.order(), code_of(g, order)), invert(order)};
}

CanonicalForm canonical(const SimpleGraph& g) { return canonical_labeling(g).form; }

// ---------------------------------------------------------------------------
// Isomorphism and induced-subgraph search

namespace {

// Backtracking matcher from a pattern graph into a target graph. With
// `induced` the map must preserve non-adjacency as well; with `bijective` it
// must also be onto.
class Matcher {
public:
    Matcher(const SimpleGraph& pattern, const SimpleGraph& target, bool need_equal_degree)
        : p_(pattern), t_(target), equal_degree_(need_equal_degree),
          map_(static_cast<std::size_t>(pattern.order()), -1),
          used_(static_cast<std::size_t>(target.order()), false) {
        // Match high-degree pattern vertices first, growing along edges.
        const int n = p_.order();
        std::vector<bool> placed(static_cast<std::size_t>(n), false);
        while (static_cast<int>(order_.size()) < n) {
            int best = -1;
            int best_links = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[static_cast<std::size_t>(v)]) continue;
                int links = 0;
                for (int u : order_) links += p_.adjacent(u, v);
                if (links > best_links || (links == best_links && p_.degree(v) > p_.degree(best))) {
                    best = v;
                    best_links = links;
                }
            }
            placed[static_cast<std::size_t>(best)] = true;
            order_.push_back(best);
        }
        for (int v = 0; v < t_.order(); ++v) tdeg_.push_back(t_.degree(v));
        for (int v = 0; v < p_.order(); ++v) pdeg_.push_back(p_.degree(v));
    }

    std::optional<std::vector<int>> run() {
        if (extend(0)) return map_;
        return std::nullopt;
    }

private:
    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        const int pv = order_[depth];
        for (int tv = 0; tv < t_.order(); ++tv) {
            if (used_[static_cast<std::size_t>(tv)]) continue;
            const int pd = pdeg_[static_cast<std::size_t>(pv)];
            const int td = tdeg_[static_cast<std::size_t>(tv)];
            if (equal_degree_ ? pd != td : td < pd) continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                const int pu = order_[k];
                ok = p_.adjacent(pu, pv) == t_.adjacent(map_[static_cast<std::size_t>(pu)], tv);
            }
            if (!ok) continue;
            map_[static_cast<std::size_t>(pv)] = tv;
            used_[static_cast<std::size_t>(tv)] = true;
            if (extend(depth + 1)) return true;
            used_[static_cast<std::size_t>(tv)] = false;
        }
        map_[static_cast<std::size_t>(pv)] = -1;
        return false;
    }

    const SimpleGraph& p_;
    const SimpleGraph& t_;
    bool equal_degree_;
    std::vector<int> order_;
    std::vector<int> map_;
    std::vector<bool> used_;
    std::vector<int> pdeg_;
    std::vector<int> tdeg_;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
    if (degree_sequence(g) != degree_sequence(h)) return std::nullopt;
    return Matcher(g, h, true).run();
}

bool is_isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    if (g.order() <= kExhaustiveCanonicalLimit) return canonical(g) == canonical(h);
    return find_isomorphism(g, h).has_value();
}

std::optional<std::vector<int>> contains_induced(const SimpleGraph& g, const SimpleGraph& h) {
    if (h.order() > g.order()) return std::nullopt;
    return Matcher(h, g, false).run();
}

std::vector<CanonicalForm> enumerate_connected_graphs(int n) {
    if (n < 1 || n > kMaxEnumerationOrder) {
        throw std::invalid_argument("enumerate_connected_graphs supports 1 <= n <= " +
                                    std::to_string(kMaxEnumerationOrder));
    }
    // Every connected graph has a vertex whose removal leaves it connected, so
    // extending each connected (n-1)-vertex graph by one vertex reaches all
    // classes.
    std::set<CanonicalForm> current{canonical(SimpleGraph(1))};
    for (int k = 2; k <= n; ++k) {
        std::set<CanonicalForm> next;
        for (const auto& form : current) {
            const SimpleGraph base = form.graph();
            for (std::uint32_t mask = 1; mask < (1u << (k - 1)); ++mask) {
                SimpleGraph g(k);
                for (const auto& [u, v] : base.edges()) g.add_edge(u, v);
                for (int i = 0; i < k - 1; ++i) {
                    if ((mask >> i) & 1u) g.add_edge(i, k - 1);
                }
                next.insert(canonical(g));
            }
        }
        current = std::move(next);
    }
    return {current.begin(), current.end()};
}

}  // namespace rootline
