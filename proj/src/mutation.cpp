#include "rootline/mutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"

namespace rootline {

std::string TransformationLog::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [v, w] : steps) j.push_back({v, w});
    return j.dump();
}

TransformationLog TransformationLog::from_json(const std::string& text) {
    TransformationLog log;
    const auto j = nlohmann::json::parse(text);
    if (!j.is_array()) throw std::invalid_argument("transformation log must be a JSON array");
    for (const auto& step : j) {
        if (!step.is_array() || step.size() != 2 || !step[0].is_number_integer() || !step[1].is_number_integer()) {
            throw std::invalid_argument("each log step must be a pair of integers");
        }
        log.steps.emplace_back(step[0].get<int>(), step[1].get<int>());
    }
    return log;
}

EmbeddedGraph elementary_transform(const EmbeddedGraph& eg, int v, int w) {
    if (v == w) throw std::invalid_argument("elementary transformation needs two distinct vertices");
    if (v < 0 || w < 0 || v >= eg.order() || w >= eg.order()) throw std::out_of_range("vertex index out of range");
    if (!eg.adjacent(v, w)) return eg;
    EmbeddedGraph out = eg;
    out.set_vector(w, eg.vectors()[static_cast<std::size_t>(w)] + eg.vectors()[static_cast<std::size_t>(v)]);
    return out;
}

SimpleGraph graph_mutation(const SimpleGraph& g, int v, int w) {
    if (v == w) throw std::invalid_argument("mutation needs two distinct vertices");
    if (!g.adjacent(v, w)) return g;
    SimpleGraph h = g;
    for (int x : g.neighbors(v)) {
        if (x != w) h.set_edge(w, x, !g.adjacent(w, x));
    }
    return h;
}

EmbeddedGraph replay(const EmbeddedGraph& eg, const TransformationLog& log) {
    EmbeddedGraph cur = eg;
    for (const auto& [v, w] : log.steps) cur = elementary_transform(cur, v, w);
    return cur;
}

SimpleGraph replay(const SimpleGraph& g, const TransformationLog& log) {
    SimpleGraph cur = g;
    for (const auto& [v, w] : log.steps) cur = graph_mutation(cur, v, w);
    return cur;
}

std::size_t max_classes_from_env() {
    if (const char* env = std::getenv("ROOTLINE_MAX_CLASSES")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
    }
    return kDefaultMaxClasses;
}

ClassBoundExceeded::ClassBoundExceeded(std::size_t bound, std::vector<CanonicalForm> partial)
    : std::runtime_error("equivalence class exceeds the bound of " + std::to_string(bound) + " classes"),
      bound_(bound),
      partial_(std::move(partial)) {}

std::vector<CanonicalForm> equivalence_class(const SimpleGraph& g, std::size_t max_classes) {
    if (!is_connected(g)) throw std::invalid_argument("equivalence_class expects a connected graph");
    std::set<CanonicalForm> seen{canonical(g)};
    std::queue<CanonicalForm> frontier;
    frontier.push(*seen.begin());
    if (seen.size() > max_classes) throw ClassBoundExceeded(max_classes, {seen.begin(), seen.end()});
    while (!frontier.empty()) {
        const SimpleGraph cur = frontier.front().graph();
        frontier.pop();
        for (const auto& [a, b] : cur.edges()) {
            for (const auto& [v, w] : {std::pair{a, b}, std::pair{b, a}}) {
                auto form = canonical(graph_mutation(cur, v, w));
                if (seen.insert(form).second) {
                    if (seen.size() > max_classes) throw ClassBoundExceeded(max_classes, {seen.begin(), seen.end()});
                    frontier.push(std::move(form));
                }
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<CanonicalForm> equivalence_class(const SimpleGraph& g) {
    return equivalence_class(g, max_classes_from_env());
}

namespace {

// Shortest cycle through v using only vertices where allowed[] is set, as the
// list v, v2, ..., vn. Among shortest cycles the neighbour pair (a, b) of v is
// lexicographically least and each a-b path follows lowest-index BFS parents.
std::vector<int> shortest_cycle_through(const SimpleGraph& g, int v, const std::vector<bool>& allowed) {
    std::vector<int> nbrs;
    for (int x : g.neighbors(v)) {
        if (allowed[static_cast<std::size_t>(x)]) nbrs.push_back(x);
    }
    std::vector<int> best;
    const int n = g.order();
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        const int a = nbrs[i];
        std::vector<int> parent(static_cast<std::size_t>(n), -2);
        parent[static_cast<std::size_t>(a)] = -1;
        std::queue<int> q;
        q.push(a);
        while (!q.empty()) {
            const int x = q.front();
            q.pop();
            for (int y : g.neighbors(x)) {
                if (y == v || !allowed[static_cast<std::size_t>(y)] || parent[static_cast<std::size_t>(y)] != -2) continue;
                parent[static_cast<std::size_t>(y)] = x;
                q.push(y);
            }
        }
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            const int b = nbrs[j];
            if (parent[static_cast<std::size_t>(b)] == -2) continue;
            std::vector<int> path;
            for (int x = b; x != -1; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
            // path runs b .. a; the cycle is v, a, ..., b.
            if (best.empty() || path.size() + 1 < best.size()) {
                best = {v};
                best.insert(best.end(), path.rbegin(), path.rend());
            }
        }
    }
    return best;
}

}  // namespace

TreeReduction reduce_to_tree(const SimpleGraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("reduce_to_tree expects a connected graph");
    const int n = g.order();
    TreeReduction out{g, {}};
    SimpleGraph& h = out.tree;
    std::vector<bool> in_tree(static_cast<std::size_t>(n), false);
    in_tree[0] = true;
    int tree_size = 1;

    auto apply = [&](int a, int x) {
        if (h.adjacent(a, x)) {
            h = graph_mutation(h, a, x);
            out.log.steps.emplace_back(a, x);
        }
    };

    while (tree_size < n) {
        // Every component of h - T hangs off exactly one vertex of T.
        int v = -1;
        for (int t = 0; t < n && v < 0; ++t) {
            if (!in_tree[static_cast<std::size_t>(t)]) continue;
            for (int x : h.neighbors(t)) {
                if (!in_tree[static_cast<std::size_t>(x)]) {
                    v = t;
                    break;
                }
            }
        }
        if (v < 0) throw std::logic_error("reduce_to_tree: graph became disconnected");

        std::vector<bool> outside(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) outside[static_cast<std::size_t>(x)] = !in_tree[static_cast<std::size_t>(x)];
        std::vector<bool> allowed = outside;
        allowed[static_cast<std::size_t>(v)] = true;

        const std::vector<int> cycle = shortest_cycle_through(h, v, allowed);
        if (cycle.empty()) {
            for (int x : h.neighbors(v)) {
                if (outside[static_cast<std::size_t>(x)]) {
                    in_tree[static_cast<std::size_t>(x)] = true;
                    ++tree_size;
                    break;
                }
            }
            continue;
        }

        const int before = h.degree(v);
        const int len = static_cast<int>(cycle.size());
        std::vector<bool> on_cycle(static_cast<std::size_t>(n), false);
        for (int c : cycle) on_cycle[static_cast<std::size_t>(c)] = true;
        for (int i = 1; i + 1 < len; ++i) apply(cycle[static_cast<std::size_t>(i)], v);
        for (int x = 0; x < n; ++x) {
            if (!outside[static_cast<std::size_t>(x)] || on_cycle[static_cast<std::size_t>(x)]) continue;
            for (int i = 1; i + 1 < len; ++i) apply(cycle[static_cast<std::size_t>(i)], x);
        }
        const int after = h.degree(v);
        if (after != before - 1) {
            std::ostringstream msg;
            msg << "reduce_to_tree: degree of vertex " << v << " went from " << before << " to " << after
                << " after shortening a cycle of length " << len << "; expected a drop of exactly one";
            throw std::logic_error(msg.str());
        }
    }
    if (!is_tree(h)) throw std::logic_error("reduce_to_tree: result is not a tree");
    return out;
}

bool tree_is_An_reducible(const SimpleGraph& t) {
    if (!is_tree(t)) throw std::invalid_argument("tree_is_An_reducible expects a tree");
    const int n = t.order();
    bool shape_ok = true;
    if (n > 2) {
        std::vector<int> spine;
        for (int v = 0; v < n; ++v) {
            if (t.degree(v) > 1) spine.push_back(v);
        }
        const SimpleGraph s = induced_subgraph(t, spine);
        // The spine of a tree is connected; it is a path iff its degrees are <= 2.
        std::vector<bool> is_end(static_cast<std::size_t>(n), false);
        for (std::size_t k = 0; k < spine.size(); ++k) {
            const int d = s.degree(static_cast<int>(k));
            if (d > 2) shape_ok = false;
            if (d <= 1) is_end[static_cast<std::size_t>(spine[k])] = true;
        }
        for (int v = 0; v < n && shape_ok; ++v) {
            if (t.degree(v) != 1) continue;
            const int parent = t.neighbors(v).front();
            if (!is_end[static_cast<std::size_t>(parent)]) shape_ok = false;
        }
    }
    const bool no_e6 = n < 6 || !contains_induced(t, named_graph(Family::E, 6)).has_value();
    if (shape_ok != no_e6) {
        throw std::logic_error("tree_is_An_reducible: shape analysis and E6 search disagree");
    }
    return shape_ok;
}

}  // namespace rootline
