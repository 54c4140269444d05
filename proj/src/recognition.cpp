#include "rootline/recognition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"
#include "rootline/embedding.hpp"
#include "rootline/mutation.hpp"

namespace rootline {

namespace {

void require_connected(const SimpleGraph& g) {
    if (g.order() == 0 || !is_connected(g)) throw DisconnectedInput();
}

using Cells = std::vector<std::vector<int>>;

// Depth-first enumeration of Krausz partitions: edge-disjoint cliques covering
// every edge, each vertex in at most two of them. The lowest uncovered edge is
// always placed next, so each partition is produced once.
class KrauszSearch {
public:
    using Visit = std::function<bool(const Cells&)>;

    KrauszSearch(const SimpleGraph& g, Visit visit)
        : rest_(g), count_(static_cast<std::size_t>(g.order()), 0), visit_(std::move(visit)) {}

    void run() { step(); }

private:
    bool step() {
        int u = -1;
        for (int a = 0; a < rest_.order(); ++a) {
            if (rest_.degree(a) > 0) {
                u = a;
                break;
            }
        }
        if (u < 0) return visit_(cells_);
        const auto nu = rest_.neighbors(u);
        const int v = nu.front();
        if (count_[static_cast<std::size_t>(u)] == 2 || count_[static_cast<std::size_t>(v)] == 2) return true;

        // A vertex already in one cell must put all its uncovered edges in this one.
        std::vector<char> required(static_cast<std::size_t>(rest_.order()), 0);
        for (int x : {u, v}) {
            if (count_[static_cast<std::size_t>(x)] == 1) {
                for (int w : rest_.neighbors(x)) required[static_cast<std::size_t>(w)] = 1;
            }
        }
        std::vector<int> common;
        for (int w : nu) {
            if (w == v) continue;
            if (rest_.adjacent(v, w) && count_[static_cast<std::size_t>(w)] < 2) {
                common.push_back(w);
            } else if (required[static_cast<std::size_t>(w)]) {
                return true;
            }
        }
        for (int w : rest_.neighbors(v)) {
            if (w != u && required[static_cast<std::size_t>(w)] && !rest_.adjacent(u, w)) return true;
        }
        std::vector<int> clique{u, v};
        return extend(common, 0, clique, required);
    }

    bool extend(const std::vector<int>& common, std::size_t pos, std::vector<int>& clique, const std::vector<char>& required) {
        if (pos == common.size()) return apply(clique);
        const int w = common[pos];
        const bool fits = std::all_of(clique.begin(), clique.end(), [&](int c) { return rest_.adjacent(c, w); });
        if (fits) {
            clique.push_back(w);
            const bool go = extend(common, pos + 1, clique, required);
            clique.pop_back();
            if (!go) return false;
        }
        if (required[static_cast<std::size_t>(w)]) return true;
        return extend(common, pos + 1, clique, required);
    }

    bool apply(const std::vector<int>& clique) {
        for (std::size_t i = 0; i < clique.size(); ++i) {
            for (std::size_t j = i + 1; j < clique.size(); ++j) rest_.remove_edge(clique[i], clique[j]);
            ++count_[static_cast<std::size_t>(clique[i])];
        }
        std::vector<int> cell = clique;
        std::sort(cell.begin(), cell.end());
        cells_.push_back(cell);
        const bool go = step();
        cells_.pop_back();
        for (std::size_t i = 0; i < clique.size(); ++i) {
            for (std::size_t j = i + 1; j < clique.size(); ++j) rest_.add_edge(clique[i], clique[j]);
            --count_[static_cast<std::size_t>(clique[i])];
        }
        return go;
    }

    SimpleGraph rest_;
    std::vector<int> count_;
    Cells cells_;
    Visit visit_;
};

OrdinaryRoot root_from_cells(int n, Cells cells) {
    std::sort(cells.begin(), cells.end());
    std::vector<std::vector<int>> cells_of(static_cast<std::size_t>(n));
    int next = static_cast<int>(cells.size());
    for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
        for (int v : cells[static_cast<std::size_t>(c)]) cells_of[static_cast<std::size_t>(v)].push_back(c);
    }
    for (auto& cs : cells_of) {
        while (cs.size() < 2) cs.push_back(next++);
    }
    OrdinaryRoot r{SimpleGraph(next), {}};
    for (const auto& cs : cells_of) {
        const auto e = std::minmax(cs[0], cs[1]);
        r.root.add_edge(e.first, e.second);
        r.edge_of.emplace_back(e.first, e.second);
    }
    return r;
}

// A triangle is odd when some other vertex sees an odd number of its corners.
bool odd_triangle(const SimpleGraph& g, int u, int v, int w) {
    const auto ru = g.row(u);
    const auto rv = g.row(v);
    const auto rw = g.row(w);
    for (int k = 0; k < g.words_per_row(); ++k) {
        std::uint64_t x = ru[static_cast<std::size_t>(k)] ^ rv[static_cast<std::size_t>(k)] ^ rw[static_cast<std::size_t>(k)];
        for (int c : {u, v, w}) {
            if (c / 64 == k) x &= ~(std::uint64_t{1} << (c % 64));
        }
        if (x) return true;
    }
    return false;
}

// In a connected line graph with more than six vertices a triangle lies in a
// star exactly when it is odd, so the cell through an edge is the edge plus
// its odd apexes. The resulting family is checked to be a Krausz partition.
std::optional<Cells> odd_triangle_cells(const SimpleGraph& g) {
    std::set<std::vector<int>> cells;
    for (const auto& [u, v] : g.edges()) {
        std::vector<int> cell{u, v};
        for (int w : g.neighbors(u)) {
            if (w != v && g.adjacent(v, w) && odd_triangle(g, u, v, w)) cell.push_back(w);
        }
        std::sort(cell.begin(), cell.end());
        cells.insert(cell);
    }
    std::vector<int> count(static_cast<std::size_t>(g.order()), 0);
    std::size_t pairs = 0;
    for (const auto& c : cells) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (++count[static_cast<std::size_t>(c[i])] > 2) return std::nullopt;
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                if (!g.adjacent(c[i], c[j])) return std::nullopt;
            }
        }
        pairs += c.size() * (c.size() - 1) / 2;
    }
    if (pairs != g.size()) return std::nullopt;
    return Cells(cells.begin(), cells.end());
}

// groups[i] lists the input vertices carried by root edge r.edge_of[i].
RootCertificate expand_root(const OrdinaryRoot& r, const std::vector<std::vector<int>>& groups) {
    RootCertificate cert{MultiGraph(r.root.order()), {}};
    std::map<VertexPair, std::size_t> group_of;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        const auto [a, b] = r.edge_of[i];
        cert.root.add_edge(a, b, static_cast<int>(groups[i].size()));
        group_of[{a, b}] = i;
    }
    std::map<VertexPair, std::size_t> seen;
    for (const auto& p : cert.root.edge_instances()) {
        cert.edge_to_vertex.push_back(groups[group_of.at(p)][seen[p]++]);
    }
    return cert;
}

std::optional<RootCertificate> multigraph_root(const SimpleGraph& g) {
    const auto q = twin_quotient(g);
    const auto r = reconstruct_ordinary(q.graph);
    if (!r) return std::nullopt;
    return expand_root(*r, q.classes);
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        if (c > (std::uint64_t{1} << 62)) return c;
    }
    return c;
}

std::optional<WitnessCertificate> scan_subsets(const SimpleGraph& g, ForbiddenList list) {
    const auto& idx = ForbiddenIndex::for_list(list);
    const int n = g.order();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int k = idx.min_order(); k <= std::min(idx.max_order(), n); ++k) {
        std::vector<int> pos(static_cast<std::size_t>(k));
        std::iota(pos.begin(), pos.end(), 0);
        std::vector<int> verts(static_cast<std::size_t>(k));
        while (true) {
            for (int i = 0; i < k; ++i) verts[static_cast<std::size_t>(i)] = order[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])];
            if (const int hit = idx.lookup(g, verts); hit >= 0) {
                std::sort(verts.begin(), verts.end());
                return WitnessCertificate{list, verts, hit};
            }
            // Next subset in colex order.
            int j = 0;
            while (j < k && pos[static_cast<std::size_t>(j)] + 1 == (j + 1 < k ? pos[static_cast<std::size_t>(j + 1)] : n)) ++j;
            if (j == k) break;
            ++pos[static_cast<std::size_t>(j)];
            for (int i = 0; i < j; ++i) pos[static_cast<std::size_t>(i)] = i;
        }
    }
    return std::nullopt;
}

std::function<bool(const SimpleGraph&)> structural_member(ForbiddenList list) {
    switch (list) {
        case ForbiddenList::E6: return [](const SimpleGraph& h) { return multigraph_root(h).has_value(); };
        case ForbiddenList::Beineke: return [](const SimpleGraph& h) { return reconstruct_ordinary(h).has_value(); };
        case ForbiddenList::GLG: return [](const SimpleGraph& h) { return generalized_root(h).has_value(); };
        default: return nullptr;
    }
}

bool satisfies_normal_form(const MultiGraph& m) {
    for (const auto& [p, k] : m.multiplicities()) {
        if (k > 2) return false;
        if (k == 2 && m.degree(p.first) != 2 && m.degree(p.second) != 2) return false;
    }
    return true;
}

}  // namespace

TwinQuotient twin_quotient(const SimpleGraph& g) {
    TwinQuotient q;
    q.classes = twin_classes(g);
    std::vector<int> reps;
    for (const auto& c : q.classes) reps.push_back(c.front());
    q.graph = induced_subgraph(g, reps);
    return q;
}

std::optional<OrdinaryRoot> reconstruct_ordinary(const SimpleGraph& g) {
    require_connected(g);
    const int n = g.order();
    if (n > kSmallRootLimit) {
        const auto cells = odd_triangle_cells(g);
        if (!cells) return std::nullopt;
        return root_from_cells(n, *cells);
    }
    std::optional<OrdinaryRoot> best;
    std::optional<Labeling> best_label;
    KrauszSearch(g, [&](const Cells& cells) {
        auto r = root_from_cells(n, cells);
        auto lab = canonical_labeling(r.root);
        if (!best_label || lab.form < best_label->form) {
            best = std::move(r);
            best_label = std::move(lab);
        }
        return true;
    }).run();
    if (!best) return std::nullopt;
    const auto& perm = best_label->perm;
    OrdinaryRoot out{permute(best->root, perm), {}};
    for (const auto& [a, b] : best->edge_of) {
        const auto e = std::minmax(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
        out.edge_of.emplace_back(e.first, e.second);
    }
    return out;
}

Certificate recognize_multigraph_line_graph(const SimpleGraph& g) {
    require_connected(g);
    if (auto root = multigraph_root(g)) return *root;
    auto witness = find_forbidden_witness(g, ForbiddenList::E6);
    if (!witness) throw std::logic_error("no root and no E6-class witness");
    return *witness;
}

std::optional<WitnessCertificate> find_forbidden_witness(const SimpleGraph& g, ForbiddenList list) {
    require_connected(g);
    const auto& idx = ForbiddenIndex::for_list(list);
    std::uint64_t total = 0;
    for (int k = idx.min_order(); k <= idx.max_order(); ++k) total += binomial(g.order(), k);
    if (total <= kMaxExhaustiveSubsets) return scan_subsets(g, list);

    const auto member = structural_member(list);
    if (!member) throw std::length_error("graph too large for an exhaustive scan of this list");
    if (member(g)) return std::nullopt;
    std::vector<int> alive(static_cast<std::size_t>(g.order()));
    std::iota(alive.begin(), alive.end(), 0);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = alive.size(); i-- > 0;) {
            std::vector<int> sub = alive;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
            const auto h = induced_subgraph(g, sub);
            if (is_connected(h) && !member(h)) {
                alive = std::move(sub);
                changed = true;
            }
        }
    }
    const auto small = scan_subsets(induced_subgraph(g, alive), list);
    if (!small) throw std::logic_error("minimal non-member is not in the forbidden list");
    WitnessCertificate w = *small;
    for (int& v : w.vertices) v = alive[static_cast<std::size_t>(v)];
    std::sort(w.vertices.begin(), w.vertices.end());
    return w;
}

ListDecision is_ordinary_line_graph(const SimpleGraph& g) {
    require_connected(g);
    ListDecision d;
    d.witness = find_forbidden_witness(g, ForbiddenList::Beineke);
    d.member = !d.witness;
    const auto r = reconstruct_ordinary(g);
    if (r.has_value() != d.member) throw std::logic_error("Beineke list and root reconstruction disagree");
    if (r) {
        std::vector<std::vector<int>> singles;
        for (int v = 0; v < g.order(); ++v) singles.push_back({v});
        d.root = expand_root(*r, singles);
    }
    return d;
}

std::optional<RootCertificate> generalized_root(const SimpleGraph& g) {
    require_connected(g);
    const auto q = twin_quotient(g);
    const auto r = reconstruct_ordinary(q.graph);
    if (!r) return std::nullopt;
    auto direct = expand_root(*r, q.classes);
    if (satisfies_normal_form(direct.root)) return direct;

    // Twin classes of three or more, and roots that are not unique, only
    // occur when the whole root lives on few vertices. There every way of
    // pairing twins into double edges is tried against every Krausz partition.
    constexpr int kSearchLimit = 12;
    if (g.order() > kSearchLimit) return std::nullopt;
    std::vector<int> pairs(q.classes.size(), 0);
    std::optional<RootCertificate> found;
    while (!found) {
        std::vector<int> kept;
        std::vector<std::vector<int>> groups;
        for (std::size_t c = 0; c < q.classes.size(); ++c) {
            const auto& cls = q.classes[c];
            for (std::size_t i = 0; i < cls.size(); ++i) {
                kept.push_back(cls[i]);
                if (static_cast<int>(i) < 2 * pairs[c]) {
                    groups.push_back({cls[i], cls[i + 1]});
                    ++i;
                } else {
                    groups.push_back({cls[i]});
                }
            }
        }
        std::vector<std::size_t> by_vertex(kept.size());
        std::iota(by_vertex.begin(), by_vertex.end(), 0);
        std::sort(by_vertex.begin(), by_vertex.end(), [&](std::size_t a, std::size_t b) { return kept[a] < kept[b]; });
        std::vector<int> sorted_kept;
        std::vector<std::vector<int>> sorted_groups;
        for (auto i : by_vertex) {
            sorted_kept.push_back(kept[i]);
            sorted_groups.push_back(groups[i]);
        }
        const auto h = induced_subgraph(g, sorted_kept);
        KrauszSearch(h, [&](const Cells& cells) {
            auto cand = expand_root(root_from_cells(h.order(), cells), sorted_groups);
            if (!satisfies_normal_form(cand.root)) return true;
            found = std::move(cand);
            return false;
        }).run();

        std::size_t c = 0;
        for (; c < pairs.size(); ++c) {
            if (2 * (pairs[c] + 1) <= static_cast<int>(q.classes[c].size())) {
                ++pairs[c];
                break;
            }
            pairs[c] = 0;
        }
        if (c == pairs.size()) break;
    }
    return found;
}

ListDecision is_generalized_line_graph(const SimpleGraph& g) {
    require_connected(g);
    ListDecision d;
    d.witness = find_forbidden_witness(g, ForbiddenList::GLG);
    d.member = !d.witness;
    d.root = generalized_root(g);
    if (d.root.has_value() != d.member) throw std::logic_error("31-graph list and normal-form root disagree");
    return d;
}

bool recognize_via_tree(const SimpleGraph& g) {
    require_connected(g);
    return tree_is_An_reducible(reduce_to_tree(twin_quotient(g).graph).tree);
}

bool verify_certificate(const SimpleGraph& g, const Certificate& c) {
    const int n = g.order();
    if (const auto* r = std::get_if<RootCertificate>(&c)) {
        if (r->root.edge_count() != static_cast<std::size_t>(n) || r->edge_to_vertex.size() != static_cast<std::size_t>(n)) return false;
        std::vector<char> used(static_cast<std::size_t>(n), 0);
        for (int v : r->edge_to_vertex) {
            if (v < 0 || v >= n || used[static_cast<std::size_t>(v)]) return false;
            used[static_cast<std::size_t>(v)] = 1;
        }
        const auto lg = line_graph(r->root).graph;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (lg.adjacent(i, j) != g.adjacent(r->edge_to_vertex[static_cast<std::size_t>(i)], r->edge_to_vertex[static_cast<std::size_t>(j)])) return false;
            }
        }
        return true;
    }
    const auto& w = std::get<WitnessCertificate>(c);
    const auto& members = catalog().list(w.list);
    if (w.catalog_index < 0 || w.catalog_index >= static_cast<int>(members.size())) return false;
    if (static_cast<int>(w.vertices.size()) != members[static_cast<std::size_t>(w.catalog_index)].order()) return false;
    std::set<int> distinct(w.vertices.begin(), w.vertices.end());
    if (distinct.size() != w.vertices.size() || *distinct.begin() < 0 || *distinct.rbegin() >= n) return false;
    return ForbiddenIndex::for_list(w.list).lookup(g, w.vertices) == w.catalog_index;
}

std::string certificate_to_json(const Certificate& c) {
    nlohmann::json j;
    if (const auto* r = std::get_if<RootCertificate>(&c)) {
        nlohmann::json edges = nlohmann::json::array();
        for (const auto& [p, k] : r->root.multiplicities()) edges.push_back({p.first, p.second, k});
        j["kind"] = "root";
        j["multigraph"] = {{"vertices", r->root.order()}, {"edges", edges}};
        j["map"] = r->edge_to_vertex;
    } else {
        const auto& w = std::get<WitnessCertificate>(c);
        j["kind"] = "witness";
        j["list"] = to_string(w.list);
        j["vertices"] = w.vertices;
        j["catalog_index"] = w.catalog_index;
    }
    return j.dump();
}

Certificate certificate_from_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "root") {
            const auto& mg = j.at("multigraph");
            RootCertificate r{MultiGraph(mg.at("vertices").get<int>()), j.at("map").get<std::vector<int>>()};
            for (const auto& e : mg.at("edges")) {
                const auto t = e.get<std::vector<int>>();
                if (t.size() != 3) throw std::invalid_argument("edge entries are [u, v, multiplicity]");
                r.root.add_edge(t[0], t[1], t[2]);
            }
            return r;
        }
        if (kind == "witness") {
            const auto list = forbidden_list_from_string(j.at("list").get<std::string>());
            if (!list) throw std::invalid_argument("unknown list name");
            return WitnessCertificate{*list, j.at("vertices").get<std::vector<int>>(), j.at("catalog_index").get<int>()};
        }
        throw std::invalid_argument("unknown certificate kind");
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
    }
}

}  // namespace rootline
