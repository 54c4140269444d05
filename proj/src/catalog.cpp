#include "rootline/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rootline/embedding.hpp"
#include "rootline/mutation.hpp"

namespace rootline {

std::string to_string(ForbiddenList list) {
    switch (list) {
        case ForbiddenList::E6: return "e6";
        case ForbiddenList::H: return "h";
        case ForbiddenList::G: return "g";
        case ForbiddenList::Beineke: return "beineke";
        case ForbiddenList::GLG: return "glg";
    }
    return "?";
}

std::optional<ForbiddenList> forbidden_list_from_string(const std::string& name) {
    for (auto l : {ForbiddenList::E6, ForbiddenList::H, ForbiddenList::G, ForbiddenList::Beineke, ForbiddenList::GLG}) {
        if (to_string(l) == name) return l;
    }
    return std::nullopt;
}

const std::vector<CanonicalForm>& Catalog::list(ForbiddenList which) const {
    switch (which) {
        case ForbiddenList::E6: return e6_class;
        case ForbiddenList::H: return h_list;
        case ForbiddenList::G: return g_list;
        case ForbiddenList::Beineke: return beineke;
        case ForbiddenList::GLG: return glg;
    }
    throw std::invalid_argument("unknown list");
}

namespace {

MultiGraph root(int n, std::initializer_list<std::array<int, 3>> edges) {
    MultiGraph m(n);
    for (const auto& e : edges) m.add_edge(e[0], e[1], e[2]);
    return m;
}

// Roots drawn next to G1..G11; where several roots share a line graph the
// first one drawn is used.
std::vector<MultiGraph> g_roots() {
    return {
        root(5, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {3, 4, 1}}),
        root(4, {{0, 1, 1}, {1, 2, 3}, {2, 3, 1}}),
        root(5, {{0, 1, 1}, {1, 4, 1}, {1, 2, 2}, {2, 3, 1}}),
        root(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 3}}),
        root(3, {{0, 1, 1}, {1, 2, 5}}),
        root(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 3}, {1, 4, 1}}),
        root(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {1, 4, 1}, {0, 4, 2}}),
        root(5, {{0, 1, 3}, {1, 2, 1}, {2, 3, 1}, {1, 4, 1}}),
        root(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 4}}),
        root(5, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {1, 4, 1}, {0, 4, 2}}),
        root(5, {{0, 1, 3}, {1, 2, 1}, {1, 3, 1}, {1, 4, 1}}),
    };
}

std::vector<SimpleGraph> h_graphs() {
    // H2: a and c are non-adjacent twins over t, m, b; b has degree two; m ~ t.
    SimpleGraph h2(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}});
    SimpleGraph h3 = named_graph(Family::Clique, 5);
    h3.remove_edge(2, 4);
    return {named_graph(Family::Star, 3), h2, h3};
}

bool has_nonadjacent_twins(const SimpleGraph& g) { return twin_classes(g).size() != static_cast<std::size_t>(g.order()); }

bool contains_any(const SimpleGraph& g, const std::vector<CanonicalForm>& list) {
    return std::any_of(list.begin(), list.end(), [&](const CanonicalForm& f) { return contains_induced(g, f.graph()).has_value(); });
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("catalog regeneration: " + what);
}

}  // namespace

Catalog build_catalog() {
    Catalog c;
    c.e6_class = equivalence_class(named_graph(Family::E, 6), kDefaultMaxClasses);

    const SimpleGraph claw = named_graph(Family::Star, 3);
    const SimpleGraph diamond(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    int trees = 0;
    for (const auto& f : c.e6_class) {
        const SimpleGraph g = f.graph();
        require(g.order() == 6 && is_connected(g), "member is not a connected 6-vertex graph");
        const QuadraticSpace space = universal_embedding(g).space();
        const SpaceSummary s = summarize(space);
        require(s.isotropic_radical_dim == 0 && s.type == FormType::Minus, "member is not of nondegenerate Minus type");
        require(anisotropic_count(space) == 36, "member space does not have 36 anisotropic vectors");
        require(!has_nonadjacent_twins(g), "member has non-adjacent twins");
        require(contains_induced(g, claw) || contains_induced(g, diamond), "member has no induced claw or diamond");
        if (is_tree(g)) ++trees;
    }
    require(trees == 1, "expected exactly one tree in the E6 class");

    for (const auto& h : h_graphs()) c.h_list.push_back(canonical(h));
    c.g_roots = g_roots();
    for (const auto& r : c.g_roots) c.g_list.push_back(canonical(line_graph(r).graph));

    c.beineke = c.h_list;
    c.glg = c.g_list;
    for (const auto& f : c.e6_class) {
        const SimpleGraph g = f.graph();
        if (!contains_any(g, c.h_list)) c.beineke.push_back(f);
        if (!contains_any(g, c.g_list)) c.glg.push_back(f);
    }
    return c;
}

const Catalog& catalog() {
    static const Catalog instance = build_catalog();
    return instance;
}

std::optional<int> catalog_index(const SimpleGraph& g) {
    if (g.order() != 6) return std::nullopt;
    const auto& members = catalog().e6_class;
    const auto form = canonical(g);
    const auto it = std::lower_bound(members.begin(), members.end(), form);
    if (it == members.end() || *it != form) return std::nullopt;
    return static_cast<int>(it - members.begin());
}

std::string snapshot_text(ForbiddenList which) {
    std::string out;
    for (const auto& f : catalog().list(which)) {
        out += f.graph6();
        out += '\n';
    }
    return out;
}

namespace {

std::uint32_t labelled_mask(const SimpleGraph& g, std::span<const int> vertices) {
    std::uint32_t mask = 0;
    int bit = 0;
    const int k = static_cast<int>(vertices.size());
    for (int j = 1; j < k; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.adjacent(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)])) mask |= 1u << bit;
        }
    }
    return mask;
}

}  // namespace

ForbiddenIndex::ForbiddenIndex(const std::vector<CanonicalForm>& members) {
    for (std::size_t idx = 0; idx < members.size(); ++idx) {
        const SimpleGraph g = members[idx].graph();
        const int k = g.order();
        if (k < 1 || k > kMaxOrder) throw std::invalid_argument("ForbiddenIndex handles members with 1..6 vertices");
        auto& table = tables_[static_cast<std::size_t>(k)];
        if (table.empty()) table.assign(std::size_t{1} << (k * (k - 1) / 2), -1);
        min_order_ = std::min(min_order_, k);
        max_order_ = std::max(max_order_, k);
        std::vector<int> perm(static_cast<std::size_t>(k));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            table[labelled_mask(g, perm)] = static_cast<std::int16_t>(idx);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

int ForbiddenIndex::lookup(const SimpleGraph& g, std::span<const int> vertices) const {
    const std::size_t k = vertices.size();
    if (k > static_cast<std::size_t>(kMaxOrder) || tables_[k].empty()) return -1;
    return tables_[k][labelled_mask(g, vertices)];
}

const ForbiddenIndex& ForbiddenIndex::for_list(ForbiddenList which) {
    static const ForbiddenIndex e6(catalog().e6_class);
    static const ForbiddenIndex h(catalog().h_list);
    static const ForbiddenIndex g(catalog().g_list);
    static const ForbiddenIndex beineke(catalog().beineke);
    static const ForbiddenIndex glg(catalog().glg);
    switch (which) {
        case ForbiddenList::E6: return e6;
        case ForbiddenList::H: return h;
        case ForbiddenList::G: return g;
        case ForbiddenList::Beineke: return beineke;
        case ForbiddenList::GLG: return glg;
    }
    throw std::invalid_argument("unknown list");
}

}  // namespace rootline
