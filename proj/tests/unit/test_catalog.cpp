#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "rootline/catalog.hpp"
#include "rootline/embedding.hpp"

using namespace rootline;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool contains_any(const SimpleGraph& g, const std::vector<CanonicalForm>& list) {
    for (const auto& f : list) {
        if (contains_induced(g, f.graph())) return true;
    }
    return false;
}

// Connected graphs induced on anisotropic bases of the 6-dimensional space
// obtained from E6 directly: no mutation search involved.
std::set<CanonicalForm> basis_graphs() {
    const auto space = universal_embedding(named_graph(Family::E, 6)).space();
    std::vector<std::uint64_t> aniso;
    for (std::uint64_t v = 1; v < 64; ++v) {
        if (eval_q(space, F2Vector(6, v)) == 1) aniso.push_back(v);
    }
    REQUIRE(aniso.size() == 36);
    std::set<std::uint32_t> seen;
    std::set<CanonicalForm> out;
    std::vector<int> pick(6);
    const int n = static_cast<int>(aniso.size());
    for (pick[0] = 0; pick[0] < n; ++pick[0])
        for (pick[1] = pick[0] + 1; pick[1] < n; ++pick[1])
            for (pick[2] = pick[1] + 1; pick[2] < n; ++pick[2])
                for (pick[3] = pick[2] + 1; pick[3] < n; ++pick[3])
                    for (pick[4] = pick[3] + 1; pick[4] < n; ++pick[4])
                        for (pick[5] = pick[4] + 1; pick[5] < n; ++pick[5]) {
                            Subspace span(6);
                            for (int p : pick) span.insert(F2Vector(6, aniso[static_cast<std::size_t>(p)]));
                            if (span.dim() != 6) continue;
                            SimpleGraph g(6);
                            std::uint32_t mask = 0;
                            for (int i = 0; i < 6; ++i) {
                                for (int j = i + 1; j < 6; ++j) {
                                    const F2Vector a(6, aniso[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])]);
                                    const F2Vector b(6, aniso[static_cast<std::size_t>(pick[static_cast<std::size_t>(j)])]);
                                    if (eval_f(space, a, b)) {
                                        g.add_edge(i, j);
                                        mask |= 1u << (i * 6 + j);
                                    }
                                }
                            }
                            if (!seen.insert(mask).second || !is_connected(g)) continue;
                            out.insert(canonical(g));
                        }
    return out;
}

}  // namespace

TEST_CASE("E6 class") {
    const auto& c = catalog();
    CHECK(c.e6_class.size() == 32);
    CHECK(std::is_sorted(c.e6_class.begin(), c.e6_class.end()));
    CHECK(std::set<CanonicalForm>(c.e6_class.begin(), c.e6_class.end()) == basis_graphs());
    int trees = 0;
    for (const auto& f : c.e6_class) {
        const auto g = f.graph();
        CHECK(g.order() == 6);
        CHECK(is_connected(g));
        const auto space = universal_embedding(g).space();
        CHECK(classify_type(space).type == FormType::Minus);
        CHECK(classify_type(space).isotropic_radical_dim == 0);
        CHECK(anisotropic_count(space) == 36);
        CHECK(twin_classes(g).size() == 6);
        trees += is_tree(g);
    }
    CHECK(trees == 1);
}

TEST_CASE("every chordless cycle of a member has an outside vertex with an odd number of cycle neighbours") {
    for (const auto& f : catalog().e6_class) {
        const auto g = f.graph();
        for (std::uint32_t mask = 1; mask < 64; ++mask) {
            if (std::popcount(mask) < 3) continue;
            std::vector<int> vs;
            for (int v = 0; v < 6; ++v) {
                if ((mask >> v) & 1u) vs.push_back(v);
            }
            const auto sub = induced_subgraph(g, vs);
            const auto deg = degree_sequence(sub);
            const bool cycle = is_connected(sub) && deg.front() == 2 && deg.back() == 2;
            if (!cycle) continue;
            bool odd = false;
            for (int x = 0; x < 6; ++x) {
                if ((mask >> x) & 1u) continue;
                int cnt = 0;
                for (int v : vs) cnt += g.adjacent(x, v);
                odd = odd || (cnt % 2 == 1);
            }
            CHECK(odd);
        }
    }
}

TEST_CASE("H and G lists") {
    const auto& c = catalog();
    REQUIRE(c.h_list.size() == 3);
    CHECK(c.h_list[0] == canonical(named_graph(Family::Star, 3)));
    CHECK(c.h_list[1].order() == 5);
    CHECK(c.h_list[1].graph().size() == 7);
    CHECK(c.h_list[2].order() == 5);
    CHECK(c.h_list[2].graph().size() == 9);

    REQUIRE(c.g_list.size() == 11);
    REQUIRE(c.g_roots.size() == 11);
    for (std::size_t i = 0; i < 11; ++i) {
        CHECK(static_cast<std::size_t>(c.g_list[i].order()) == c.g_roots[i].edge_count());
        CHECK(is_connected(c.g_list[i].graph()));
    }
    CHECK(c.g_list[4] == canonical(named_graph(Family::Star, 5)));
    // G2 is K_{2,3}, G9 is K_{1,1,4}, G11 is K_{1,1,1,3}.
    CHECK(c.g_list[1] == canonical(SimpleGraph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})));
    SimpleGraph k114(6, {{0, 1}});
    for (int v = 2; v < 6; ++v) {
        k114.add_edge(0, v);
        k114.add_edge(1, v);
    }
    CHECK(c.g_list[8] == canonical(k114));
    SimpleGraph k1113 = named_graph(Family::Clique, 6);
    for (auto [a, b] : {std::pair{3, 4}, {3, 5}, {4, 5}}) k1113.remove_edge(a, b);
    CHECK(c.g_list[10] == canonical(k1113));
    CHECK(std::set<CanonicalForm>(c.g_list.begin(), c.g_list.end()).size() == 11);
}

TEST_CASE("derived lists") {
    const auto& c = catalog();
    int h_free = 0;
    int g_free = 0;
    for (const auto& f : c.e6_class) {
        h_free += !contains_any(f.graph(), c.h_list);
        g_free += !contains_any(f.graph(), c.g_list);
    }
    CHECK(h_free == 6);
    CHECK(g_free == 20);
    CHECK(c.beineke.size() == 9);
    CHECK(c.glg.size() == 31);
    CHECK(std::equal(c.h_list.begin(), c.h_list.end(), c.beineke.begin()));
    CHECK(std::equal(c.g_list.begin(), c.g_list.end(), c.glg.begin()));
}

TEST_CASE("catalog index") {
    const auto e6 = named_graph(Family::E, 6);
    const auto idx = catalog_index(e6);
    REQUIRE(idx.has_value());
    CHECK(catalog().e6_class[static_cast<std::size_t>(*idx)] == canonical(e6));
    CHECK_FALSE(catalog_index(named_graph(Family::Clique, 6)).has_value());
    CHECK_FALSE(catalog_index(named_graph(Family::A, 6)).has_value());
    CHECK_FALSE(catalog_index(named_graph(Family::A, 5)).has_value());
}

TEST_CASE("frozen snapshot") {
    for (auto l : {ForbiddenList::E6, ForbiddenList::H, ForbiddenList::G, ForbiddenList::Beineke, ForbiddenList::GLG}) {
        CAPTURE(to_string(l));
        CHECK(snapshot_text(l) == read_file(std::string(ROOTLINE_DATA_DIR) + "/catalog/" + to_string(l) + ".g6"));
    }
}

TEST_CASE("list names") {
    CHECK(forbidden_list_from_string("glg") == ForbiddenList::GLG);
    CHECK_FALSE(forbidden_list_from_string("nope").has_value());
}

TEST_CASE("forbidden index agrees with induced search") {
    std::mt19937_64 rng(17);
    const auto& idx = ForbiddenIndex::for_list(ForbiddenList::GLG);
    CHECK(idx.min_order() == 5);
    CHECK(idx.max_order() == 6);
    const auto& c = catalog();
    for (int trial = 0; trial < 3000; ++trial) {
        const int k = 5 + static_cast<int>(rng() % 2);
        SimpleGraph g(k);
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                if (rng() % 3 != 0) g.add_edge(i, j);
            }
        }
        std::vector<int> all(static_cast<std::size_t>(k));
        std::iota(all.begin(), all.end(), 0);
        const int hit = idx.lookup(g, all);
        const auto form = canonical(g);
        const auto it = std::find(c.glg.begin(), c.glg.end(), form);
        CHECK(hit == (it == c.glg.end() ? -1 : static_cast<int>(it - c.glg.begin())));
    }
    // Each member is found under a random relabelling.
    for (std::size_t i = 0; i < c.e6_class.size(); ++i) {
        std::vector<int> perm(6);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto g = permute(c.e6_class[i].graph(), perm);
        const std::vector<int> all{0, 1, 2, 3, 4, 5};
        CHECK(ForbiddenIndex::for_list(ForbiddenList::E6).lookup(g, all) == static_cast<int>(i));
    }
}
