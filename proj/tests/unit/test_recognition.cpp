#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "rootline/oracle.hpp"
#include "rootline/recognition.hpp"

using namespace rootline;

namespace {

bool is_root(const Certificate& c) { return std::holds_alternative<RootCertificate>(c); }

SimpleGraph petersen() {
    return SimpleGraph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                            {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

SimpleGraph with_pendant(const SimpleGraph& g, int at) {
    SimpleGraph h(g.order() + 1);
    for (const auto& [a, b] : g.edges()) h.add_edge(a, b);
    h.add_edge(at, g.order());
    return h;
}

bool normal_form(const MultiGraph& m) {
    for (const auto& [p, k] : m.multiplicities()) {
        if (k > 2) return false;
        if (k == 2 && m.degree(p.first) != 2 && m.degree(p.second) != 2) return false;
    }
    return true;
}

// Connected multigraph on at most max_vertices vertices.
MultiGraph random_multigraph(std::mt19937_64& rng, int max_vertices, int max_instances, int max_mult) {
    while (true) {
        const int instances = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_instances));
        const int used = std::min(2 + static_cast<int>(rng() % static_cast<unsigned>(max_vertices - 1)), instances + 1);
        if (used == 2 && instances > 1) continue;
        MultiGraph m(used);
        int placed = 0;
        for (int v = 1; v < used; ++v, ++placed) m.add_edge(static_cast<int>(rng() % static_cast<unsigned>(v)), v);
        int guard = 0;
        while (placed < instances && ++guard < 1000) {
            const int a = static_cast<int>(rng() % static_cast<unsigned>(used));
            const int b = static_cast<int>(rng() % static_cast<unsigned>(used));
            if (a == b || m.multiplicity(std::min(a, b), std::max(a, b)) >= max_mult) continue;
            m.add_edge(std::min(a, b), std::max(a, b));
            ++placed;
        }
        return m;
    }
}

SimpleGraph random_connected(std::mt19937_64& rng, int max_n) {
    const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
    const unsigned density = 20 + static_cast<unsigned>(rng() % 60);
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng() % 100 < density) g.add_edge(i, j);
        }
    }
    for (int v = 1; v < n; ++v) {
        if (!is_connected(induced_subgraph(g, [&] {
                std::vector<int> vs(static_cast<std::size_t>(v + 1));
                std::iota(vs.begin(), vs.end(), 0);
                return vs;
            }()))) {
            g.add_edge(static_cast<int>(rng() % static_cast<unsigned>(v)), v);
        }
    }
    return g;
}

}  // namespace

TEST_CASE("ordinary reconstruction") {
    const auto k3 = reconstruct_ordinary(named_graph(Family::Clique, 3));
    REQUIRE(k3);
    CHECK(k3->root == canonical(named_graph(Family::Star, 3)).graph());

    const auto p3 = reconstruct_ordinary(named_graph(Family::A, 3));
    REQUIRE(p3);
    CHECK(is_isomorphic(p3->root, named_graph(Family::A, 4)));

    const auto pet = reconstruct_ordinary(line_graph(petersen()).graph);
    REQUIRE(pet);
    CHECK(is_isomorphic(pet->root, petersen()));

    for (int n = 3; n <= 9; ++n) {
        const auto lg = line_graph(named_graph(Family::Clique, n)).graph;
        const auto r = reconstruct_ordinary(lg);
        REQUIRE(r);
        CHECK(is_isomorphic(line_graph(r->root).graph, lg));
    }
    CHECK_FALSE(reconstruct_ordinary(named_graph(Family::Star, 3)));
    CHECK_FALSE(reconstruct_ordinary(named_graph(Family::E, 8)));
    CHECK_THROWS_AS(reconstruct_ordinary(SimpleGraph(2)), DisconnectedInput);
}

TEST_CASE("edge map of an ordinary root") {
    const auto g = line_graph(petersen()).graph;
    const auto r = reconstruct_ordinary(g);
    REQUIRE(r);
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            const auto [a, b] = r->edge_of[static_cast<std::size_t>(u)];
            const auto [c, d] = r->edge_of[static_cast<std::size_t>(v)];
            const int shared = (a == c || a == d) + (b == c || b == d);
            CHECK(g.adjacent(u, v) == (shared == 1));
        }
    }
}

TEST_CASE("multigraph recognition examples") {
    // A root for the claw with a parallel pair: x=0, y=1, z=2, w=3.
    MultiGraph delta(4);
    delta.add_edge(0, 1);
    delta.add_edge(0, 2, 2);
    delta.add_edge(1, 3);
    CHECK(is_isomorphic(line_graph(delta).graph, named_graph(Family::Star, 3)));

    const auto claw = named_graph(Family::Star, 3);
    const auto c = recognize_multigraph_line_graph(claw);
    REQUIRE(is_root(c));
    CHECK(verify_certificate(claw, c));

    const auto e6 = named_graph(Family::E, 6);
    const auto w = recognize_multigraph_line_graph(e6);
    REQUIRE_FALSE(is_root(w));
    const auto& wit = std::get<WitnessCertificate>(w);
    CHECK(wit.vertices == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(wit.catalog_index == *catalog_index(e6));
    CHECK(wit.list == ForbiddenList::E6);

    const auto k15 = named_graph(Family::Star, 5);
    const auto r = recognize_multigraph_line_graph(k15);
    REQUIRE(is_root(r));
    const auto& root = std::get<RootCertificate>(r).root;
    std::vector<int> mults;
    for (const auto& [p, k] : root.multiplicities()) mults.push_back(k);
    std::sort(mults.begin(), mults.end());
    CHECK(mults == std::vector<int>{1, 5});
    CHECK(verify_certificate(k15, r));

    CHECK_THROWS_AS(recognize_multigraph_line_graph(SimpleGraph(3)), DisconnectedInput);
}

TEST_CASE("ordinary and generalized examples") {
    CHECK(is_ordinary_line_graph(named_graph(Family::Clique, 3)).member);
    const auto claw = is_ordinary_line_graph(named_graph(Family::Star, 3));
    CHECK_FALSE(claw.member);
    REQUIRE(claw.witness);
    CHECK(claw.witness->list == ForbiddenList::Beineke);
    CHECK(claw.witness->catalog_index == 0);
    const auto k15 = is_ordinary_line_graph(named_graph(Family::Star, 5));
    CHECK_FALSE(k15.member);
    CHECK(k15.witness->catalog_index == 0);

    // Doubled 2-path a=b=c: its line graph is the 4-cycle.
    MultiGraph doubled(3);
    doubled.add_edge(0, 1, 2);
    doubled.add_edge(1, 2, 2);
    CHECK(is_isomorphic(line_graph(doubled).graph, named_graph(Family::Cycle, 4)));
    const auto c4 = is_generalized_line_graph(named_graph(Family::Cycle, 4));
    CHECK(c4.member);
    REQUIRE(c4.root);
    CHECK(normal_form(c4.root->root));
    CHECK(verify_certificate(named_graph(Family::Cycle, 4), *c4.root));

    const auto claw_g = is_generalized_line_graph(named_graph(Family::Star, 3));
    CHECK(claw_g.member);
    REQUIRE(claw_g.root);
    CHECK(normal_form(claw_g.root->root));

    const auto star5 = is_generalized_line_graph(named_graph(Family::Star, 5));
    CHECK_FALSE(star5.member);
    REQUIRE(star5.witness);
    CHECK(star5.witness->catalog_index == 4);
    CHECK_FALSE(star5.root);

    const auto g11 = line_graph(catalog().g_roots[10]).graph;
    const auto d11 = is_generalized_line_graph(g11);
    CHECK_FALSE(d11.member);
    REQUIRE(d11.witness);
    CHECK(d11.witness->catalog_index == 10);
}

TEST_CASE("tree criterion and witness search") {
    for (int n = 1; n <= 9; ++n) CHECK(recognize_via_tree(named_graph(Family::A, n)));
    CHECK_FALSE(recognize_via_tree(named_graph(Family::E, 6)));
    CHECK(recognize_via_tree(line_graph(named_graph(Family::Clique, 6)).graph));

    CHECK_FALSE(find_forbidden_witness(line_graph(named_graph(Family::Clique, 8)).graph));
    const auto ext = with_pendant(named_graph(Family::E, 6), 5);
    const auto w = find_forbidden_witness(ext);
    REQUIRE(w);
    CHECK(w->vertices == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("witness by shrinking on a large input") {
    // 67 vertices is beyond the exhaustive subset scan.
    const auto g = with_pendant(line_graph(named_graph(Family::Clique, 12)).graph, 0);
    const auto c = recognize_multigraph_line_graph(g);
    REQUIRE_FALSE(is_root(c));
    CHECK(verify_certificate(g, c));
    const auto lk = line_graph(named_graph(Family::Clique, 12)).graph;
    const auto r = recognize_multigraph_line_graph(lk);
    REQUIRE(is_root(r));
    CHECK(verify_certificate(lk, r));
}

TEST_CASE("all connected graphs on at most six vertices") {
    int total = 0;
    for (int n = 1; n <= 6; ++n) {
        for (const auto& form : enumerate_connected_graphs(n)) {
            ++total;
            const auto g = form.graph();
            CAPTURE(form.graph6());
            const auto c = recognize_multigraph_line_graph(g);
            CHECK(verify_certificate(g, c));
            const bool multi = is_root(c);
            CHECK(multi == oracle_is_multigraph_line_graph(g).has_value());
            CHECK(multi == recognize_via_tree(g));
            CHECK(multi == !find_forbidden_witness(g).has_value());

            const auto ord = is_ordinary_line_graph(g);
            CHECK(ord.member == oracle_line_graph_root(g, OracleKind::Ordinary).has_value());
            const auto gen = is_generalized_line_graph(g);
            CHECK(gen.member == oracle_line_graph_root(g, OracleKind::Generalized).has_value());
            if (ord.member) {
                CHECK(gen.member);
                CHECK(verify_certificate(g, *ord.root));
            } else {
                CHECK(verify_certificate(g, *ord.witness));
            }
            if (gen.member) {
                CHECK(multi);
                CHECK(normal_form(gen.root->root));
                CHECK(verify_certificate(g, *gen.root));
            } else {
                CHECK(verify_certificate(g, *gen.witness));
            }
        }
    }
    CHECK(total == 143);
}

TEST_CASE("random graphs: three deciders agree") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 500; ++t) {
        const auto g = random_connected(rng, 10);
        REQUIRE(is_connected(g));
        const auto c = recognize_multigraph_line_graph(g);
        CHECK(verify_certificate(g, c));
        CHECK(is_root(c) == recognize_via_tree(g));
        CHECK(is_root(c) == !find_forbidden_witness(g).has_value());
    }
}

TEST_CASE("round trips and hereditary closure") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 300; ++t) {
        const auto m = random_multigraph(rng, 10, 14, 4);
        const auto lg = line_graph(m).graph;
        if (!is_connected(lg)) continue;
        const auto c = recognize_multigraph_line_graph(lg);
        REQUIRE(is_root(c));
        CHECK(verify_certificate(lg, c));
        CHECK(is_isomorphic(line_graph(std::get<RootCertificate>(c).root).graph, lg));
        // Connected induced subgraphs stay recognisable.
        std::vector<int> keep;
        for (int v = 0; v < lg.order(); ++v) {
            if (rng() % 3 != 0) keep.push_back(v);
        }
        if (keep.empty()) continue;
        const auto sub = induced_subgraph(lg, keep);
        for (const auto& comp : connected_components(sub)) {
            CHECK(is_root(recognize_multigraph_line_graph(induced_subgraph(sub, comp))));
        }
    }
}

TEST_CASE("generalized roots in normal form") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        // Random tree-plus-chords base with doubled pendant edges hung on it.
        const int base = 2 + static_cast<int>(rng() % 7);
        const int hang = static_cast<int>(rng() % 4);
        MultiGraph m(base + hang);
        for (int v = 1; v < base; ++v) m.add_edge(static_cast<int>(rng() % static_cast<unsigned>(v)), v);
        for (int k = 0; k < 3; ++k) {
            const int a = static_cast<int>(rng() % static_cast<unsigned>(base));
            const int b = static_cast<int>(rng() % static_cast<unsigned>(base));
            if (a != b && m.multiplicity(std::min(a, b), std::max(a, b)) == 0) m.add_edge(std::min(a, b), std::max(a, b));
        }
        for (int h = 0; h < hang; ++h) m.add_edge(static_cast<int>(rng() % static_cast<unsigned>(base)), base + h, 2);
        const auto lg = line_graph(m).graph;
        if (!is_connected(lg)) continue;
        const auto d = is_generalized_line_graph(lg);
        CHECK(d.member);
        REQUIRE(d.root);
        CHECK(normal_form(d.root->root));
        CHECK(verify_certificate(lg, *d.root));
    }
}

TEST_CASE("certificate serialisation and tampering") {
    const auto g = line_graph(named_graph(Family::Clique, 5)).graph;
    const auto c = recognize_multigraph_line_graph(g);
    const auto text = certificate_to_json(c);
    CHECK(text.rfind("{\"kind\":\"root\"", 0) == 0);
    const auto back = certificate_from_json(text);
    CHECK(std::get<RootCertificate>(back) == std::get<RootCertificate>(c));
    CHECK(verify_certificate(g, back));

    auto bad = std::get<RootCertificate>(c);
    std::swap(bad.edge_to_vertex[0], bad.edge_to_vertex[9]);
    CHECK_FALSE(verify_certificate(g, bad));

    const auto e6 = named_graph(Family::E, 6);
    const auto w = recognize_multigraph_line_graph(e6);
    const auto wtext = certificate_to_json(w);
    CHECK(wtext == "{\"catalog_index\":" + std::to_string(*catalog_index(e6)) +
                       ",\"kind\":\"witness\",\"list\":\"e6\",\"vertices\":[0,1,2,3,4,5]}");
    CHECK(certificate_from_json(wtext) == w);
    auto wrong = std::get<WitnessCertificate>(w);
    wrong.catalog_index = (wrong.catalog_index + 1) % 32;
    CHECK_FALSE(verify_certificate(e6, wrong));

    CHECK_THROWS_AS(certificate_from_json("{\"kind\":\"other\"}"), std::invalid_argument);
    CHECK_THROWS_AS(certificate_from_json("not json"), std::invalid_argument);
}
