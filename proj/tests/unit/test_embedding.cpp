#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "rootline/embedding.hpp"

using namespace rootline;

namespace {

int index_of(const LineGraph& lg, int a, int b) {
    const auto it = std::find(lg.edge_labels.begin(), lg.edge_labels.end(), VertexPair{a, b});
    REQUIRE(it != lg.edge_labels.end());
    return static_cast<int>(it - lg.edge_labels.begin());
}

}  // namespace

TEST_CASE("universal embedding of K1 and E6") {
    const auto k1 = universal_embedding(SimpleGraph(1));
    CHECK(k1.space().dim() == 1);
    CHECK(eval_q(k1.space(), k1.vectors()[0]) == 1);
    CHECK(isotropic_radical(k1.space()).dim() == 0);
    CHECK_FALSE(summarize(k1.space()).type.has_value());

    const auto e6 = universal_embedding(named_graph(Family::E, 6));
    CHECK(e6.space().dim() == 6);
    CHECK(radical_of_f(e6.space()).dim() == 0);
    CHECK(classify_type(e6.space()).type == FormType::Minus);
    CHECK(anisotropic_count(e6.space()) == 36);
    CHECK(eval_f(e6.space(), e6.vectors()[1], e6.vectors()[3]) == 0);
    CHECK(eval_q(e6.space(), e6.vectors()[0] + e6.vectors()[1]) == 1);
    CHECK(e6.graph() == named_graph(Family::E, 6));
}

TEST_CASE("universal embedding does not depend on the ordering") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        SimpleGraph g(8);
        for (int i = 0; i < 8; ++i) {
            for (int j = i + 1; j < 8; ++j) {
                if (rng() & 1u) g.add_edge(i, j);
            }
        }
        std::vector<int> ord(8);
        std::iota(ord.begin(), ord.end(), 0);
        std::shuffle(ord.begin(), ord.end(), rng);
        const auto a = universal_embedding(g, ord);
        std::shuffle(ord.begin(), ord.end(), rng);
        const auto b = universal_embedding(g, ord);
        // Compare Q and f on vertex images and pairwise sums.
        for (int i = 0; i < 8; ++i) {
            CHECK(eval_q(a.space(), a.vectors()[i]) == eval_q(b.space(), b.vectors()[i]));
            for (int j = 0; j < 8; ++j) {
                CHECK(eval_f(a.space(), a.vectors()[i], a.vectors()[j]) == eval_f(b.space(), b.vectors()[i], b.vectors()[j]));
                CHECK(eval_q(a.space(), a.vectors()[i] + a.vectors()[j]) == eval_q(b.space(), b.vectors()[i] + b.vectors()[j]));
            }
        }
        CHECK(a.graph() == g);
        CHECK(b.graph() == g);
    }
    CHECK_THROWS(universal_embedding(SimpleGraph(3), {0, 0, 1}));
}

TEST_CASE("embedding invariants are enforced") {
    const QuadraticSpace s(2, {0b10, 0b01}, 0b01);
    CHECK_THROWS(EmbeddedGraph(s, {F2Vector(2, 0b01), F2Vector(2, 0b10)}));  // second is singular
    CHECK_THROWS(EmbeddedGraph(s, {F2Vector(2, 0b01)}));                     // does not span
    CHECK_THROWS_AS(universal_embedding(SimpleGraph(65)), DimensionError);
}

TEST_CASE("minimal embeddings") {
    const auto p3 = minimal_embedding(named_graph(Family::A, 3));
    CHECK(p3.embedded.space().dim() == 2);
    CHECK(p3.class_of[0] == p3.class_of[2]);
    CHECK(p3.representatives == std::vector<int>{0, 1});

    const auto e6g = named_graph(Family::E, 6);
    const auto e6 = minimal_embedding(e6g);
    CHECK(e6.embedded.space() == universal_embedding(e6g).space());
    CHECK(e6.embedded.order() == 6);

    const auto lk6 = minimal_embedding(line_graph(named_graph(Family::Clique, 6)).graph);
    CHECK(lk6.embedded.space().dim() == 5);
    CHECK(isotropic_radical(lk6.embedded.space()).dim() == 0);
    CHECK(cotriangular_closure(lk6.embedded).size() == 15);

    const auto lk4 = minimal_embedding(line_graph(named_graph(Family::Clique, 4)).graph);
    CHECK(lk4.embedded.space().dim() == 2);
    CHECK(lk4.embedded.order() == 3);

    const auto lk8 = line_graph(named_graph(Family::Clique, 8));
    const auto u8 = universal_embedding(lk8.graph);
    const auto iso8 = isotropic_radical(u8.space());
    F2Vector sum(28);
    for (auto [a, b] : {std::pair{0, 1}, {2, 3}, {4, 5}, {6, 7}}) sum += u8.vectors()[static_cast<std::size_t>(index_of(lk8, a, b))];
    CHECK(iso8.contains(sum));
    const auto m8 = minimal_embedding(lk8.graph);
    CHECK(m8.embedded.space().dim() == 6);
    CHECK(classify_type(m8.embedded.space()).type == FormType::Plus);
    CHECK(anisotropic_count(m8.embedded.space()) == 28);
    CHECK(cotriangular_closure(m8.embedded).size() == 28);
}

TEST_CASE("closures") {
    const auto k2 = universal_embedding(named_graph(Family::A, 2));
    CHECK(cotriangular_closure(k2).size() == 3);
    const auto e6 = universal_embedding(named_graph(Family::E, 6));
    const auto pi = cotriangular_closure(e6);
    CHECK(pi.size() == 36);
    for (const auto& p : pi) CHECK(eval_q(e6.space(), p) == 1);
    CHECK_THROWS_AS(cotriangular_closure(universal_embedding(SimpleGraph(21))), DimensionError);
}

TEST_CASE("minimal embedding merges exactly the twins, and closures commute with the quotient") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& form : enumerate_connected_graphs(n)) {
            const SimpleGraph g = form.graph();
            const auto m = minimal_embedding(g);
            // Direct neighbourhood scan.
            for (int v = 0; v < n; ++v) {
                for (int w = 0; w < n; ++w) {
                    bool twins = !g.adjacent(v, w);
                    for (int x = 0; x < n && twins; ++x) {
                        if (x != v && x != w && g.adjacent(v, x) != g.adjacent(w, x)) twins = false;
                    }
                    CHECK((m.class_of[static_cast<std::size_t>(v)] == m.class_of[static_cast<std::size_t>(w)]) == twins);
                }
            }
            CHECK(m.embedded.graph() == induced_subgraph(g, m.representatives));

            // Images of the universal closure under the quotient map equal the
            // closure of the minimal embedding.
            const auto u = universal_embedding(g);
            const auto rad = isotropic_radical(u.space());
            const auto closure_u = cotriangular_closure(u);
            const auto q = quotient(u.space(), rad, closure_u);
            const std::set<F2Vector> image(q.images.begin(), q.images.end());
            const auto closure_m = cotriangular_closure(m.embedded);
            CHECK(image == std::set<F2Vector>(closure_m.begin(), closure_m.end()));
        }
    }
}
