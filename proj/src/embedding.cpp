#include "rootline/embedding.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace rootline {

EmbeddedGraph::EmbeddedGraph(QuadraticSpace space, std::vector<F2Vector> vectors)
    : space_(std::move(space)), vectors_(std::move(vectors)) {
    Subspace span(space_.dim());
    for (const auto& v : vectors_) {
        if (eval_q(space_, v) != 1) throw std::invalid_argument("embedded vector " + v.to_string() + " is not anisotropic");
        span.insert(v);
    }
    if (span.dim() != space_.dim()) throw std::invalid_argument("embedded vectors do not span the space");
}

bool EmbeddedGraph::adjacent(int i, int j) const {
    return eval_f(space_, vectors_.at(static_cast<std::size_t>(i)), vectors_.at(static_cast<std::size_t>(j))) == 1;
}

SimpleGraph EmbeddedGraph::graph() const {
    SimpleGraph g(order());
    for (int i = 0; i < order(); ++i) {
        for (int j = i + 1; j < order(); ++j) {
            if (adjacent(i, j)) g.add_edge(i, j);
        }
    }
    return g;
}

void EmbeddedGraph::set_vector(int i, const F2Vector& v) {
    if (eval_q(space_, v) != 1) throw std::invalid_argument("replacement vector is not anisotropic");
    auto& slot = vectors_.at(static_cast<std::size_t>(i));
    const F2Vector old = slot;
    slot = v;
    Subspace span(space_.dim());
    for (const auto& w : vectors_) span.insert(w);
    if (span.dim() != space_.dim()) {
        slot = old;
        throw std::invalid_argument("replacement vector breaks spanning");
    }
}

EmbeddedGraph universal_embedding(const SimpleGraph& g, const std::vector<int>& ordering) {
    const int n = g.order();
    if (n > kMaxDim) throw DimensionError("embeddings support at most 64 vertices, got " + std::to_string(n));
    if (static_cast<int>(ordering.size()) != n) throw std::invalid_argument("ordering has the wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int p : ordering) {
        if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) throw std::invalid_argument("ordering is not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }
    // Order-dependent bilinear map on the basis: gb[a] has bit b set when the
    // pair (a, b) counts, i.e. a = b, or a < b in the ordering and ab is an
    // edge. Basis vector a is the image of the vertex placed at position a.
    std::vector<int> vertex_at(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) vertex_at[static_cast<std::size_t>(ordering[static_cast<std::size_t>(v)])] = v;
    std::vector<std::uint64_t> gb(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
        gb[static_cast<std::size_t>(a)] |= std::uint64_t{1} << a;
        for (int b = a + 1; b < n; ++b) {
            if (g.adjacent(vertex_at[static_cast<std::size_t>(a)], vertex_at[static_cast<std::size_t>(b)])) {
                gb[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
            }
        }
    }
    std::vector<std::uint64_t> gram(static_cast<std::size_t>(n), 0);
    std::uint64_t qdiag = 0;
    for (int a = 0; a < n; ++a) {
        if ((gb[static_cast<std::size_t>(a)] >> a) & 1u) qdiag |= std::uint64_t{1} << a;
        for (int b = 0; b < n; ++b) {
            const bool ab = (gb[static_cast<std::size_t>(a)] >> b) & 1u;
            const bool ba = (gb[static_cast<std::size_t>(b)] >> a) & 1u;
            if (ab != ba) gram[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
        }
    }
    std::vector<F2Vector> vectors;
    vectors.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) vectors.push_back(F2Vector::unit(n, ordering[static_cast<std::size_t>(v)]));
    return EmbeddedGraph(QuadraticSpace(n, std::move(gram), qdiag), std::move(vectors));
}

EmbeddedGraph universal_embedding(const SimpleGraph& g) {
    std::vector<int> identity(static_cast<std::size_t>(g.order()));
    std::iota(identity.begin(), identity.end(), 0);
    return universal_embedding(g, identity);
}

std::vector<std::vector<int>> twin_classes(const SimpleGraph& g) {
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of(static_cast<std::size_t>(g.order()), -1);
    for (int v = 0; v < g.order(); ++v) {
        if (class_of[static_cast<std::size_t>(v)] >= 0) continue;
        class_of[static_cast<std::size_t>(v)] = static_cast<int>(classes.size());
        classes.push_back({v});
        const auto rv = g.row(v);
        for (int w = v + 1; w < g.order(); ++w) {
            if (class_of[static_cast<std::size_t>(w)] < 0 && std::equal(rv.begin(), rv.end(), g.row(w).begin())) {
                class_of[static_cast<std::size_t>(w)] = class_of[static_cast<std::size_t>(v)];
                classes.back().push_back(w);
            }
        }
    }
    return classes;
}

MinimalEmbedding minimal_embedding(const SimpleGraph& g) {
    const EmbeddedGraph u = universal_embedding(g);
    const Subspace rad = isotropic_radical(u.space());
    QuotientResult q = quotient(u.space(), rad, u.vectors());

    std::vector<F2Vector> distinct;
    std::vector<int> class_of(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> reps;
    for (int v = 0; v < g.order(); ++v) {
        const auto& img = q.images[static_cast<std::size_t>(v)];
        const auto it = std::find(distinct.begin(), distinct.end(), img);
        if (it == distinct.end()) {
            class_of[static_cast<std::size_t>(v)] = static_cast<int>(distinct.size());
            distinct.push_back(img);
            reps.push_back(v);
        } else {
            class_of[static_cast<std::size_t>(v)] = static_cast<int>(it - distinct.begin());
        }
    }
    return MinimalEmbedding{EmbeddedGraph(std::move(q.space), std::move(distinct)), std::move(class_of), std::move(reps)};
}

std::vector<F2Vector> cotriangular_closure(const EmbeddedGraph& eg) {
    const int n = eg.space().dim();
    if (n > kMaxClosureDim) {
        throw DimensionError("cotriangular closure is materialised only up to dimension " +
                             std::to_string(kMaxClosureDim) + ", got " + std::to_string(n));
    }
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> points;
    for (const auto& v : eg.vectors()) {
        if (seen.insert(v.bits()).second) points.push_back(v.bits());
    }
    // Every new point is paired with all earlier ones once, when it is processed.
    for (std::size_t k = 0; k < points.size(); ++k) {
        const std::uint64_t p = points[k];
        const std::uint64_t fp = eg.space().gram_times(p);
        for (std::size_t j = 0; j < k; ++j) {
            const std::uint64_t q = points[j];
            if (std::popcount(fp & q) & 1) {
                const std::uint64_t r = p ^ q;
                if (seen.insert(r).second) points.push_back(r);
            }
        }
    }
    std::sort(points.begin(), points.end());
    std::vector<F2Vector> out;
    out.reserve(points.size());
    for (auto p : points) out.emplace_back(n, p);
    return out;
}

}  // namespace rootline
