#include "rootline/f2.hpp"

#include <algorithm>
#include <bit>

namespace rootline {

namespace {

std::uint64_t low_mask(int dim) {
    return dim >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dim) - 1;
}

int parity(std::uint64_t x) { return std::popcount(x) & 1; }

void check_dim(int dim) {
    if (dim < 0 || dim > kMaxDim) {
        throw DimensionError("dimension " + std::to_string(dim) + " outside [0, 64]");
    }
}

void check_same(const QuadraticSpace& space, const F2Vector& v) {
    if (v.dim() != space.dim()) {
        throw DimensionError("vector of length " + std::to_string(v.dim()) +
                             " used with a space of dimension " + std::to_string(space.dim()));
    }
}

}  // namespace

F2Vector::F2Vector(int dim, std::uint64_t bits) : dim_(dim), bits_(bits) {
    check_dim(dim);
    if ((bits & ~low_mask(dim)) != 0) {
        throw DimensionError("bits set beyond the vector length");
    }
}

F2Vector F2Vector::unit(int dim, int i) {
    if (i < 0 || i >= dim) throw DimensionError("unit vector index out of range");
    return F2Vector(dim, std::uint64_t{1} << i);
}

void F2Vector::set(int i, bool value) {
    if (i < 0 || i >= dim_) throw DimensionError("coordinate out of range");
    const std::uint64_t bit = std::uint64_t{1} << i;
    bits_ = value ? (bits_ | bit) : (bits_ & ~bit);
}

int F2Vector::weight() const { return std::popcount(bits_); }

F2Vector& F2Vector::operator+=(const F2Vector& other) {
    if (other.dim_ != dim_) throw DimensionError("adding vectors of different lengths");
    bits_ ^= other.bits_;
    return *this;
}

std::string F2Vector::to_string() const {
    std::string s(static_cast<std::size_t>(dim_), '0');
    for (int i = 0; i < dim_; ++i) {
        if (get(i)) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

QuadraticSpace::QuadraticSpace(int dim, std::vector<std::uint64_t> gram, std::uint64_t qdiag)
    : dim_(dim), gram_(std::move(gram)), qdiag_(qdiag) {
    check_dim(dim);
    if (static_cast<int>(gram_.size()) != dim) {
        throw DimensionError("gram matrix must have one row per basis vector");
    }
    const std::uint64_t mask = low_mask(dim);
    if ((qdiag_ & ~mask) != 0) throw DimensionError("qdiag has bits beyond the dimension");
    for (int i = 0; i < dim; ++i) {
        if ((gram_[i] & ~mask) != 0) throw DimensionError("gram row has bits beyond the dimension");
        if ((gram_[i] >> i) & 1u) throw std::invalid_argument("gram matrix must have zero diagonal");
        for (int j = i + 1; j < dim; ++j) {
            if (gram_at(i, j) != gram_at(j, i)) {
                throw std::invalid_argument("gram matrix must be symmetric");
            }
        }
    }
}

std::uint64_t QuadraticSpace::gram_times(std::uint64_t w) const {
    std::uint64_t out = 0;
    while (w != 0) {
        const int j = std::countr_zero(w);
        out ^= gram_[j];
        w &= w - 1;
    }
    return out;
}

Subspace::Subspace(int ambient_dim) : ambient_dim_(ambient_dim) { check_dim(ambient_dim); }

Subspace Subspace::span(int ambient_dim, const std::vector<F2Vector>& vectors) {
    Subspace s(ambient_dim);
    for (const auto& v : vectors) s.insert(v);
    return s;
}

F2Vector Subspace::reduce(F2Vector v) const {
    if (v.dim() != ambient_dim_) throw DimensionError("vector does not live in the ambient space");
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        if (v.get(pivots_[k])) v += basis_[k];
    }
    return v;
}

bool Subspace::contains(const F2Vector& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const F2Vector& v) { return contains(v); });
}

bool Subspace::insert(F2Vector v) {
    v = reduce(v);
    if (v.is_zero()) return false;
    const int p = std::countr_zero(v.bits());
    for (auto& b : basis_) {
        if (b.get(p)) b += v;
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    basis_.insert(basis_.begin() + pos, v);
    return true;
}

int eval_f(const QuadraticSpace& space, const F2Vector& u, const F2Vector& w) {
    check_same(space, u);
    check_same(space, w);
    return parity(u.bits() & space.gram_times(w.bits()));
}

int eval_q(const QuadraticSpace& space, const F2Vector& u) {
    check_same(space, u);
    const std::uint64_t bits = u.bits();
    int q = parity(bits & space.qdiag());
    std::uint64_t rest = bits;
    while (rest != 0) {
        const int i = std::countr_zero(rest);
        rest &= rest - 1;
        q ^= parity(space.gram()[i] & rest);
    }
    return q;
}

Subspace radical_of_f(const QuadraticSpace& space) {
    const int n = space.dim();
    Subspace rows(n);
    for (int i = 0; i < n; ++i) rows.insert(F2Vector(n, space.gram()[i]));

    // Kernel of a matrix in reduced echelon form: one vector per free column.
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int p : rows.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
    Subspace kernel(n);
    for (int c = 0; c < n; ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        F2Vector x = F2Vector::unit(n, c);
        for (std::size_t k = 0; k < rows.basis().size(); ++k) {
            if (rows.basis()[k].get(c)) x.set(rows.pivots()[k], true);
        }
        kernel.insert(x);
    }
    return kernel;
}

Subspace isotropic_radical(const QuadraticSpace& space) {
    const Subspace rad = radical_of_f(space);
    // Q is additive on the f-radical, so its zero set there is a hyperplane or
    // everything.
    const auto& basis = rad.basis();
    const auto odd = std::find_if(basis.begin(), basis.end(),
                                  [&](const F2Vector& b) { return eval_q(space, b) == 1; });
    if (odd == basis.end()) return rad;
    Subspace iso(space.dim());
    for (const auto& b : basis) {
        if (&b == &*odd) continue;
        iso.insert(eval_q(space, b) == 1 ? b + *odd : b);
    }
    return iso;
}

QuotientResult quotient(const QuadraticSpace& space, const Subspace& rad,
                        const std::vector<F2Vector>& vectors) {
    if (rad.ambient_dim() != space.dim()) throw DimensionError("subspace lives in another space");
    for (const auto& r : rad.basis()) {
        if (eval_q(space, r) != 0 || space.gram_times(r.bits()) != 0) {
            throw std::invalid_argument("quotient subspace is not inside the isotropic radical");
        }
    }
    const int n = space.dim();
    std::uint64_t pivot_mask = 0;
    for (int p : rad.pivots()) pivot_mask |= std::uint64_t{1} << p;
    std::vector<int> kept;
    for (int c = 0; c < n; ++c) {
        if (((pivot_mask >> c) & 1u) == 0) kept.push_back(c);
    }
    const int m = static_cast<int>(kept.size());

    auto compress = [&](std::uint64_t bits) {
        std::uint64_t out = 0;
        for (int a = 0; a < m; ++a) {
            if ((bits >> kept[static_cast<std::size_t>(a)]) & 1u) out |= std::uint64_t{1} << a;
        }
        return out;
    };

    std::vector<std::uint64_t> gram(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a) gram[static_cast<std::size_t>(a)] = compress(space.gram()[kept[static_cast<std::size_t>(a)]]);
    QuotientResult result{QuadraticSpace(m, std::move(gram), compress(space.qdiag())), {}};
    result.images.reserve(vectors.size());
    for (const auto& v : vectors) {
        result.images.emplace_back(m, compress(rad.reduce(v).bits()));
    }
    return result;
}

int arf_invariant(const QuadraticSpace& space) {
    const int n = space.dim();
    if (n % 2 != 0) throw OddDimensionError("odd-dimensional space has no Arf invariant");
    std::vector<F2Vector> rest;
    for (int i = 0; i < n; ++i) rest.push_back(F2Vector::unit(n, i));
    int arf = 0;
    while (!rest.empty()) {
        std::size_t xi = rest.size();
        std::size_t yi = rest.size();
        for (std::size_t a = 0; a < rest.size() && xi == rest.size(); ++a) {
            for (std::size_t b = a + 1; b < rest.size(); ++b) {
                if (eval_f(space, rest[a], rest[b]) == 1) {
                    xi = a;
                    yi = b;
                    break;
                }
            }
        }
        if (xi == rest.size()) {
            throw OddDimensionError("alternating form is degenerate; no symplectic basis");
        }
        const F2Vector x = rest[xi];
        const F2Vector y = rest[yi];
        arf ^= eval_q(space, x) & eval_q(space, y);
        std::vector<F2Vector> next;
        for (std::size_t k = 0; k < rest.size(); ++k) {
            if (k == xi || k == yi) continue;
            F2Vector z = rest[k];
            const int fzx = eval_f(space, z, x);
            const int fzy = eval_f(space, z, y);
            if (fzy) z += x;
            if (fzx) z += y;
            next.push_back(z);
        }
        rest = std::move(next);
    }
    return arf;
}

SpaceSummary summarize(const QuadraticSpace& space) {
    SpaceSummary s;
    s.dim = space.dim();
    s.f_radical_dim = radical_of_f(space).dim();
    const Subspace iso = isotropic_radical(space);
    s.isotropic_radical_dim = iso.dim();
    const QuotientResult q = quotient(space, iso, {});
    if (radical_of_f(q.space).dim() == 0) {
        s.type = arf_invariant(q.space) == 1 ? FormType::Minus : FormType::Plus;
    }
    return s;
}

SpaceClass classify_type(const QuadraticSpace& space) {
    const SpaceSummary s = summarize(space);
    if (!s.type) {
        throw OddDimensionError("nondegenerate part has odd dimension " +
                                std::to_string(s.dim - s.isotropic_radical_dim));
    }
    return SpaceClass{s.isotropic_radical_dim, *s.type};
}

std::uint64_t anisotropic_count(const QuadraticSpace& space) {
    const int n = space.dim();
    if (n > kMaxEnumerationDim) {
        throw DimensionError("anisotropic_count enumerates 2^dim vectors; dim " + std::to_string(n) +
                             " exceeds " + std::to_string(kMaxEnumerationDim));
    }
    std::uint64_t v = 0;
    int q = 0;
    std::uint64_t count = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < total; ++k) {
        const int i = std::countr_zero(k);
        q ^= static_cast<int>((space.qdiag() >> i) & 1u) ^ parity(space.gram()[i] & v);
        v ^= std::uint64_t{1} << i;
        count += static_cast<std::uint64_t>(q);
    }
    return count;
}

std::string to_string(FormType type) { return type == FormType::Plus ? "plus" : "minus"; }

}  // namespace rootline
