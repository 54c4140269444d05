#ifndef ROOTLINE_F2_HPP
#define ROOTLINE_F2_HPP

// Dense GF(2) linear algebra over spaces of dimension at most 64.
//
// Vectors are packed into a single machine word; bit i is the coordinate on
// the i-th basis vector. A QuadraticSpace carries the Gram matrix of the
// alternating form f and the values of the quadratic form Q on the basis, and
// Q is extended to arbitrary vectors through the polarization identity
// Q(u + w) = Q(u) + Q(w) + f(u, w).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rootline {

inline constexpr int kMaxDim = 64;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a nondegenerate quadratic space has odd dimension and so has no
/// Plus/Minus type.
class OddDimensionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(int dim, std::uint64_t bits = 0);

    static F2Vector unit(int dim, int i);

    int dim() const { return dim_; }
    std::uint64_t bits() const { return bits_; }
    bool get(int i) const { return (bits_ >> i) & 1u; }
    void set(int i, bool value);
    bool is_zero() const { return bits_ == 0; }
    int weight() const;

    F2Vector& operator+=(const F2Vector& other);
    friend F2Vector operator+(F2Vector a, const F2Vector& b) { return a += b; }
    friend bool operator==(const F2Vector&, const F2Vector&) = default;
    friend auto operator<=>(const F2Vector&, const F2Vector&) = default;

    /// Coordinates as a 0/1 string, coordinate 0 first.
    std::string to_string() const;

private:
    int dim_ = 0;
    std::uint64_t bits_ = 0;
};

class QuadraticSpace {
public:
    QuadraticSpace() = default;
    /// gram rows are bitmasks; gram must be symmetric with zero diagonal.
    QuadraticSpace(int dim, std::vector<std::uint64_t> gram, std::uint64_t qdiag);

    int dim() const { return dim_; }
    const std::vector<std::uint64_t>& gram() const { return gram_; }
    std::uint64_t qdiag() const { return qdiag_; }
    bool gram_at(int i, int j) const { return (gram_[i] >> j) & 1u; }

    /// Image of w under the Gram matrix, as a bitmask.
    std::uint64_t gram_times(std::uint64_t w) const;

    friend bool operator==(const QuadraticSpace&, const QuadraticSpace&) = default;

private:
    int dim_ = 0;
    std::vector<std::uint64_t> gram_;
    std::uint64_t qdiag_ = 0;
};

/// A linear subspace held in reduced row-echelon form.
class Subspace {
public:
    explicit Subspace(int ambient_dim);
    /// Span of the given vectors (they need not be independent).
    static Subspace span(int ambient_dim, const std::vector<F2Vector>& vectors);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<F2Vector>& basis() const { return basis_; }
    /// Pivot coordinate of each basis vector (its lowest set bit).
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const F2Vector& v) const;
    bool contains(const Subspace& other) const;
    /// Reduce v modulo the subspace: the result has zeros on every pivot.
    F2Vector reduce(F2Vector v) const;
    /// Adds v; returns false when v was already in the span.
    bool insert(F2Vector v);

private:
    int ambient_dim_;
    std::vector<F2Vector> basis_;
    std::vector<int> pivots_;
};

enum class FormType { Plus, Minus };

struct SpaceClass {
    int isotropic_radical_dim = 0;
    FormType type = FormType::Plus;
    bool degenerate() const { return isotropic_radical_dim > 0; }
};

/// Non-throwing summary of a space; `type` is empty when the nondegenerate
/// quotient is odd-dimensional.
struct SpaceSummary {
    int dim = 0;
    int f_radical_dim = 0;
    int isotropic_radical_dim = 0;
    std::optional<FormType> type;
};

struct QuotientResult {
    QuadraticSpace space;
    std::vector<F2Vector> images;
};

int eval_f(const QuadraticSpace& space, const F2Vector& u, const F2Vector& w);
int eval_q(const QuadraticSpace& space, const F2Vector& u);

Subspace radical_of_f(const QuadraticSpace& space);
Subspace isotropic_radical(const QuadraticSpace& space);

/// Quotient by a subspace of the isotropic radical. The complement used for
/// coordinates is spanned by the unit vectors on the non-pivot coordinates of
/// `rad`, so the section is "reduce modulo rad, then drop pivot coordinates".
QuotientResult quotient(const QuadraticSpace& space, const Subspace& rad,
                        const std::vector<F2Vector>& vectors);

/// Arf-invariant classification; throws OddDimensionError when the quotient by
/// the isotropic radical is odd-dimensional.
SpaceClass classify_type(const QuadraticSpace& space);
SpaceSummary summarize(const QuadraticSpace& space);

/// Arf invariant of a nondegenerate even-dimensional space via greedy
/// symplectic pairing.
int arf_invariant(const QuadraticSpace& space);

inline constexpr int kMaxEnumerationDim = 24;

/// Number of vectors with Q(v) = 1, by Gray-code enumeration.
std::uint64_t anisotropic_count(const QuadraticSpace& space);

std::string to_string(FormType type);

}  // namespace rootline

#endif  // ROOTLINE_F2_HPP
