#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "schubertlab/combinatorics.hpp"
#include "schubertlab/laurent.hpp"

// triangular coordinate arrays, affine inequality systems over them, lattice
// enumeration, and the Gelfand-Tsetlin polytope operations
namespace schubertlab {

inline int triangle_size(int n) { return n * (n + 1) / 2; }
// row-major offset of x_{ij}, 1 <= i <= j <= n
inline int triangle_offset(int n, int i, int j) {
    return (i - 1) * n - (i - 1) * (i - 2) / 2 + (j - i);
}

// entries x_{ij} stored row-major: x_11 ... x_1n, x_22 ... x_2n, ..., x_nn
struct TrianglePoint {
    int size = 0;
    std::vector<std::int64_t> entries;

    TrianglePoint() = default;
    explicit TrianglePoint(int n) : size(n), entries(triangle_size(n), 0) {}
    std::int64_t& at(int i, int j) { return entries[triangle_offset(size, i, j)]; }
    std::int64_t at(int i, int j) const { return entries[triangle_offset(size, i, j)]; }
    bool operator==(const TrianglePoint& o) const { return size == o.size && entries == o.entries; }
    bool operator<(const TrianglePoint& o) const { return entries < o.entries; }
};

TrianglePoint add_points(const TrianglePoint& a, const TrianglePoint& b);

enum class Sense { Eq, Ge };

// sum of coeff * x_{ij} + constant  (= 0 | >= 0); terms sorted by offset
struct AffineConstraint {
    Sense sense = Sense::Ge;
    std::vector<std::pair<int, std::int64_t>> terms; // (row-major offset, coeff)
    std::int64_t constant = 0;

    void addCoeff(int offset, std::int64_t c);
    std::int64_t evaluate(const TrianglePoint& p) const;
    bool satisfiedBy(const TrianglePoint& p) const;
    bool operator==(const AffineConstraint& o) const;
};

AffineConstraint make_constraint(int n, Sense sense,
                                 const std::vector<std::pair<std::pair<int, int>, std::int64_t>>& coeffs,
                                 std::int64_t constant);

struct InequalitySystem {
    int size = 0; // triangle size n
    std::vector<AffineConstraint> constraints;

    bool contains(const AffineConstraint& c) const;
    bool satisfiedBy(const TrianglePoint& p) const;
};

// lattice points in canonical (row-major lexicographic) order
struct LatticePointSet {
    int size = 0;
    std::vector<TrianglePoint> points;

    bool operator==(const LatticePointSet& o) const { return size == o.size && points == o.points; }
    bool contains(const TrianglePoint& p) const;
};

// exhaustive scan in row-major order; every coordinate must acquire finite
// lower and upper bounds from constraints supported on the prefix, otherwise
// the system is reported unbounded
LatticePointSet enumerate_lattice(const InequalitySystem& sys);

LatticePointSet sumset(const LatticePointSet& a, const LatticePointSet& b);
LatticePointSet sumset_fold(const std::vector<LatticePointSet>& sets, int size);

// GT(lambda): first row pinned to lambda, interlacing
// x_{i-1,j-1} >= x_{ij} >= x_{i-1,j}, and all entries nonnegative
InequalitySystem gt_system(const Partition& lambda);

// one triangle variable per coordinate, one monomial per lattice point
LaurentPolynomial integer_point_transform(const LatticePointSet& pts);

// x_{1j} -> x_1, x_{ij} -> x_{i-1}^{-1} x_i: exponent of x_i becomes the
// difference of consecutive row sums
LaurentPolynomial specialize(const LaurentPolynomial& transform, int n);

// wt(p)_i = (row i sum) - (row i+1 sum)
std::vector<std::int64_t> weight(const TrianglePoint& p);

// sum of x^{wt(p)} over the GT(lambda) lattice
LaurentPolynomial schur(const Partition& lambda);

// GT(lambda) lattice equals the fold of (lambda_k - lambda_{k+1}) copies of
// the unit-step lattices GT(1^k 0^(n-k)), as integer-point sumsets
bool check_gt_minkowski(const Partition& lambda);

// GT(lambda) + GT(mu) = GT(lambda + mu) at the integer-point level
bool check_gt_additivity(const Partition& lambda, const Partition& mu);

} // namespace schubertlab
