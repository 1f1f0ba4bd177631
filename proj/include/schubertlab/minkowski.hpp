#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "schubertlab/combinatorics.hpp"
#include "schubertlab/gt_polytope.hpp"
#include "schubertlab/laurent.hpp"

// inequality description of the Minkowski sum of embedded GT polytopes, its
// slice polytopes, parallelepiped fibers, and the end-to-end verification of
// the Schubert-polynomial projection
namespace schubertlab {

// 0 <= i_k < ... < i_1 < j_1 < ... < j_k <= n
struct ZigzagSequence {
    std::vector<int> is; // i_1 > i_2 > ... > i_k
    std::vector<int> js; // j_1 < j_2 < ... < j_k
    int k() const { return static_cast<int>(is.size()); }
};

// all interleaved sequences for the given n, no redundancy filtering
std::vector<ZigzagSequence> zigzag_sequences(int n);

// y_{ij} of a size-k triangle into the right-aligned sub-triangle of size n:
// y_{ij} -> x_{i, j+n-k}
TrianglePoint embed(int k, int n, const TrianglePoint& y);

// inequality description of P_D = sum of embedded GT(lambda^(k)):
// x_{i-1,j-1} >= x_{ij} plus one constraint per zigzag sequence, an equality
// exactly when k = 1 and j_1 = i_1 + 1
InequalitySystem q_system(const ParFamily& fam);

// P_D^(m): the q_system constraints not involving x_{in} for i <= m, plus the
// equalities x_{1n} = ... = x_{mn} = 0; requires no first-row boxes
InequalitySystem slice_system(const Diagram& d, int m);

// integer box fiber of a row-k projection: bounds for x_{kj}, j = k..n
struct Parallelepiped {
    int startRow = 0; // k
    int size = 0;     // n
    std::vector<std::pair<std::int64_t, std::int64_t>> bounds; // [mu_j, nu_j]
    bool empty() const;
};

// fixed carries all coordinates outside row k (row-k entries ignored); throws
// if some constraint couples two row-k coordinates (not a parapolytope)
Parallelepiped fiber_box(const InequalitySystem& sys, int k, const TrianglePoint& fixed);

struct Theorem1Report {
    std::vector<int> w;
    bool columnConvex = false;
    std::vector<int> patternWitness; // positions, when not column-convex
    std::int64_t latticeCount = 0;
    bool equalSchubert = false;
    bool equalCharacter = false;
    LaurentPolynomial projected{0};
    LaurentPolynomial schubertPoly{0};
    LaurentPolynomial characterPoly{0};
    std::int64_t millis = 0;
    bool ok() const { return columnConvex && equalSchubert && equalCharacter; }
};

// specialize(transform(lattice(q_system(Par_D(w))))) against schubert(w) and
// flagged_character(D(w)), both computed independently
Theorem1Report verify_theorem1(const Permutation& w);

} // namespace schubertlab
