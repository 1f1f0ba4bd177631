#include <doctest.h>
#include <algorithm>
#include <stdexcept>

#include <set>

#include "schubertlab/minkowski.hpp"
#include "schubertlab/schubert.hpp"

using namespace schubertlab;

namespace {

// the three-row family with lambda^(3) = (a+b,a,0), lambda^(2) = (c,0)
ParFamily three_row_family(std::int64_t a, std::int64_t b, std::int64_t c) {
    return ParFamily({Partition({0}), Partition({c, 0}), Partition({a + b, a, 0})});
}

// (*) for a weakly increasing index sequence, duplicate coordinates merged
AffineConstraint weak_constraint(const ParFamily& fam, const std::vector<int>& is,
                                 const std::vector<int>& js) {
    const int n = fam.n();
    const int k = static_cast<int>(is.size());
    std::vector<std::pair<std::pair<int, int>, std::int64_t>> coeffs;
    for (int s = 1; s <= k; ++s) coeffs.push_back({{js[s - 1] - is[s - 1], js[s - 1]}, 1});
    for (int s = 1; s <= k - 1; ++s) coeffs.push_back({{js[s] - is[s - 1], js[s]}, -1});
    std::int64_t rhs = 0;
    for (int s = 0; s <= is[k - 1]; ++s) rhs += fam.lambda(n - s, js[0] - s);
    return make_constraint(n, Sense::Ge, coeffs, -rhs);
}

}  // namespace

TEST_CASE("zigzag sequence counts and ordering") {
    CHECK(zigzag_sequences(1).size() == 1);
    CHECK(zigzag_sequences(2).size() == 3);
    CHECK(zigzag_sequences(3).size() == 7);
    CHECK(zigzag_sequences(4).size() == 15);
    for (const ZigzagSequence& z : zigzag_sequences(4)) {
        REQUIRE(z.k() >= 1);
        REQUIRE(z.is.size() == z.js.size());
        for (int s = 1; s < z.k(); ++s) {
            CHECK(z.is[s] < z.is[s - 1]);
            CHECK(z.js[s] > z.js[s - 1]);
        }
        CHECK(z.is.front() < z.js.front());
        CHECK(z.is.back() >= 0);
        CHECK(z.js.back() <= 4);
    }
}

TEST_CASE("three row system lists the displayed constraints") {
    const std::int64_t a = 2, b = 3, c = 1;
    const InequalitySystem sys = q_system(three_row_family(a, b, c));
    CHECK(sys.constraints.size() == 10);
    // interlacing
    CHECK(sys.contains(make_constraint(3, Sense::Ge, {{{1, 1}, 1}, {{2, 2}, -1}}, 0)));
    CHECK(sys.contains(make_constraint(3, Sense::Ge, {{{1, 2}, 1}, {{2, 3}, -1}}, 0)));
    CHECK(sys.contains(make_constraint(3, Sense::Ge, {{{2, 2}, 1}, {{3, 3}, -1}}, 0)));
    // first-row equalities
    CHECK(sys.contains(make_constraint(3, Sense::Eq, {{{1, 1}, 1}}, -(a + b))));
    CHECK(sys.contains(make_constraint(3, Sense::Eq, {{{1, 2}, 1}}, -(c + a))));
    CHECK(sys.contains(make_constraint(3, Sense::Eq, {{{1, 3}, 1}}, 0)));
    // lower bounds
    CHECK(sys.contains(make_constraint(3, Sense::Ge, {{{2, 2}, 1}}, -a)));
    CHECK(sys.contains(make_constraint(3, Sense::Ge, {{{2, 3}, 1}}, 0)));
    CHECK(sys.contains(make_constraint(3, Sense::Ge, {{{3, 3}, 1}}, 0)));
    // the single length-two zigzag
    CHECK(sys.contains(
        make_constraint(3, Sense::Ge, {{{1, 2}, 1}, {{2, 3}, -1}, {{3, 3}, 1}}, -a)));
}

TEST_CASE("embedding right-aligns the small triangle") {
    TrianglePoint y(2);
    y.at(1, 1) = 5;
    y.at(1, 2) = 3;
    y.at(2, 2) = 4;
    const TrianglePoint x = embed(2, 3, y);
    CHECK(x.at(1, 2) == 5);
    CHECK(x.at(1, 3) == 3);
    CHECK(x.at(2, 3) == 4);
    CHECK(x.at(1, 1) == 0);
    CHECK(x.at(2, 2) == 0);
    CHECK(x.at(3, 3) == 0);
    CHECK_THROWS_AS(embed(3, 2, TrianglePoint(3)), std::invalid_argument);
}

TEST_CASE("system lattice equals the sumset of embedded gt lattices") {
    const std::vector<ParFamily> fams = {
        three_row_family(1, 1, 1),
        ParFamily({Partition({1}), Partition({2, 1}), Partition({1, 0, 0})}),
        ParFamily({Partition({0}), Partition({0, 0}), Partition({2, 1, 0})}),
    };
    for (const ParFamily& fam : fams) {
        const int n = fam.n();
        std::vector<LatticePointSet> embedded;
        for (int k = 1; k <= n; ++k) {
            const LatticePointSet small = enumerate_lattice(gt_system(fam.shape(k)));
            LatticePointSet big{n, {}};
            for (const TrianglePoint& y : small.points) big.points.push_back(embed(k, n, y));
            std::sort(big.points.begin(), big.points.end());
            embedded.push_back(big);
        }
        CHECK(sumset_fold(embedded, n) == enumerate_lattice(q_system(fam)));
    }
}

TEST_CASE("grassmannian system is an embedded gt polytope") {
    const std::vector<Permutation> ws = {Permutation({1, 3, 2}), Permutation({2, 4, 1, 3, 5}),
                                         Permutation({1, 4, 2, 3})};
    for (const Permutation& w : ws) {
        const int n = w.size();
        const auto shape = grassmannian_shape(w);
        REQUIRE(shape.has_value());
        const int r = shape->size();
        const LatticePointSet small = enumerate_lattice(gt_system(*shape));
        std::set<TrianglePoint> expect;
        for (const TrianglePoint& y : small.points) expect.insert(embed(r, n, y));
        const LatticePointSet got = enumerate_lattice(q_system(par_family(rothe_diagram(w))));
        CHECK(got.points == std::vector<TrianglePoint>(expect.begin(), expect.end()));
    }
}

TEST_CASE("weak index sequences give redundant constraints") {
    const ParFamily fam = three_row_family(2, 1, 3);
    const LatticePointSet pts = enumerate_lattice(q_system(fam));
    REQUIRE(!pts.points.empty());
    for (int i2 = 0; i2 <= 3; ++i2)
        for (int i1 = i2; i1 <= 3; ++i1)
            for (int j1 = i1 + 1; j1 <= 3; ++j1)
                for (int j2 = j1; j2 <= 3; ++j2) {
                    if (i1 != i2 && j1 != j2) continue; // only the weak ones
                    const AffineConstraint c = weak_constraint(fam, {i1, i2}, {j1, j2});
                    for (const TrianglePoint& p : pts.points) CHECK(c.satisfiedBy(p));
                }
}

TEST_CASE("slices of the three row example") {
    const std::int64_t a = 2, b = 3, c = 1;
    const Diagram d = family_to_diagram(three_row_family(a, b, c));

    const LatticePointSet seg = enumerate_lattice(slice_system(d, 3));
    CHECK(static_cast<std::int64_t>(seg.points.size()) == b + 1);
    for (const TrianglePoint& p : seg.points) {
        CHECK(p.at(1, 1) == a + b);
        CHECK(p.at(1, 2) == a + c);
        CHECK(p.at(1, 3) == 0);
        CHECK(p.at(2, 3) == 0);
        CHECK(p.at(3, 3) == 0);
        CHECK(p.at(2, 2) >= a);
        CHECK(p.at(2, 2) <= a + b);
    }

    std::int64_t trapezoid = 0;
    for (std::int64_t v = a; v <= a + b; ++v) trapezoid += v + 1;
    const LatticePointSet trap = enumerate_lattice(slice_system(d, 2));
    CHECK(static_cast<std::int64_t>(trap.points.size()) == trapezoid);

    // P^(1) keeps the full system: x13 = 0 is already an equality
    const LatticePointSet full = enumerate_lattice(q_system(three_row_family(a, b, c)));
    CHECK(enumerate_lattice(slice_system(d, 1)) == full);
}

TEST_CASE("fibers of the three row slices are the stated boxes") {
    const std::int64_t a = 2, b = 3, c = 1;
    const Diagram d = family_to_diagram(three_row_family(a, b, c));
    const InequalitySystem sys2 = slice_system(d, 2);

    TrianglePoint fixed(3);
    fixed.at(1, 1) = a + b;
    fixed.at(1, 2) = a + c;

    // row 3 over fixed x22: 0 <= x33 <= x22
    for (std::int64_t v = a; v <= a + b; ++v) {
        fixed.at(2, 2) = v;
        const Parallelepiped box = fiber_box(sys2, 3, fixed);
        REQUIRE(box.bounds.size() == 1);
        CHECK(box.bounds[0] == std::pair<std::int64_t, std::int64_t>{0, v});
    }

    // row 2 of the m=2 slice over fixed x33: max(a, x33) <= x22 <= a+b, x23 = 0
    fixed.at(2, 2) = 0;
    for (std::int64_t v = 0; v <= a + b; ++v) {
        fixed.at(3, 3) = v;
        const Parallelepiped box = fiber_box(sys2, 2, fixed);
        REQUIRE(box.bounds.size() == 2);
        CHECK(box.bounds[0] == std::pair<std::int64_t, std::int64_t>{std::max(a, v), a + b});
        CHECK(box.bounds[1] == std::pair<std::int64_t, std::int64_t>{0, 0});
    }

    // row 2 of the full system over fixed x33: x23 runs up to c + min(a, x33)
    const InequalitySystem sys1 = q_system(three_row_family(a, b, c));
    for (std::int64_t v = 0; v <= a + b; ++v) {
        fixed.at(3, 3) = v;
        const Parallelepiped box = fiber_box(sys1, 2, fixed);
        REQUIRE(box.bounds.size() == 2);
        CHECK(box.bounds[0] == std::pair<std::int64_t, std::int64_t>{std::max(a, v), a + b});
        CHECK(box.bounds[1] ==
              std::pair<std::int64_t, std::int64_t>{0, c + std::min(a, v)});
    }
}

TEST_CASE("slice rejects diagrams with first-row boxes") {
    const Diagram d = rothe_diagram(Permutation({3, 2, 1}));
    CHECK_THROWS_AS(slice_system(d, 1), std::invalid_argument);
}

TEST_CASE("fiber rejects coupled row coordinates") {
    InequalitySystem sys{2, {}};
    sys.constraints.push_back(
        make_constraint(2, Sense::Ge, {{{1, 1}, 1}, {{1, 2}, 1}}, 0));
    CHECK_THROWS_AS(fiber_box(sys, 1, TrianglePoint(2)), std::invalid_argument);
}

TEST_CASE("fiber reports an empty box when the fixed part fails") {
    InequalitySystem sys{2, {}};
    sys.constraints.push_back(make_constraint(2, Sense::Ge, {{{2, 2}, 1}}, -5));
    sys.constraints.push_back(make_constraint(2, Sense::Ge, {{{2, 2}, -1}}, 6));
    sys.constraints.push_back(make_constraint(2, Sense::Ge, {{{1, 1}, 1}}, 0));
    sys.constraints.push_back(make_constraint(2, Sense::Ge, {{{1, 1}, -1}}, 1));
    sys.constraints.push_back(make_constraint(2, Sense::Ge, {{{1, 2}, 1}}, 0));
    sys.constraints.push_back(make_constraint(2, Sense::Ge, {{{1, 2}, -1}}, 1));
    TrianglePoint fixed(2);
    fixed.at(2, 2) = 4; // violates x22 >= 5
    CHECK(fiber_box(sys, 1, fixed).empty());
    fixed.at(2, 2) = 5;
    CHECK(!fiber_box(sys, 1, fixed).empty());
}

TEST_CASE("theorem verification end to end on small cases") {
    for (const auto& word : {std::vector<int>{1, 2, 3}, std::vector<int>{3, 2, 1},
                             std::vector<int>{2, 1, 4, 3}, std::vector<int>{1, 4, 3, 2},
                             std::vector<int>{2, 4, 1, 3, 5}}) {
        const Theorem1Report rep = verify_theorem1(Permutation(word));
        CHECK(rep.columnConvex);
        CHECK(rep.equalSchubert);
        CHECK(rep.equalCharacter);
        CHECK(rep.ok());
        CHECK(rep.latticeCount == rep.schubertPoly.coefficientSum());
    }
}

TEST_CASE("theorem verification flags pattern containment") {
    const Theorem1Report rep = verify_theorem1(Permutation({3, 1, 4, 2}));
    CHECK(!rep.columnConvex);
    CHECK(!rep.ok());
    REQUIRE(rep.patternWitness.size() == 4);
    CHECK(rep.latticeCount == 0);
}
