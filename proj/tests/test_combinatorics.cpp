#include <doctest.h>
#include <stdexcept>

#include <set>

#include "schubertlab/combinatorics.hpp"

using namespace schubertlab;

TEST_CASE("permutation validation") {
    CHECK_THROWS_AS(Permutation({1, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
    const Permutation w({2, 5, 6, 4, 1, 3});
    CHECK(w.inversions() == 9);
    CHECK(w.inverse()(1) == 5);
    CHECK(w.descents() == std::vector<int>{3, 4});
}

TEST_CASE("rothe diagram of 256413") {
    const Diagram d = rothe_diagram(Permutation({2, 5, 6, 4, 1, 3}));
    const std::set<Box> expected{{1, 1}, {2, 1}, {2, 3}, {2, 4}, {3, 1},
                                 {3, 3}, {3, 4}, {4, 1}, {4, 3}};
    CHECK(std::set<Box>(d.boxes().begin(), d.boxes().end()) == expected);
    CHECK(d.boxCount() == Permutation({2, 5, 6, 4, 1, 3}).inversions());
    CHECK(is_column_convex(d));
}

TEST_CASE("rothe box count equals inversions") {
    for_each_permutation(4, [](const Permutation& w) {
        CHECK(rothe_diagram(w).boxCount() == w.inversions());
    });
}

TEST_CASE("column convexity matches pattern avoidance") {
    int convex = 0;
    for_each_permutation(5, [&](const Permutation& w) {
        std::vector<int> witness;
        const bool avoid = avoids_patterns(w, &witness);
        CHECK(avoid == is_column_convex(rothe_diagram(w)));
        if (!avoid) {
            // witness is a genuine occurrence of 3142 or 4132
            REQUIRE(witness.size() == 4);
            CHECK(witness[0] < witness[1]);
            CHECK(witness[1] < witness[2]);
            CHECK(witness[2] < witness[3]);
            const int a = w(witness[0]), b = w(witness[1]), c = w(witness[2]), e = w(witness[3]);
            const bool m3142 = b < e && e < a && a < c;
            const bool m4132 = b < e && e < c && c < a;
            CHECK((m3142 || m4132));
        } else {
            ++convex;
        }
    });
    CHECK(convex > 0);
}

TEST_CASE("par family of 256413") {
    // columns: 1 (rows 1-4), 3 (rows 2-4), 4 (rows 2-3); heights by end row:
    // row 4 gets (4,3), row 3 gets (2); shapes are the conjugates
    const ParFamily fam = par_family(rothe_diagram(Permutation({2, 5, 6, 4, 1, 3})));
    CHECK(fam.shape(1) == Partition({0}));
    CHECK(fam.shape(2) == Partition({0, 0}));
    CHECK(fam.shape(3) == Partition({1, 1, 0}));
    CHECK(fam.shape(4) == Partition({2, 2, 2, 1}));
    CHECK(fam.shape(5) == Partition::zero(5));
    CHECK(fam.shape(6) == Partition::zero(6));
    std::int64_t total = 0;
    for (int i = 1; i <= 6; ++i) total += fam.shape(i).sum();
    CHECK(total == 9);
}

TEST_CASE("family round trip through a canonical diagram") {
    const std::vector<ParFamily> fams = {
        ParFamily({Partition({1}), Partition({2, 1}), Partition({2, 2, 0})}),
        ParFamily({Partition({0}), Partition({0, 0}), Partition({3, 1, 1})}),
        ParFamily({Partition::zero(1), Partition::zero(2), Partition::zero(3)}),
    };
    for (const ParFamily& fam : fams) {
        const Diagram d = family_to_diagram(fam);
        CHECK(is_column_convex(d));
        CHECK(par_family(d) == fam);
    }
}

TEST_CASE("reduction drops first-row columns and shifts") {
    // a=1, b=1, c=1: lambda^(3)=(2,1,0), lambda^(2)=(1,0), lambda^(1)=(0)
    const ParFamily fam({Partition({0}), Partition({1, 0}), Partition({2, 1, 0})});
    const Diagram d = family_to_diagram(fam);
    const ReducedDiagram red = reduce_diagram(d);
    CHECK(red.mu == Partition({0, 0, 0}));
    const ParFamily tfam = par_family(red.tilde);
    CHECK(tfam.shape(1) == Partition({1}));
    CHECK(tfam.shape(2) == Partition({2, 1}));
}

TEST_CASE("reduction mu records dropped full columns") {
    // single column occupying rows 1..3 of a 3-row diagram
    const Diagram d(3, {{1, 1}, {2, 1}, {3, 1}});
    const ParFamily fam = par_family(d);
    CHECK(fam.shape(3) == Partition({1, 1, 1}));
    const ReducedDiagram red = reduce_diagram(d);
    CHECK(red.tilde.boxCount() == 0);
    CHECK(red.mu == Partition({1, 1, 1}));
}

TEST_CASE("tilde family matches the subtraction formula") {
    for_each_permutation(4, [](const Permutation& w) {
        if (!avoids_patterns(w)) return;
        const Diagram d = rothe_diagram(w);
        const ParFamily fam = par_family(d);
        const ReducedDiagram red = reduce_diagram(d);
        const ParFamily tfam = par_family(red.tilde);
        for (int i = 1; i <= d.rowCount() - 1; ++i)
            for (int j = 1; j <= i; ++j)
                CHECK(tfam.lambda(i, j) == fam.lambda(i + 1, j) - fam.lambda(i + 1, i + 1));
    });
}

TEST_CASE("grassmannian shape") {
    CHECK(grassmannian_shape(Permutation({1, 3, 2})) == Partition({1, 0}));
    CHECK(grassmannian_shape(Permutation({2, 4, 1, 3, 5})) == Partition({2, 1}));
    CHECK(grassmannian_shape(Permutation({1, 2, 3})) == Partition({0, 0, 0}));
    CHECK(!grassmannian_shape(Permutation({3, 2, 1})).has_value());
    // nonidentity grassmannian: exactly one nonzero family shape, at the descent
    const Permutation w({2, 4, 1, 3, 5});
    const ParFamily fam = par_family(rothe_diagram(w));
    for (int i = 1; i <= 5; ++i) {
        if (i == 2) CHECK(fam.shape(i) == Partition({2, 1}));
        else CHECK(fam.shape(i).isZero());
    }
}

TEST_CASE("partition helpers") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({3, 1}).scaled(2) == Partition({6, 2}));
    CHECK(add_partitions(Partition({2, 1, 0}), Partition({1, 1, 1})) == Partition({3, 2, 1}));
    CHECK(Partition({2, 1, 0}).part(5) == 0);
}
