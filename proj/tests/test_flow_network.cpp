#include <doctest.h>
#include <stdexcept>

#include <set>

#include "schubertlab/flow_network.hpp"

using namespace schubertlab;

namespace {

std::int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

Partition unit_partition(int k, int n) {
    std::vector<std::int64_t> parts(n, 0);
    for (int t = 0; t < k; ++t) parts[t] = 1;
    return Partition(parts);
}

}  // namespace

TEST_CASE("two row network structure") {
    const GLambdaNetwork g = build_g_lambda(Partition({3, 1}));
    REQUIRE(g.net.vertexCount() == 4);
    CHECK(g.net.labels ==
          std::vector<std::string>{"v(2,2)", "v(3,2)", "v(3,3)", "v(4,3)"});
    CHECK(g.net.netflow == std::vector<std::int64_t>{2, 0, 0, -2});
    REQUIRE(g.net.edgeCount() == 4);
    const std::set<std::pair<int, int>> edges(g.net.edges.begin(), g.net.edges.end());
    const std::set<std::pair<int, int>> expect{
        {g.vertex(2, 2), g.vertex(3, 2)},
        {g.vertex(2, 2), g.vertex(3, 3)},
        {g.vertex(3, 2), g.vertex(4, 3)},
        {g.vertex(3, 3), g.vertex(4, 3)}};
    CHECK(edges == expect);
    CHECK(g.edgeInfo[g.edgeA(2, 2)].vertical);
    CHECK(!g.edgeInfo[g.edgeB(2, 2)].vertical);
    CHECK(integer_flows(g.net).size() == 3);
}

TEST_CASE("degenerate single row network") {
    const GLambdaNetwork g = build_g_lambda(Partition({3}));
    CHECK(g.net.vertexCount() == 1);
    CHECK(g.net.edgeCount() == 0);
    const auto flows = integer_flows(g.net);
    REQUIRE(flows.size() == 1);
    const TrianglePoint x = flow_to_gt(g, flows[0]);
    CHECK(x.at(1, 1) == 3);
    CHECK(gt_to_flow(g, x) == flows[0]);
}

TEST_CASE("network validation") {
    FlowNetwork bad;
    bad.labels = {"a", "b"};
    bad.netflow = {1, 1};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.netflow = {1, -1};
    bad.edges = {{1, 0}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.edges = {{0, 1}};
    CHECK_NOTHROW(bad.validate());
    CHECK(is_flow(bad, {1}));
    CHECK(!is_flow(bad, {2}));
    CHECK(!is_flow(bad, {-1}));
}

TEST_CASE("flow counts match gt lattice counts") {
    const std::vector<Partition> shapes = {
        Partition({1, 0}),    Partition({3, 1}),       Partition({2, 1, 0}),
        Partition({2, 2, 1}), Partition({3, 1, 0}),    Partition({1, 1, 1, 0}),
        Partition({2, 1, 1, 0}),
    };
    for (const Partition& lambda : shapes) {
        const GLambdaNetwork g = build_g_lambda(lambda);
        CHECK(integer_flows(g.net).size() ==
              enumerate_lattice(gt_system(lambda)).points.size());
    }
}

TEST_CASE("flows and gt points are in bijection") {
    const std::vector<Partition> shapes = {Partition({2, 0}), Partition({2, 1, 0}),
                                           Partition({3, 1, 1}), Partition({1, 1, 0, 0})};
    for (const Partition& lambda : shapes) {
        const GLambdaNetwork g = build_g_lambda(lambda);
        const LatticePointSet pts = enumerate_lattice(gt_system(lambda));
        std::set<Flow> fromPoints;
        for (const TrianglePoint& x : pts.points) {
            const Flow f = gt_to_flow(g, x);
            CHECK(is_flow(g.net, f));
            CHECK(flow_to_gt(g, f) == x);
            CHECK(flow_to_gt_via_a(g, f) == x);
            fromPoints.insert(f);
        }
        const auto flows = integer_flows(g.net);
        CHECK(fromPoints == std::set<Flow>(flows.begin(), flows.end()));
    }
}

TEST_CASE("vertex flows are source-sink paths counted by binomials") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            const GLambdaNetwork g = build_g_lambda(unit_partition(k, n));
            const auto verts = flow_vertices(g.net);
            CHECK(static_cast<std::int64_t>(verts.size()) == binom(n, k));
            for (const Flow& f : verts) CHECK(is_flow(g.net, f));
        }
    FlowNetwork twoSources;
    twoSources.labels = {"a", "b", "c"};
    twoSources.netflow = {1, 1, -2};
    twoSources.edges = {{0, 2}, {1, 2}};
    CHECK_THROWS_AS(flow_vertices(twoSources), std::invalid_argument);
}

TEST_CASE("graphical weight of a small flow") {
    const GLambdaNetwork g = build_g_lambda(Partition({2, 1}));
    TrianglePoint x(2);
    x.at(1, 1) = 2;
    x.at(1, 2) = 1;
    x.at(2, 2) = 1;
    const Flow f = gt_to_flow(g, x);
    CHECK(gwt(g, f) == std::vector<std::int64_t>{1, 0});
    CHECK(weight(x) == std::vector<std::int64_t>{2, 1});
    CHECK(check_graphical_weight_shift(g, f));
}

TEST_CASE("weight shift holds across whole flow polytopes") {
    const std::vector<Partition> shapes = {Partition({1, 1}), Partition({2, 1}),
                                           Partition({3, 1, 0}), Partition({2, 2, 1})};
    for (const Partition& lambda : shapes) {
        const GLambdaNetwork g = build_g_lambda(lambda);
        for (const Flow& f : integer_flows(g.net)) CHECK(check_graphical_weight_shift(g, f));
    }
}

TEST_CASE("hypersimplex vertices from unit partitions") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) CHECK(check_hypersimplex(k, n));
}

TEST_CASE("permutahedron support functions") {
    CHECK(check_permutahedron(Partition({3, 1, 0}), 25, 42));
    CHECK(check_permutahedron(Partition({4, 2, 1, 0}), 25, 43));
    CHECK(check_permutahedron(Partition({2, 2, 1}), 25, 44));
}

TEST_CASE("flow minkowski sums on the triangular networks") {
    const FlowNetwork graph = build_g_lambda(Partition({2, 1, 0})).net;
    const auto a = build_g_lambda(Partition({2, 1, 0})).net.netflow;
    const auto b = build_g_lambda(Partition({1, 1, 0})).net.netflow;
    const auto c = build_g_lambda(Partition({1, 0, 0})).net.netflow;
    CHECK(check_flow_minkowski(graph, a, b));
    CHECK(check_flow_minkowski(graph, b, c));
}

TEST_CASE("flow minkowski sums on a custom dag") {
    FlowNetwork net;
    net.labels = {"s", "m1", "m2", "t"};
    net.edges = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
    net.netflow = {2, 0, 0, -2};
    const std::vector<std::int64_t> a{2, 0, 0, -2};
    const std::vector<std::int64_t> b{3, 0, 0, -3};
    CHECK(check_flow_minkowski(net, a, b));
}

TEST_CASE("overlay accumulates embedded netflows") {
    const std::int64_t a = 2, b = 1, c = 3;
    const ParFamily fam({Partition({0}), Partition({c, 0}), Partition({a + b, a, 0})});
    const GLambdaNetwork ov = overlay(fam);
    CHECK(ov.net.netflow[ov.vertex(2, 2)] == b);
    CHECK(ov.net.netflow[ov.vertex(2, 3)] == c + a);
    CHECK(ov.net.netflow[ov.vertex(4, 4)] == -c);
    CHECK(ov.net.netflow[ov.vertex(5, 4)] == -(a + b));
    CHECK(overlay_mu(fam) == Partition({a + b + c, a + c, 0}));

    const GLambdaNetwork hat = hat_overlay(fam);
    CHECK(hat.net.netflow[hat.vertex(4, 4)] == 0);
    CHECK(hat.net.netflow[hat.vertex(5, 4)] == -(a + b + c));
    CHECK(hat.net == build_g_lambda(Partition({a + b + c, a + c, 0})).net);
}

TEST_CASE("overlay inclusion chain on small families") {
    const std::vector<ParFamily> fams = {
        ParFamily({Partition({0}), Partition({1, 0}), Partition({1, 1, 0})}),
        ParFamily({Partition({0}), Partition({2, 0}), Partition({1, 0, 0})}),
        ParFamily({Partition({1}), Partition({1, 1}), Partition({0, 0, 0})}),
        ParFamily({Partition({0}), Partition({0, 0}), Partition({2, 1, 0})}),
    };
    for (const ParFamily& fam : fams) {
        const OverlayReport rep = check_overlay_inclusions(fam);
        CHECK(rep.sumsetInOverlay);
        CHECK(rep.overlayInHat);
        CHECK(rep.hatIsGMu);
        CHECK(rep.hatMatchesGtMu);
        CHECK(rep.ok());
        CHECK(rep.sumsetCount <= rep.overlayCount);
        CHECK(rep.overlayCount <= rep.hatCount);
        CHECK(rep.hatCount == rep.gtMuCount);
        if (rep.strictSumset || rep.strictHat) CHECK(rep.witness.has_value());
    }
}
