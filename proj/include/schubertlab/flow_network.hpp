#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schubertlab/combinatorics.hpp"
#include "schubertlab/gt_polytope.hpp"

// flow networks on DAGs, the triangular network G_lambda equivalent to the GT
// polytope, vertex flows, graphical weights, and the overlay constructions
namespace schubertlab {

// vertices stored in topological order; edge (u, v) requires u < v
struct FlowNetwork {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::int64_t> netflow; // must sum to zero

    int vertexCount() const { return static_cast<int>(labels.size()); }
    int edgeCount() const { return static_cast<int>(edges.size()); }
    void validate() const;
    bool operator==(const FlowNetwork&) const = default;
};

using Flow = std::vector<std::int64_t>; // one value per edge, conservation at every vertex

bool is_flow(const FlowNetwork& net, const Flow& f);

// all nonnegative integer flows, sorted lexicographically by edge vector
std::vector<Flow> integer_flows(const FlowNetwork& net);

// G_lambda with edge metadata for the GT correspondence
struct GLambdaNetwork {
    int n = 0;
    Partition lambda;
    FlowNetwork net;

    struct EdgeInfo {
        bool vertical = false; // (v_ij, v_{i+1,j}); contributes e_{i-1} to gwt
        int i = 0;
        int j = 0;
    };
    std::vector<EdgeInfo> edgeInfo;
    std::map<std::pair<int, int>, int> vertexIndex; // (i,j) -> topo index

    int vertex(int i, int j) const;
    int edgeA(int i, int j) const; // vertical edge out of v_ij (j = n+1 on the right chain)
    int edgeB(int i, int j) const; // diagonal edge out of v_ij (j = i-1 on the left chain)
};

GLambdaNetwork build_g_lambda(const Partition& lambda);

// a_{ij} = x_{i-1,j-1} - x_{ij}, b_{ij} = x_{ij} - x_{i-1,j}; chain edges by
// conservation in topological order, all values asserted nonnegative
Flow gt_to_flow(const GLambdaNetwork& g, const TrianglePoint& x);

// x_{ij} = lambda_j + sum_{k=2..i} b_{kj}
TrianglePoint flow_to_gt(const GLambdaNetwork& g, const Flow& f);

// alternate inverse x_{ij} = lambda_{j-i+1} - sum_{k=0..i-2} a_{i-k,j-k}
TrianglePoint flow_to_gt_via_a(const GLambdaNetwork& g, const Flow& f);

// vertex flows of a single-source single-sink network: full value along each
// source-to-sink path; the all-zero-netflow degenerate case yields {0}
std::vector<Flow> flow_vertices(const FlowNetwork& net);

// gwt(f)_i = flow on the vertical edges out of row i+1; diagonal edges count 0
std::vector<std::int64_t> gwt(const GLambdaNetwork& g, const Flow& f);

// wt(flow_to_gt(f)) = gwt(f) + lambda_n * (1,...,1)
bool check_graphical_weight_shift(const GLambdaNetwork& g, const Flow& f);

// gwt image of the vertex flows of G_{1^k 0^(n-k)}, shifted by lambda_n * 1,
// equals the 0/1-vectors with coordinate sum k
bool check_hypersimplex(int k, int n);

// support-function identity behind the permutahedron decomposition
// P_lambda = sum_k (lambda_k - lambda_{k+1}) Delta_{k,n} + lambda_n Delta_{n,n}
bool check_permutahedron(const Partition& lambda, int trials, std::uint64_t seed);

// integer flows with netflow a+b equal the edgewise sumset of the a-flows and
// b-flows (netflows nonnegative except the final vertex)
bool check_flow_minkowski(const FlowNetwork& graph, const std::vector<std::int64_t>& a,
                          const std::vector<std::int64_t>& b);

// G(lambda^(1),...,lambda^(n)): the G_{lambda^(n)} graph with every summand's
// netflow added under the embedding v_ij -> v_{i,j+n-k}
GLambdaNetwork overlay(const ParFamily& fam);

// negative netflows moved to the final vertex v_{n+2,n+1}
GLambdaNetwork hat_overlay(const ParFamily& fam);

// mu_n = 0, mu_k = mu_{k+1} + sum_{j=0..k-1} (lambda^(n-j)_{k-j} - lambda^(n-j)_{k-j+1})
Partition overlay_mu(const ParFamily& fam);

struct OverlayReport {
    bool sumsetInOverlay = false;  // embedded summand flows sum into F_G
    bool overlayInHat = false;     // translated F_G flows land in F_Ghat
    bool hatIsGMu = false;         // hat network is precisely G_mu
    bool hatMatchesGtMu = false;   // F_Ghat lattice bijective with GT(mu)
    bool strictSumset = false;
    bool strictHat = false;
    std::int64_t sumsetCount = 0, overlayCount = 0, hatCount = 0, gtMuCount = 0;
    Partition mu;
    std::optional<Flow> witness; // a flow exhibiting one of the strict gaps
    bool ok() const { return sumsetInOverlay && overlayInHat && hatIsGMu && hatMatchesGtMu; }
};

OverlayReport check_overlay_inclusions(const ParFamily& fam);

} // namespace schubertlab
