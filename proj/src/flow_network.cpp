#include "schubertlab/flow_network.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

#include "schubertlab/checked_arith.hpp"

namespace schubertlab {

void FlowNetwork::validate() const {
    if (netflow.size() != labels.size())
        throw std::invalid_argument("network: netflow length mismatch");
    std::int64_t total = 0;
    for (auto v : netflow) total = checked_add(total, v);
    if (total != 0) throw std::invalid_argument("network: netflow does not sum to zero");
    for (const auto& [u, v] : edges)
        if (u < 0 || v < 0 || u >= vertexCount() || v >= vertexCount() || u >= v)
            throw std::invalid_argument("network: edges must run forward in vertex order");
}

bool is_flow(const FlowNetwork& net, const Flow& f) {
    if (static_cast<int>(f.size()) != net.edgeCount()) return false;
    for (auto v : f)
        if (v < 0) return false;
    std::vector<std::int64_t> balance(net.netflow); // inflow + netflow - outflow
    for (int e = 0; e < net.edgeCount(); ++e) {
        balance[net.edges[e].second] = checked_add(balance[net.edges[e].second], f[e]);
        balance[net.edges[e].first] = checked_sub(balance[net.edges[e].first], f[e]);
    }
    return std::all_of(balance.begin(), balance.end(), [](std::int64_t b) { return b == 0; });
}

std::vector<Flow> integer_flows(const FlowNetwork& net) {
    net.validate();
    const int V = net.vertexCount();
    std::vector<std::vector<int>> out(V);
    for (int e = 0; e < net.edgeCount(); ++e) out[net.edges[e].first].push_back(e);

    std::vector<Flow> result;
    Flow f(net.edgeCount(), 0);
    std::vector<std::int64_t> inflow(V, 0);

    // distribute supply over the out-edges of vertex v, then advance
    std::function<void(int)> visit = [&](int v) {
        if (v == V) {
            result.push_back(f);
            return;
        }
        const std::int64_t supply = checked_add(inflow[v], net.netflow[v]);
        if (supply < 0) return;
        if (out[v].empty()) {
            if (supply == 0) visit(v + 1);
            return;
        }
        std::function<void(std::size_t, std::int64_t)> split = [&](std::size_t t, std::int64_t left) {
            if (t + 1 == out[v].size()) {
                const int e = out[v][t];
                f[e] = left;
                inflow[net.edges[e].second] = checked_add(inflow[net.edges[e].second], left);
                visit(v + 1);
                inflow[net.edges[e].second] -= left;
                f[e] = 0;
                return;
            }
            for (std::int64_t val = 0; val <= left; ++val) {
                const int e = out[v][t];
                f[e] = val;
                inflow[net.edges[e].second] += val;
                split(t + 1, left - val);
                inflow[net.edges[e].second] -= val;
                f[e] = 0;
            }
        };
        split(0, supply);
    };
    visit(0);
    std::sort(result.begin(), result.end());
    return result;
}

int GLambdaNetwork::vertex(int i, int j) const {
    auto it = vertexIndex.find({i, j});
    if (it == vertexIndex.end()) throw std::invalid_argument("network: no such vertex");
    return it->second;
}

namespace {

std::string vertex_label(int i, int j) {
    return "v(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

} // namespace

int GLambdaNetwork::edgeA(int i, int j) const {
    const int u = vertex(i, j);
    for (int e = 0; e < net.edgeCount(); ++e)
        if (net.edges[e].first == u && edgeInfo[e].vertical) return e;
    throw std::invalid_argument("network: no vertical edge out of " + vertex_label(i, j));
}

int GLambdaNetwork::edgeB(int i, int j) const {
    const int u = vertex(i, j);
    for (int e = 0; e < net.edgeCount(); ++e)
        if (net.edges[e].first == u && !edgeInfo[e].vertical) return e;
    throw std::invalid_argument("network: no diagonal edge out of " + vertex_label(i, j));
}

GLambdaNetwork build_g_lambda(const Partition& lambda) {
    const int n = lambda.size();
    if (n == 0) throw std::invalid_argument("network: empty partition");
    GLambdaNetwork g;
    g.n = n;
    g.lambda = lambda;

    auto addVertex = [&](int i, int j, std::int64_t flow) {
        g.vertexIndex[{i, j}] = g.net.vertexCount();
        g.net.labels.push_back(vertex_label(i, j));
        g.net.netflow.push_back(flow);
    };

    if (n == 1) { // degenerate: single vertex, flow polytope {0}
        addVertex(2, 2, 0);
        return g;
    }

    for (int j = 2; j <= n; ++j) addVertex(2, j, checked_sub(lambda.part(j - 1), lambda.part(j)));
    for (int i = 3; i <= n + 2; ++i) {
        addVertex(i, i - 1, i == n + 2 ? checked_sub(lambda.part(n), lambda.part(1)) : 0);
        for (int j = i; j <= n; ++j) addVertex(i, j, 0);
        if (i <= n + 1) addVertex(i, n + 1, 0);
    }

    auto addEdge = [&](int i1, int j1, int i2, int j2, bool vertical) {
        g.net.edges.push_back({g.vertex(i1, j1), g.vertex(i2, j2)});
        g.edgeInfo.push_back({vertical, i1, j1});
    };
    for (int i = 2; i <= n + 1; ++i) {
        if (i >= 3) addEdge(i, i - 1, i + 1, i, false); // left chain
        for (int j = i; j <= n; ++j) {
            addEdge(i, j, i + 1, j, true);
            addEdge(i, j, i + 1, j + 1, false);
        }
        if (i >= 3) addEdge(i, n + 1, i + 1, n + 1, true); // right chain
    }
    g.net.validate();
    return g;
}

Flow gt_to_flow(const GLambdaNetwork& g, const TrianglePoint& x) {
    const int n = g.n;
    if (x.size != n) throw std::invalid_argument("gt_to_flow: point size mismatch");
    if (!gt_system(g.lambda).satisfiedBy(x))
        throw std::invalid_argument("gt_to_flow: point is not in GT(lambda)");

    Flow f(g.net.edgeCount(), 0);
    for (int i = 2; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            f[g.edgeA(i, j)] = checked_sub(x.at(i - 1, j - 1), x.at(i, j));
            f[g.edgeB(i, j)] = checked_sub(x.at(i, j), x.at(i - 1, j));
        }
    // chain edges carry whatever conservation demands, in topological order
    std::vector<std::int64_t> balance(g.net.netflow);
    for (int e = 0; e < g.net.edgeCount(); ++e) {
        balance[g.net.edges[e].second] = checked_add(balance[g.net.edges[e].second], f[e]);
        balance[g.net.edges[e].first] = checked_sub(balance[g.net.edges[e].first], f[e]);
    }
    for (int i = 3; i <= n + 1; ++i) {
        for (auto [src, vertical] : {std::pair{g.vertex(i, i - 1), false},
                                     std::pair{g.vertex(i, n + 1), true}}) {
            const int e = vertical ? g.edgeA(i, n + 1) : g.edgeB(i, i - 1);
            f[e] = balance[src];
            if (f[e] < 0) throw std::logic_error("gt_to_flow: negative chain flow");
            balance[g.net.edges[e].second] = checked_add(balance[g.net.edges[e].second], f[e]);
            balance[src] = 0;
        }
    }
    if (!is_flow(g.net, f)) throw std::logic_error("gt_to_flow: conservation failed");
    return f;
}

TrianglePoint flow_to_gt(const GLambdaNetwork& g, const Flow& f) {
    const int n = g.n;
    if (!is_flow(g.net, f)) throw std::invalid_argument("flow_to_gt: not a flow");
    TrianglePoint x(n);
    for (int j = 1; j <= n; ++j) x.at(1, j) = g.lambda.part(j);
    for (int i = 2; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            std::int64_t v = g.lambda.part(j);
            for (int k = 2; k <= i; ++k) v = checked_add(v, f[g.edgeB(k, j)]);
            x.at(i, j) = v;
        }
    if (!gt_system(g.lambda).satisfiedBy(x))
        throw std::logic_error("flow_to_gt: image is not in GT(lambda)");
    return x;
}

TrianglePoint flow_to_gt_via_a(const GLambdaNetwork& g, const Flow& f) {
    const int n = g.n;
    if (!is_flow(g.net, f)) throw std::invalid_argument("flow_to_gt: not a flow");
    TrianglePoint x(n);
    for (int j = 1; j <= n; ++j) x.at(1, j) = g.lambda.part(j);
    for (int i = 2; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            std::int64_t v = g.lambda.part(j - i + 1);
            for (int k = 0; k <= i - 2; ++k) v = checked_sub(v, f[g.edgeA(i - k, j - k)]);
            x.at(i, j) = v;
        }
    return x;
}

std::vector<Flow> flow_vertices(const FlowNetwork& net) {
    net.validate();
    std::vector<int> sources, sinks;
    for (int v = 0; v < net.vertexCount(); ++v) {
        if (net.netflow[v] > 0) sources.push_back(v);
        if (net.netflow[v] < 0) sinks.push_back(v);
    }
    if (sources.empty() && sinks.empty())
        return {Flow(net.edgeCount(), 0)}; // the polytope is the single point 0
    if (sources.size() != 1 || sinks.size() != 1)
        throw std::invalid_argument("vertices: network must have one source and one sink");

    const int s = sources[0], t = sinks[0];
    const std::int64_t value = net.netflow[s];
    std::vector<std::vector<int>> out(net.vertexCount());
    for (int e = 0; e < net.edgeCount(); ++e) out[net.edges[e].first].push_back(e);

    std::vector<Flow> result;
    std::vector<int> path;
    std::function<void(int)> dfs = [&](int v) {
        if (v == t) {
            Flow f(net.edgeCount(), 0);
            for (int e : path) f[e] = value;
            result.push_back(f);
            return;
        }
        for (int e : out[v]) {
            path.push_back(e);
            dfs(net.edges[e].second);
            path.pop_back();
        }
    };
    dfs(s);
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<std::int64_t> gwt(const GLambdaNetwork& g, const Flow& f) {
    if (static_cast<int>(f.size()) != g.net.edgeCount())
        throw std::invalid_argument("gwt: flow length mismatch");
    std::vector<std::int64_t> w(g.n, 0);
    for (int e = 0; e < g.net.edgeCount(); ++e)
        if (g.edgeInfo[e].vertical)
            w[g.edgeInfo[e].i - 2] = checked_add(w[g.edgeInfo[e].i - 2], f[e]);
    return w;
}

bool check_graphical_weight_shift(const GLambdaNetwork& g, const Flow& f) {
    const auto wt = weight(flow_to_gt(g, f));
    const auto gw = gwt(g, f);
    const std::int64_t shift = g.lambda.part(g.n);
    for (int i = 0; i < g.n; ++i)
        if (wt[i] != checked_add(gw[i], shift)) return false;
    return true;
}

bool check_hypersimplex(int k, int n) {
    if (k < 1 || k > n) throw std::invalid_argument("hypersimplex: need 1 <= k <= n");
    std::vector<std::int64_t> parts(n, 0);
    for (int t = 0; t < k; ++t) parts[t] = 1;
    const Partition lambda(parts);
    const GLambdaNetwork g = build_g_lambda(lambda);
    const std::vector<Flow> verts = flow_vertices(g.net);

    std::set<std::vector<std::int64_t>> images;
    const std::int64_t shift = lambda.part(n);
    for (const Flow& f : verts) {
        auto w = gwt(g, f);
        for (auto& v : w) v = checked_add(v, shift);
        images.insert(w);
    }
    if (images.size() != verts.size()) return false; // distinct vertices, distinct weights

    std::set<std::vector<std::int64_t>> expected;
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != k) continue;
        std::vector<std::int64_t> v(n, 0);
        for (int t = 0; t < n; ++t)
            if (mask & (1 << t)) v[t] = 1;
        expected.insert(v);
    }
    return images == expected;
}

bool check_permutahedron(const Partition& lambda, int trials, std::uint64_t seed) {
    const int n = lambda.size();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(-50, 50);
    for (int t = 0; t < trials; ++t) {
        std::vector<std::int64_t> c(n);
        do {
            for (auto& v : c) v = dist(rng);
            std::set<std::int64_t> uniq(c.begin(), c.end());
            if (uniq.size() == c.size()) break;
        } while (true);

        // support function of the vertex orbit of lambda
        std::vector<std::int64_t> perm(lambda.parts());
        std::sort(perm.begin(), perm.end());
        std::int64_t lhs = std::numeric_limits<std::int64_t>::min();
        do {
            std::int64_t dot = 0;
            for (int i = 0; i < n; ++i) dot = checked_add(dot, checked_mul(c[i], perm[i]));
            lhs = std::max(lhs, dot);
        } while (std::next_permutation(perm.begin(), perm.end()));

        // support function of the weighted hypersimplex sum
        std::vector<std::int64_t> sorted(c);
        std::sort(sorted.rbegin(), sorted.rend());
        std::vector<std::int64_t> prefix(n + 1, 0);
        for (int i = 0; i < n; ++i) prefix[i + 1] = checked_add(prefix[i], sorted[i]);
        std::int64_t rhs = checked_mul(lambda.part(n), prefix[n]);
        for (int k = 1; k < n; ++k)
            rhs = checked_add(rhs,
                              checked_mul(checked_sub(lambda.part(k), lambda.part(k + 1)), prefix[k]));
        if (lhs != rhs) return false;
    }
    return true;
}

bool check_flow_minkowski(const FlowNetwork& graph, const std::vector<std::int64_t>& a,
                          const std::vector<std::int64_t>& b) {
    if (a.size() != graph.labels.size() || b.size() != graph.labels.size())
        throw std::invalid_argument("flow sum: netflow length mismatch");
    FlowNetwork na = graph, nb = graph, nab = graph;
    na.netflow = a;
    nb.netflow = b;
    for (std::size_t v = 0; v < a.size(); ++v) nab.netflow[v] = checked_add(a[v], b[v]);

    const auto fa = integer_flows(na);
    const auto fb = integer_flows(nb);
    std::set<Flow> sum;
    for (const Flow& x : fa)
        for (const Flow& y : fb) {
            Flow z(x.size());
            for (std::size_t e = 0; e < x.size(); ++e) z[e] = checked_add(x[e], y[e]);
            sum.insert(z);
        }
    const auto fab = integer_flows(nab);
    return sum == std::set<Flow>(fab.begin(), fab.end());
}

GLambdaNetwork overlay(const ParFamily& fam) {
    const int n = fam.n();
    GLambdaNetwork g = build_g_lambda(Partition::zero(n));
    g.lambda = Partition::zero(n);
    if (n == 1) return g;
    for (int k = 2; k <= n; ++k) {
        for (int j = 2; j <= k; ++j) {
            const int v = g.vertex(2, j + n - k);
            g.net.netflow[v] =
                checked_add(g.net.netflow[v], checked_sub(fam.lambda(k, j - 1), fam.lambda(k, j)));
        }
        const int sink = g.vertex(k + 2, n + 1);
        g.net.netflow[sink] =
            checked_add(g.net.netflow[sink], checked_sub(fam.lambda(k, k), fam.lambda(k, 1)));
    }
    g.net.validate();
    return g;
}

GLambdaNetwork hat_overlay(const ParFamily& fam) {
    GLambdaNetwork g = overlay(fam);
    if (g.n == 1) return g;
    const int last = g.vertex(g.n + 2, g.n + 1);
    for (int v = 0; v < g.net.vertexCount(); ++v) {
        if (v == last || g.net.netflow[v] >= 0) continue;
        g.net.netflow[last] = checked_add(g.net.netflow[last], g.net.netflow[v]);
        g.net.netflow[v] = 0;
    }
    g.lambda = overlay_mu(fam);
    g.net.validate();
    return g;
}

Partition overlay_mu(const ParFamily& fam) {
    const int n = fam.n();
    std::vector<std::int64_t> mu(n, 0);
    for (int k = n - 1; k >= 1; --k) {
        std::int64_t step = 0;
        for (int j = 0; j <= k - 1; ++j)
            step = checked_add(step,
                               checked_sub(fam.lambda(n - j, k - j), fam.lambda(n - j, k - j + 1)));
        mu[k - 1] = checked_add(mu[k], step);
    }
    return Partition(mu);
}

OverlayReport check_overlay_inclusions(const ParFamily& fam) {
    const int n = fam.n();
    OverlayReport rep;
    rep.mu = overlay_mu(fam);

    const GLambdaNetwork ov = overlay(fam);
    const auto overlayFlows = integer_flows(ov.net);
    const std::set<Flow> overlaySet(overlayFlows.begin(), overlayFlows.end());
    rep.overlayCount = static_cast<std::int64_t>(overlayFlows.size());

    std::map<std::pair<int, int>, int> bigEdge;
    for (int e = 0; e < ov.net.edgeCount(); ++e) bigEdge[ov.net.edges[e]] = e;

    // embedded summand flows, summed edgewise over all k
    std::set<Flow> sumSet{Flow(ov.net.edgeCount(), 0)};
    for (int k = 2; k <= n; ++k) {
        const GLambdaNetwork gk = build_g_lambda(fam.shape(k));
        std::vector<int> edgeMap(gk.net.edgeCount());
        for (int e = 0; e < gk.net.edgeCount(); ++e) {
            const auto& info = gk.edgeInfo[e];
            const int j2 = info.j + n - k;
            const std::pair<int, int> from{info.i, j2};
            const std::pair<int, int> to =
                info.vertical ? std::pair<int, int>{info.i + 1, j2}
                              : std::pair<int, int>{info.i + 1, j2 + 1};
            edgeMap[e] = bigEdge.at({ov.vertex(from.first, from.second),
                                     ov.vertex(to.first, to.second)});
        }
        std::set<Flow> next;
        for (const Flow& base : sumSet)
            for (const Flow& fk : integer_flows(gk.net)) {
                Flow z = base;
                for (int e = 0; e < gk.net.edgeCount(); ++e)
                    z[edgeMap[e]] = checked_add(z[edgeMap[e]], fk[e]);
                next.insert(z);
            }
        sumSet.swap(next);
    }
    rep.sumsetCount = static_cast<std::int64_t>(sumSet.size());
    rep.sumsetInOverlay =
        std::all_of(sumSet.begin(), sumSet.end(), [&](const Flow& f) { return overlaySet.count(f); });
    rep.strictSumset = rep.sumsetInOverlay && sumSet.size() < overlaySet.size();
    if (rep.strictSumset && !rep.witness) {
        for (const Flow& f : overlayFlows)
            if (!sumSet.count(f)) {
                rep.witness = f;
                break;
            }
    }

    const GLambdaNetwork hat = hat_overlay(fam);
    const auto hatFlows = integer_flows(hat.net);
    const std::set<Flow> hatSet(hatFlows.begin(), hatFlows.end());
    rep.hatCount = static_cast<std::int64_t>(hatFlows.size());

    // fixed translation routing the displaced netflow down the right chain
    Flow shift(ov.net.edgeCount(), 0);
    if (n >= 2) {
        std::int64_t carried = 0;
        for (int i = 3; i <= n + 1; ++i) {
            const int v = ov.vertex(i, n + 1);
            carried = checked_add(carried, checked_sub(hat.net.netflow[v], ov.net.netflow[v]));
            shift[ov.edgeA(i, n + 1)] = carried;
        }
    }
    rep.overlayInHat = true;
    for (const Flow& f : overlayFlows) {
        Flow g = f;
        for (std::size_t e = 0; e < g.size(); ++e) g[e] = checked_add(g[e], shift[e]);
        if (!hatSet.count(g)) {
            rep.overlayInHat = false;
            break;
        }
    }
    rep.strictHat = rep.overlayInHat && overlayFlows.size() < hatFlows.size();
    if (rep.strictHat && !rep.witness) {
        std::set<Flow> translated;
        for (const Flow& f : overlayFlows) {
            Flow g = f;
            for (std::size_t e = 0; e < g.size(); ++e) g[e] = checked_add(g[e], shift[e]);
            translated.insert(g);
        }
        for (const Flow& f : hatFlows)
            if (!translated.count(f)) {
                rep.witness = f;
                break;
            }
    }

    const GLambdaNetwork gmu = build_g_lambda(rep.mu);
    rep.hatIsGMu = hat.net == gmu.net;

    const LatticePointSet gtMu = enumerate_lattice(gt_system(rep.mu));
    rep.gtMuCount = static_cast<std::int64_t>(gtMu.points.size());
    rep.hatMatchesGtMu = rep.hatIsGMu && gtMu.points.size() == hatFlows.size();
    if (rep.hatMatchesGtMu) {
        std::set<TrianglePoint> seen;
        for (const Flow& f : hatFlows) {
            const TrianglePoint x = flow_to_gt(gmu, f);
            if (!gtMu.contains(x) || gt_to_flow(gmu, x) != f || !seen.insert(x).second) {
                rep.hatMatchesGtMu = false;
                break;
            }
        }
    }
    return rep;
}

} // namespace schubertlab
