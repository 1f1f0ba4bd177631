#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schubertlab/combinatorics.hpp"
#include "schubertlab/flow_network.hpp"
#include "schubertlab/gt_polytope.hpp"
#include "schubertlab/json_io.hpp"
#include "schubertlab/laurent.hpp"
#include "schubertlab/minkowski.hpp"
#include "schubertlab/schubert.hpp"

using namespace schubertlab;
using nlohmann::ordered_json;

namespace {

std::int64_t elapsed_ms(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

int thread_cap() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* s = std::getenv("SCHUBERT_LAB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v >= 1 && static_cast<unsigned>(v) < hw)
            hw = static_cast<unsigned>(v);
    }
    return static_cast<int>(hw);
}

// duplicates every emitted line to --out when given
struct Emitter {
    std::ofstream file;
    bool enabled = false;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
        enabled = true;
    }
    void line(const ordered_json& j) {
        const std::string s = j.dump();
        std::cout << s << "\n";
        if (enabled) file << s << "\n";
    }
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else
            cur.push_back(c);
    }
    out.push_back(cur);
    return out;
}

std::int64_t parse_int(const std::string& tok) {
    if (tok.empty()) throw std::invalid_argument("empty numeric token");
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("'" + tok + "' is not an integer");
    }
    if (used != tok.size()) throw std::invalid_argument("'" + tok + "' is not an integer");
    return v;
}

// one-line notation: comma-separated values, or one digit per character
Permutation parse_permutation(const std::string& s) {
    std::vector<int> word;
    if (s.find(',') != std::string::npos) {
        for (const std::string& tok : split(s, ','))
            word.push_back(static_cast<int>(parse_int(tok)));
    } else {
        for (char c : s) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("'" + s + "' is not a permutation word");
            word.push_back(c - '0');
        }
    }
    try {
        return Permutation(word);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("'" + s + "' is not a permutation");
    }
}

Partition parse_lambda(const std::string& s) {
    std::vector<std::int64_t> parts;
    for (const std::string& tok : split(s, ',')) parts.push_back(parse_int(tok));
    try {
        return Partition(parts);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("'" + s + "' is not a partition");
    }
}

// shapes separated by ';', parts by ',': "0;1,0;2,1,0"
ParFamily parse_family(const std::string& s) {
    std::vector<Partition> shapes;
    for (const std::string& part : split(s, ';')) shapes.push_back(parse_lambda(part));
    try {
        return ParFamily(shapes);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("'" + s + "': " + e.what());
    }
}

ordered_json family_json(const ParFamily& fam) {
    ordered_json arr = ordered_json::array();
    for (const Partition& p : fam.shapes()) arr.push_back(p.parts());
    return arr;
}

ParFamily family_from_options(const std::string& famStr, const std::string& wStr) {
    if (!famStr.empty() && !wStr.empty())
        throw std::invalid_argument("give either --family or --w, not both");
    if (!famStr.empty()) return parse_family(famStr);
    if (!wStr.empty()) return par_family(rothe_diagram(parse_permutation(wStr)));
    throw std::invalid_argument("one of --family or --w is required");
}

Diagram diagram_from_option(const std::string& spec) {
    std::string text = spec;
    if (!spec.empty() && spec[0] != '{') {
        std::ifstream in(spec);
        if (!in) throw std::invalid_argument("cannot read diagram file '" + spec + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("'" + spec + "' is not valid diagram JSON");
    }
    return diagram_from_json(j);
}

int run_schubert(const std::string& wStr, Emitter& out) {
    const Permutation w = parse_permutation(wStr);
    out.line(poly_to_json(schubert(w)));
    return 0;
}

int run_character(const std::string& wStr, const std::string& diagStr, Emitter& out) {
    if (wStr.empty() == diagStr.empty())
        throw std::invalid_argument("exactly one of --w or --diagram is required");
    const Diagram d =
        wStr.empty() ? diagram_from_option(diagStr) : rothe_diagram(parse_permutation(wStr));
    out.line(ordered_json{{"diagram", diagram_to_json(d)},
                          {"character", poly_to_json(flagged_character(d))}});
    return 0;
}

int run_gt(const std::string& mode, const std::string& lambdaStr, Emitter& out) {
    const Partition lambda = parse_lambda(lambdaStr);
    if (mode == "schur") {
        out.line(poly_to_json(schur(lambda)));
        return 0;
    }
    const LatticePointSet pts = enumerate_lattice(gt_system(lambda));
    if (mode == "enumerate") {
        out.line(lattice_to_json(pts));
        return 0;
    }
    const LaurentPolynomial transform = integer_point_transform(pts);
    out.line(ordered_json{{"size", lambda.size()},
                          {"transform", poly_to_json(transform)},
                          {"specialized", poly_to_json(specialize(transform, lambda.size()))}});
    return 0;
}

LatticePointSet embedded_sumset(const ParFamily& fam) {
    const int n = fam.n();
    std::vector<LatticePointSet> parts;
    for (int k = 1; k <= n; ++k) {
        const LatticePointSet small = enumerate_lattice(gt_system(fam.shape(k)));
        LatticePointSet big{n, {}};
        for (const TrianglePoint& y : small.points) big.points.push_back(embed(k, n, y));
        std::sort(big.points.begin(), big.points.end());
        parts.push_back(big);
    }
    return sumset_fold(parts, n);
}

int run_minkowski(const std::string& mode, const std::string& famStr,
                  const std::string& wStr, Emitter& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const ParFamily fam = family_from_options(famStr, wStr);
    if (mode == "system") {
        out.line(ordered_json{{"family", family_json(fam)},
                              {"system", system_to_json(q_system(fam))}});
        return 0;
    }
    const LatticePointSet pts = enumerate_lattice(q_system(fam));
    if (mode == "enumerate") {
        out.line(lattice_to_json(pts));
        return 0;
    }
    const LatticePointSet sum = embedded_sumset(fam);
    const bool ok = sum == pts;
    out.line(ordered_json{{"command", "minkowski verify"},
                          {"family", family_json(fam)},
                          {"status", ok ? "ok" : "mismatch"},
                          {"latticeCount", pts.points.size()},
                          {"sumsetCount", sum.points.size()},
                          {"millis", elapsed_ms(t0)}});
    return ok ? 0 : 1;
}

int run_flow(const std::string& mode, const std::string& lambdaStr, std::int64_t dilate,
             Emitter& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const Partition lambda = parse_lambda(lambdaStr).scaled(dilate);
    const GLambdaNetwork g = build_g_lambda(lambda);
    if (mode == "build") {
        out.line(network_to_json(g.net));
        return 0;
    }
    if (mode == "vertices") {
        const std::vector<Flow> verts = flow_vertices(g.net);
        out.line(ordered_json{{"count", verts.size()}, {"vertices", verts}});
        return 0;
    }
    const std::vector<Flow> flows = integer_flows(g.net);
    if (mode == "enumerate") {
        out.line(ordered_json{
            {"edges", g.net.edgeCount()}, {"count", flows.size()}, {"flows", flows}});
        return 0;
    }
    // equiv: counts agree and the conversions invert each other pointwise
    const LatticePointSet pts = enumerate_lattice(gt_system(lambda));
    bool ok = flows.size() == pts.points.size();
    for (std::size_t i = 0; ok && i < flows.size(); ++i)
        ok = gt_to_flow(g, flow_to_gt(g, flows[i])) == flows[i];
    for (const TrianglePoint& x : pts.points) {
        if (!ok) break;
        const Flow f = gt_to_flow(g, x);
        ok = flow_to_gt(g, f) == x && flow_to_gt_via_a(g, f) == x && is_flow(g.net, f);
    }
    out.line(ordered_json{{"command", "flow equiv"},
                          {"lambda", lambda.parts()},
                          {"dilate", dilate},
                          {"flowCount", flows.size()},
                          {"gtCount", pts.points.size()},
                          {"status", ok ? "ok" : "mismatch"},
                          {"millis", elapsed_ms(t0)}});
    return ok ? 0 : 1;
}

int run_verify_theorem1(int n, const std::string& wStr, Emitter& out) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Permutation> words;
    if (!wStr.empty())
        words.push_back(parse_permutation(wStr));
    else
        for_each_permutation(n, [&](const Permutation& w) { words.push_back(w); });

    std::vector<Theorem1Report> reports(words.size(), Theorem1Report{});
    const int threads = std::min<int>(thread_cap(), static_cast<int>(words.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < words.size(); ++i) reports[i] = verify_theorem1(words[i]);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < words.size(); i += threads)
                    reports[i] = verify_theorem1(words[i]);
            });
        for (std::thread& th : pool) th.join();
    }

    std::int64_t convex = 0, failures = 0;
    for (const Theorem1Report& r : reports) {
        out.line(theorem1_report_to_json(r));
        if (r.columnConvex) {
            ++convex;
            if (!r.ok()) ++failures;
        }
    }
    out.line(ordered_json{{"command", "verify theorem1"},
                          {"n", wStr.empty() ? n : static_cast<int>(words[0].size())},
                          {"permutations", words.size()},
                          {"columnConvex", convex},
                          {"failures", failures},
                          {"status", failures == 0 ? "ok" : "mismatch"},
                          {"millis", elapsed_ms(t0)}});
    return failures == 0 ? 0 : 1;
}

void partitions_rec(int len, std::int64_t maxPart, std::vector<std::int64_t>& cur,
                    std::vector<Partition>& out) {
    if (static_cast<int>(cur.size()) == len) {
        out.emplace_back(cur);
        return;
    }
    const std::int64_t hi = cur.empty() ? maxPart : cur.back();
    for (std::int64_t v = hi; v >= 0; --v) {
        cur.push_back(v);
        partitions_rec(len, maxPart, cur, out);
        cur.pop_back();
    }
}

int run_verify_theorem2(int maxParts, std::int64_t maxPart, std::int64_t dilate,
                        Emitter& out) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Partition> shapes;
    std::vector<std::int64_t> cur;
    partitions_rec(maxParts, maxPart, cur, shapes);

    std::int64_t checked = 0, failures = 0;
    for (const Partition& base : shapes)
        for (std::int64_t t = 1; t <= dilate; ++t) {
            const Partition lambda = base.scaled(t);
            const GLambdaNetwork g = build_g_lambda(lambda);
            const std::vector<Flow> flows = integer_flows(g.net);
            const LatticePointSet pts = enumerate_lattice(gt_system(lambda));
            bool ok = flows.size() == pts.points.size();
            for (const TrianglePoint& x : pts.points) {
                if (!ok) break;
                const Flow f = gt_to_flow(g, x);
                ok = flow_to_gt(g, f) == x && is_flow(g.net, f);
            }
            ++checked;
            if (!ok) ++failures;
            out.line(ordered_json{{"lambda", lambda.parts()},
                                  {"dilate", t},
                                  {"gtCount", pts.points.size()},
                                  {"flowCount", flows.size()},
                                  {"status", ok ? "ok" : "mismatch"}});
        }
    out.line(ordered_json{{"command", "verify theorem2"},
                          {"maxParts", maxParts},
                          {"maxPart", maxPart},
                          {"dilate", dilate},
                          {"checked", checked},
                          {"failures", failures},
                          {"status", failures == 0 ? "ok" : "mismatch"},
                          {"millis", elapsed_ms(t0)}});
    return failures == 0 ? 0 : 1;
}

int run_verify_all(int n, std::uint64_t seed, Emitter& out) {
    const auto t0 = std::chrono::steady_clock::now();
    int rc = run_verify_theorem1(n, "", out);
    rc = std::max(rc, run_verify_theorem2(3, 2, 2, out));

    // seeded operator identity batch on box sums
    std::mt19937_64 rng(seed);
    std::int64_t done = 0, failures = 0;
    while (done < 100) {
        DemazureParams ps;
        const int k = static_cast<int>(rng() % 4);
        std::int64_t total = 0;
        for (int t = 0; t < k; ++t) {
            const std::int64_t mu = static_cast<std::int64_t>(rng() % 4);
            const std::int64_t nu = mu + static_cast<std::int64_t>(rng() % 4);
            ps.bounds.push_back({mu, nu});
            total += mu + nu;
        }
        ps.n1 = static_cast<std::int64_t>(rng() % 7);
        ps.n2 = static_cast<std::int64_t>(rng() % 7);
        if (total > ps.n1 + ps.n2) {
            ps.bounds.clear();
            continue;
        }
        if (!verify_lemma_di(ps)) ++failures;
        ++done;
    }
    if (failures > 0) rc = std::max(rc, 1);
    out.line(ordered_json{{"command", "verify all"},
                          {"n", n},
                          {"seed", seed},
                          {"boxSumChecks", done},
                          {"failures", failures},
                          {"status", rc == 0 ? "ok" : "mismatch"},
                          {"millis", elapsed_ms(t0)}});
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice-point toolkit: Schubert polynomials, Gelfand-Tsetlin "
                 "polytopes, Minkowski sums, and flow networks"};
    app.require_subcommand(1);

    std::string wStr, diagStr, lambdaStr, famStr, outPath;
    int nBound = 4;
    std::int64_t dilate = 1;
    int maxParts = 3;
    std::int64_t maxPart = 2;
    std::uint64_t seed = 20260814;

    CLI::App* cmdSchubert = app.add_subcommand("schubert", "Schubert polynomial of w");
    cmdSchubert->add_option("--w", wStr, "permutation, one-line notation")->required();

    CLI::App* cmdCharacter =
        app.add_subcommand("character", "flagged Schur module character of a diagram");
    cmdCharacter->add_option("--w", wStr, "permutation whose Rothe diagram to use");
    cmdCharacter->add_option("--diagram", diagStr, "diagram JSON (inline or a file path)");

    CLI::App* cmdGt = app.add_subcommand("gt", "Gelfand-Tsetlin polytope operations");
    cmdGt->require_subcommand(1);
    for (const char* sub : {"enumerate", "transform", "schur"})
        cmdGt->add_subcommand(sub)->add_option("--lambda", lambdaStr, "partition")->required();

    CLI::App* cmdMink = app.add_subcommand("minkowski", "Minkowski sum systems");
    cmdMink->require_subcommand(1);
    for (const char* sub : {"system", "enumerate", "verify"}) {
        CLI::App* c = cmdMink->add_subcommand(sub);
        c->add_option("--family", famStr, "partition family, shapes joined by ';'");
        c->add_option("--w", wStr, "permutation whose Rothe family to use");
    }

    CLI::App* cmdFlow = app.add_subcommand("flow", "flow networks G_lambda");
    cmdFlow->require_subcommand(1);
    for (const char* sub : {"build", "enumerate", "equiv", "vertices"}) {
        CLI::App* c = cmdFlow->add_subcommand(sub);
        c->add_option("--lambda", lambdaStr, "partition")->required();
        c->add_option("--dilate", dilate, "integer dilation factor");
    }

    CLI::App* cmdVerify = app.add_subcommand("verify", "verification reports, JSON lines");
    cmdVerify->require_subcommand(1);
    CLI::App* vt1 = cmdVerify->add_subcommand("theorem1", "projection equals Schubert");
    vt1->add_option("--n", nBound, "check every w in S_n");
    vt1->add_option("--w", wStr, "check a single permutation");
    CLI::App* vt2 = cmdVerify->add_subcommand("theorem2", "GT lattice equals flow lattice");
    vt2->add_option("--max-parts", maxParts, "partition length bound");
    vt2->add_option("--max-part", maxPart, "largest part bound");
    vt2->add_option("--dilate", dilate, "largest dilation checked");
    CLI::App* vall = cmdVerify->add_subcommand("all", "run every verification");
    vall->add_option("--n", nBound, "bound for the theorem1 sweep");
    vall->add_option("--seed", seed, "seed for the randomized checks");

    for (CLI::App* c : {cmdSchubert, cmdCharacter, vt1, vt2, vall})
        c->add_option("--out", outPath, "duplicate output lines into a file");

    int rc = 0;
    try {
        app.parse(argc, argv);
        Emitter out;
        out.open(outPath);
        if (cmdSchubert->parsed()) rc = run_schubert(wStr, out);
        if (cmdCharacter->parsed()) rc = run_character(wStr, diagStr, out);
        if (cmdGt->parsed())
            rc = run_gt(cmdGt->get_subcommands().front()->get_name(), lambdaStr, out);
        if (cmdMink->parsed())
            rc = run_minkowski(cmdMink->get_subcommands().front()->get_name(), famStr, wStr,
                               out);
        if (cmdFlow->parsed())
            rc = run_flow(cmdFlow->get_subcommands().front()->get_name(), lambdaStr, dilate,
                          out);
        if (cmdVerify->parsed()) {
            if (vt1->parsed()) rc = run_verify_theorem1(nBound, wStr, out);
            if (vt2->parsed()) rc = run_verify_theorem2(maxParts, maxPart, dilate, out);
            if (vall->parsed()) rc = run_verify_all(nBound, seed, out);
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << e.what() << std::endl;
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return rc;
}
