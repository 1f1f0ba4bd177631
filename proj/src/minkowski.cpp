#include "schubertlab/minkowski.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

#include "schubertlab/checked_arith.hpp"
#include "schubertlab/schubert.hpp"

namespace schubertlab {

std::vector<ZigzagSequence> zigzag_sequences(int n) {
    // a 2k-subset {s_0 < ... < s_{2k-1}} of {0..n} splits as
    // i_k = s_0, ..., i_1 = s_{k-1}, j_1 = s_k, ..., j_k = s_{2k-1}
    std::vector<ZigzagSequence> out;
    for (int k = 1; 2 * k <= n + 1; ++k) {
        std::vector<int> pick(2 * k);
        std::function<void(int, int)> rec = [&](int pos, int from) {
            if (pos == 2 * k) {
                ZigzagSequence z;
                for (int s = 0; s < k; ++s) z.is.push_back(pick[k - 1 - s]);
                for (int s = 0; s < k; ++s) z.js.push_back(pick[k + s]);
                out.push_back(z);
                return;
            }
            for (int v = from; v <= n; ++v) {
                pick[pos] = v;
                rec(pos + 1, v + 1);
            }
        };
        rec(0, 0);
    }
    return out;
}

TrianglePoint embed(int k, int n, const TrianglePoint& y) {
    if (y.size != k) throw std::invalid_argument("embed: point size mismatch");
    if (k > n) throw std::invalid_argument("embed: target smaller than source");
    TrianglePoint x(n);
    for (int i = 1; i <= k; ++i)
        for (int j = i; j <= k; ++j) x.at(i, j + n - k) = y.at(i, j);
    return x;
}

namespace {

AffineConstraint zigzag_constraint(const ParFamily& fam, const ZigzagSequence& z) {
    const int n = fam.n();
    const int k = z.k();
    AffineConstraint c;
    c.sense = (k == 1 && z.js[0] == z.is[0] + 1) ? Sense::Eq : Sense::Ge;
    for (int s = 1; s <= k; ++s)
        c.addCoeff(triangle_offset(n, z.js[s - 1] - z.is[s - 1], z.js[s - 1]), 1);
    for (int s = 1; s <= k - 1; ++s)
        c.addCoeff(triangle_offset(n, z.js[s] - z.is[s - 1], z.js[s]), -1);
    std::int64_t rhs = 0;
    for (int s = 0; s <= z.is[k - 1]; ++s)
        rhs = checked_add(rhs, fam.lambda(n - s, z.js[0] - s));
    c.constant = checked_sub(0, rhs);
    return c;
}

} // namespace

InequalitySystem q_system(const ParFamily& fam) {
    const int n = fam.n();
    InequalitySystem sys{n, {}};
    for (int i = 2; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            sys.constraints.push_back(
                make_constraint(n, Sense::Ge, {{{i - 1, j - 1}, 1}, {{i, j}, -1}}, 0));
    for (const ZigzagSequence& z : zigzag_sequences(n))
        sys.constraints.push_back(zigzag_constraint(fam, z));
    return sys;
}

InequalitySystem slice_system(const Diagram& d, int m) {
    const int n = d.rowCount();
    if (m < 1 || m > n) throw std::invalid_argument("slice: m out of range");
    const ParFamily fam = par_family(d);
    for (int k = 1; k <= n; ++k)
        if (fam.lambda(k, k) != 0)
            throw std::invalid_argument("slice: diagram has a box in the first row");

    InequalitySystem full = q_system(fam);
    InequalitySystem sys{n, {}};
    for (const AffineConstraint& c : full.constraints) {
        bool touchesPinned = false;
        for (const auto& [o, v] : c.terms) {
            (void)v;
            for (int i = 1; i <= m; ++i)
                if (o == triangle_offset(n, i, n)) touchesPinned = true;
        }
        if (!touchesPinned) sys.constraints.push_back(c);
    }
    for (int i = 1; i <= m; ++i)
        sys.constraints.push_back(make_constraint(n, Sense::Eq, {{{i, n}, 1}}, 0));
    return sys;
}

bool Parallelepiped::empty() const {
    for (const auto& [lo, hi] : bounds)
        if (lo > hi) return true;
    return false;
}

Parallelepiped fiber_box(const InequalitySystem& sys, int k, const TrianglePoint& fixed) {
    const int n = sys.size;
    if (k < 1 || k > n) throw std::invalid_argument("fiber: row out of range");
    if (fixed.size != n) throw std::invalid_argument("fiber: fixed point size mismatch");

    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
    Parallelepiped box;
    box.startRow = k;
    box.size = n;
    box.bounds.assign(n - k + 1, {-kInf, kInf});

    for (const AffineConstraint& c : sys.constraints) {
        int freeOffset = -1;
        std::int64_t freeCoeff = 0;
        std::int64_t rest = c.constant;
        int freeCount = 0;
        for (const auto& [o, v] : c.terms) {
            bool inRowK = false;
            for (int j = k; j <= n; ++j)
                if (o == triangle_offset(n, k, j)) inRowK = true;
            if (inRowK) {
                ++freeCount;
                freeOffset = o;
                freeCoeff = v;
            } else {
                rest = checked_add(rest, checked_mul(v, fixed.entries[o]));
            }
        }
        if (freeCount > 1)
            throw std::invalid_argument("fiber: constraint couples two row-" + std::to_string(k) +
                                        " coordinates (not a parapolytope)");
        if (freeCount == 0) {
            const bool ok = c.sense == Sense::Eq ? rest == 0 : rest >= 0;
            if (!ok) { // fixed part infeasible: empty box
                for (auto& b : box.bounds) b = {1, 0};
                return box;
            }
            continue;
        }
        const int idx = freeOffset - triangle_offset(n, k, k);
        auto& [lo, hi] = box.bounds[idx];
        if (c.sense == Sense::Eq) {
            if (rest % freeCoeff != 0) {
                lo = 1, hi = 0;
                continue;
            }
            const std::int64_t v = -rest / freeCoeff;
            lo = std::max(lo, v);
            hi = std::min(hi, v);
        } else if (freeCoeff > 0) {
            std::int64_t q = -rest / freeCoeff;
            if ((-rest) % freeCoeff != 0 && -rest > 0) ++q;
            lo = std::max(lo, q);
        } else {
            std::int64_t q = rest / (-freeCoeff);
            if (rest % (-freeCoeff) != 0 && rest < 0) --q;
            hi = std::min(hi, q);
        }
    }
    for (const auto& [lo, hi] : box.bounds)
        if (lo <= -kInf || hi >= kInf)
            throw std::runtime_error("fiber: unbounded in some row coordinate");
    return box;
}

Theorem1Report verify_theorem1(const Permutation& w) {
    const auto start = std::chrono::steady_clock::now();
    Theorem1Report rep;
    rep.w = w.word();

    rep.columnConvex = avoids_patterns(w, &rep.patternWitness);
    const Diagram d = rothe_diagram(w);
    if (is_column_convex(d) != rep.columnConvex)
        throw std::logic_error("theorem1: pattern avoidance disagrees with column-convexity");
    if (!rep.columnConvex) {
        rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
        return rep;
    }

    const ParFamily fam = par_family(d);
    const LatticePointSet pts = enumerate_lattice(q_system(fam));
    rep.latticeCount = static_cast<std::int64_t>(pts.points.size());
    rep.projected = specialize(integer_point_transform(pts), w.size());
    rep.schubertPoly = schubert(w);
    rep.characterPoly = flagged_character(d);
    rep.equalSchubert = rep.projected == rep.schubertPoly;
    rep.equalCharacter = rep.projected == rep.characterPoly;
    rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    return rep;
}

} // namespace schubertlab
