#include "schubertlab/gt_polytope.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

#include "schubertlab/checked_arith.hpp"

namespace schubertlab {

TrianglePoint add_points(const TrianglePoint& a, const TrianglePoint& b) {
    if (a.size != b.size) throw std::invalid_argument("points: size mismatch");
    TrianglePoint r(a.size);
    for (std::size_t t = 0; t < r.entries.size(); ++t)
        r.entries[t] = checked_add(a.entries[t], b.entries[t]);
    return r;
}

void AffineConstraint::addCoeff(int offset, std::int64_t c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms.begin(), terms.end(), offset,
                               [](const auto& t, int o) { return t.first < o; });
    if (it != terms.end() && it->first == offset) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms.erase(it);
    } else {
        terms.insert(it, {offset, c});
    }
}

std::int64_t AffineConstraint::evaluate(const TrianglePoint& p) const {
    std::int64_t v = constant;
    for (const auto& [o, c] : terms) v = checked_add(v, checked_mul(c, p.entries[o]));
    return v;
}

bool AffineConstraint::satisfiedBy(const TrianglePoint& p) const {
    const std::int64_t v = evaluate(p);
    return sense == Sense::Eq ? v == 0 : v >= 0;
}

bool AffineConstraint::operator==(const AffineConstraint& o) const {
    return sense == o.sense && terms == o.terms && constant == o.constant;
}

AffineConstraint make_constraint(int n, Sense sense,
                                 const std::vector<std::pair<std::pair<int, int>, std::int64_t>>& coeffs,
                                 std::int64_t constant) {
    AffineConstraint c;
    c.sense = sense;
    c.constant = constant;
    for (const auto& [ij, v] : coeffs) {
        const auto [i, j] = ij;
        if (i < 1 || i > j || j > n) throw std::invalid_argument("constraint: coordinate out of range");
        c.addCoeff(triangle_offset(n, i, j), v);
    }
    return c;
}

bool InequalitySystem::contains(const AffineConstraint& c) const {
    for (const auto& k : constraints)
        if (k == c) return true;
    return false;
}

bool InequalitySystem::satisfiedBy(const TrianglePoint& p) const {
    for (const auto& k : constraints)
        if (!k.satisfiedBy(p)) return false;
    return true;
}

bool LatticePointSet::contains(const TrianglePoint& p) const {
    return std::binary_search(points.begin(), points.end(), p);
}

namespace {

constexpr std::int64_t kNoBound = std::numeric_limits<std::int64_t>::min();

std::int64_t floor_div(std::int64_t a, std::int64_t b) { // b > 0
    std::int64_t q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { // b > 0
    std::int64_t q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

} // namespace

LatticePointSet enumerate_lattice(const InequalitySystem& sys) {
    const int dim = triangle_size(sys.size);
    // constraints become active at their last (row-major) coordinate
    std::vector<std::vector<const AffineConstraint*>> active(dim);
    for (const AffineConstraint& c : sys.constraints) {
        if (c.terms.empty()) {
            const bool ok = c.sense == Sense::Eq ? c.constant == 0 : c.constant >= 0;
            if (!ok) return LatticePointSet{sys.size, {}};
            continue;
        }
        active[c.terms.back().first].push_back(&c);
    }

    LatticePointSet out{sys.size, {}};
    TrianglePoint p(sys.size);

    std::function<void(int)> scan = [&](int t) {
        if (t == dim) {
            out.points.push_back(p);
            return;
        }
        std::int64_t lo = kNoBound, hi = kNoBound;
        bool loSet = false, hiSet = false, infeasible = false;
        for (const AffineConstraint* c : active[t]) {
            std::int64_t rest = c->constant;
            for (const auto& [o, k] : c->terms)
                if (o != t) rest = checked_add(rest, checked_mul(k, p.entries[o]));
            const std::int64_t a = c->terms.back().second; // coeff on t
            if (c->sense == Sense::Eq) {
                // a * x + rest = 0
                if (rest % a != 0) {
                    infeasible = true;
                    break;
                }
                const std::int64_t v = -rest / a;
                if (!loSet || v > lo) lo = v;
                if (!hiSet || v < hi) hi = v;
                loSet = hiSet = true;
            } else if (a > 0) {
                const std::int64_t v = ceil_div(-rest, a);
                if (!loSet || v > lo) lo = v;
                loSet = true;
            } else {
                const std::int64_t v = floor_div(rest, -a);
                if (!hiSet || v < hi) hi = v;
                hiSet = true;
            }
        }
        if (infeasible) return;
        if (!loSet || !hiSet)
            throw std::runtime_error("enumerate: unbounded system (no finite bounds derivable)");
        for (std::int64_t v = lo; v <= hi; ++v) {
            p.entries[t] = v;
            scan(t + 1);
        }
        p.entries[t] = 0;
    };
    scan(0);
    std::sort(out.points.begin(), out.points.end());
    return out;
}

LatticePointSet sumset(const LatticePointSet& a, const LatticePointSet& b) {
    if (a.size != b.size) throw std::invalid_argument("sumset: size mismatch");
    std::set<TrianglePoint> acc;
    for (const TrianglePoint& x : a.points)
        for (const TrianglePoint& y : b.points) acc.insert(add_points(x, y));
    return LatticePointSet{a.size, {acc.begin(), acc.end()}};
}

LatticePointSet sumset_fold(const std::vector<LatticePointSet>& sets, int size) {
    LatticePointSet acc{size, {TrianglePoint(size)}};
    for (const LatticePointSet& s : sets) acc = sumset(acc, s);
    return acc;
}

InequalitySystem gt_system(const Partition& lambda) {
    const int n = lambda.size();
    if (n == 0) throw std::invalid_argument("gt: empty partition");
    InequalitySystem sys{n, {}};
    for (int j = 1; j <= n; ++j)
        sys.constraints.push_back(
            make_constraint(n, Sense::Eq, {{{1, j}, 1}}, -lambda.part(j)));
    for (int i = 2; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            sys.constraints.push_back(
                make_constraint(n, Sense::Ge, {{{i - 1, j - 1}, 1}, {{i, j}, -1}}, 0));
            sys.constraints.push_back(
                make_constraint(n, Sense::Ge, {{{i, j}, 1}, {{i - 1, j}, -1}}, 0));
        }
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            sys.constraints.push_back(make_constraint(n, Sense::Ge, {{{i, j}, 1}}, 0));
    return sys;
}

LaurentPolynomial integer_point_transform(const LatticePointSet& pts) {
    const int dim = triangle_size(pts.size);
    LaurentPolynomial f(dim);
    for (const TrianglePoint& p : pts.points) {
        LaurentPolynomial::Exponents e(dim);
        for (int t = 0; t < dim; ++t) e[t] = static_cast<int>(p.entries[t]);
        f.addTerm(e, 1);
    }
    return f;
}

LaurentPolynomial specialize(const LaurentPolynomial& transform, int n) {
    if (transform.arity() != triangle_size(n))
        throw std::invalid_argument("specialize: arity is not a triangle size");
    LaurentPolynomial f(n);
    for (const auto& [e, c] : transform.terms()) {
        std::vector<std::int64_t> rowSum(n + 2, 0);
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                rowSum[i] = checked_add(rowSum[i], e[triangle_offset(n, i, j)]);
        LaurentPolynomial::Exponents ex(n);
        for (int i = 1; i <= n; ++i) ex[i - 1] = static_cast<int>(rowSum[i] - rowSum[i + 1]);
        f.addTerm(ex, c);
    }
    return f;
}

std::vector<std::int64_t> weight(const TrianglePoint& p) {
    const int n = p.size;
    std::vector<std::int64_t> rowSum(n + 2, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) rowSum[i] = checked_add(rowSum[i], p.at(i, j));
    std::vector<std::int64_t> wt(n);
    for (int i = 1; i <= n; ++i) wt[i - 1] = checked_sub(rowSum[i], rowSum[i + 1]);
    return wt;
}

LaurentPolynomial schur(const Partition& lambda) {
    const int n = lambda.size();
    LaurentPolynomial f(n);
    for (const TrianglePoint& p : enumerate_lattice(gt_system(lambda)).points) {
        const auto wt = weight(p);
        LaurentPolynomial::Exponents e(n);
        for (int i = 0; i < n; ++i) e[i] = static_cast<int>(wt[i]);
        f.addTerm(e, 1);
    }
    if (f.hasNegativeExponent()) throw std::logic_error("schur: negative exponent in result");
    return f;
}

bool check_gt_minkowski(const Partition& lambda) {
    const int n = lambda.size();
    std::vector<LatticePointSet> parts;
    for (int k = 1; k <= n; ++k) {
        const std::int64_t reps = lambda.part(k) - lambda.part(k + 1);
        if (reps == 0) continue;
        std::vector<std::int64_t> unit(n, 0);
        for (int t = 0; t < k; ++t) unit[t] = 1;
        const LatticePointSet step = enumerate_lattice(gt_system(Partition(unit)));
        for (std::int64_t r = 0; r < reps; ++r) parts.push_back(step);
    }
    return sumset_fold(parts, n) == enumerate_lattice(gt_system(lambda));
}

bool check_gt_additivity(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("additivity: length mismatch");
    const LatticePointSet a = enumerate_lattice(gt_system(lambda));
    const LatticePointSet b = enumerate_lattice(gt_system(mu));
    return sumset(a, b) == enumerate_lattice(gt_system(add_partitions(lambda, mu)));
}

} // namespace schubertlab
