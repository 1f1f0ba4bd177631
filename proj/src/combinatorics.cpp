#include "schubertlab/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "schubertlab/checked_arith.hpp"

namespace schubertlab {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    if (n == 0) throw std::invalid_argument("permutation: empty word");
    std::vector<char> seen(n + 1, 0);
    for (int v : word_) {
        if (v < 1 || v > n)
            throw std::invalid_argument("permutation: value " + std::to_string(v) +
                                        " outside 1.." + std::to_string(n));
        if (seen[v])
            throw std::invalid_argument("permutation: value " + std::to_string(v) + " repeated");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(w);
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Permutation(w);
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(word_.size());
    for (int i = 0; i < static_cast<int>(word_.size()); ++i) inv[word_[i] - 1] = i + 1;
    return Permutation(inv);
}

Permutation Permutation::swapPositions(int i) const {
    if (i < 1 || i >= size()) throw std::invalid_argument("swapPositions: bad index");
    std::vector<int> w = word_;
    std::swap(w[i - 1], w[i]);
    return Permutation(w);
}

std::vector<int> Permutation::descents() const {
    std::vector<int> out;
    for (int i = 1; i < size(); ++i)
        if (word_[i - 1] > word_[i]) out.push_back(i);
    return out;
}

int Permutation::inversions() const {
    int c = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (word_[i] > word_[j]) ++c;
    return c;
}

bool Permutation::isIdentity() const {
    for (int i = 1; i <= size(); ++i)
        if (word_[i - 1] != i) return false;
    return true;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        fn(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition: negative part " + std::to_string(parts_[i]));
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition: parts must be weakly decreasing");
    }
}

Partition Partition::zero(int length) {
    return Partition(std::vector<std::int64_t>(length, 0));
}

std::int64_t Partition::part(int i) const {
    if (i < 1) throw std::invalid_argument("partition: part index must be positive");
    return i <= size() ? parts_[i - 1] : 0;
}

std::int64_t Partition::sum() const {
    std::int64_t s = 0;
    for (auto p : parts_) s = checked_add(s, p);
    return s;
}

bool Partition::isZero() const {
    return parts_.empty() || parts_.front() == 0;
}

Partition Partition::scaled(std::int64_t t) const {
    if (t < 0) throw std::invalid_argument("partition: negative dilate");
    std::vector<std::int64_t> p(parts_);
    for (auto& v : p) v = checked_mul(v, t);
    return Partition(p);
}

Partition Partition::conjugate() const {
    std::vector<std::int64_t> conj(static_cast<std::size_t>(part(1)), 0);
    for (std::int64_t r = 1; r <= part(1); ++r) {
        std::int64_t c = 0;
        for (auto p : parts_)
            if (p >= r) ++c;
        conj[r - 1] = c;
    }
    return Partition(conj);
}

Partition add_partitions(const Partition& a, const Partition& b) {
    const int n = std::max(a.size(), b.size());
    std::vector<std::int64_t> p(n);
    for (int i = 1; i <= n; ++i) p[i - 1] = checked_add(a.part(i), b.part(i));
    return Partition(p);
}

Diagram::Diagram(int rowCount, std::vector<Box> boxes) : rowCount_(rowCount) {
    if (rowCount < 0) throw std::invalid_argument("diagram: negative row count");
    std::set<Box> dedup(boxes.begin(), boxes.end());
    for (const Box& b : dedup) {
        if (b.row < 1 || b.row > rowCount_)
            throw std::invalid_argument("diagram: box row " + std::to_string(b.row) +
                                        " outside 1.." + std::to_string(rowCount_));
        if (b.col < 1) throw std::invalid_argument("diagram: box column must be positive");
    }
    boxes_.assign(dedup.begin(), dedup.end());
}

bool Diagram::contains(int row, int col) const {
    return std::binary_search(boxes_.begin(), boxes_.end(), Box{row, col});
}

std::vector<std::pair<int, std::vector<int>>> Diagram::columns() const {
    std::map<int, std::vector<int>> cols;
    for (const Box& b : boxes_) cols[b.col].push_back(b.row);
    return {cols.begin(), cols.end()};
}

ParFamily::ParFamily(std::vector<Partition> shapes) : shapes_(std::move(shapes)) {
    for (int i = 1; i <= n(); ++i)
        if (shapes_[i - 1].size() != i)
            throw std::invalid_argument("family: shape " + std::to_string(i) + " must have " +
                                        std::to_string(i) + " parts");
}

Diagram rothe_diagram(const Permutation& w) {
    const int n = w.size();
    const Permutation winv = w.inverse();
    std::vector<Box> boxes;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (w(i) > j && winv(j) > i) boxes.push_back({i, j});
    return Diagram(n, boxes);
}

bool is_column_convex(const Diagram& d) {
    for (const auto& [col, rows] : d.columns()) {
        (void)col;
        for (std::size_t t = 1; t < rows.size(); ++t)
            if (rows[t] != rows[t - 1] + 1) return false;
    }
    return true;
}

bool avoids_patterns(const Permutation& w, std::vector<int>* witness) {
    const int n = w.size();
    // occurrences of 3142 or 4132 at positions p1<p2<p3<p4
    for (int p1 = 1; p1 <= n; ++p1)
        for (int p2 = p1 + 1; p2 <= n; ++p2)
            for (int p3 = p2 + 1; p3 <= n; ++p3)
                for (int p4 = p3 + 1; p4 <= n; ++p4) {
                    const int a = w(p1), b = w(p2), c = w(p3), e = w(p4);
                    const bool m3142 = b < e && e < a && a < c;
                    const bool m4132 = b < e && e < c && c < a;
                    if (m3142 || m4132) {
                        if (witness) *witness = {p1, p2, p3, p4};
                        return false;
                    }
                }
    return true;
}

namespace {

// (end row, height) of every column, column-convexity required
std::vector<std::pair<int, int>> column_profiles(const Diagram& d) {
    if (!is_column_convex(d)) throw std::invalid_argument("diagram is not column-convex");
    std::vector<std::pair<int, int>> out;
    for (const auto& [col, rows] : d.columns()) {
        (void)col;
        out.push_back({rows.back(), static_cast<int>(rows.size())});
    }
    return out;
}

} // namespace

ParFamily par_family(const Diagram& d) {
    const int n = d.rowCount();
    std::vector<std::vector<std::int64_t>> heights(n + 1);
    for (const auto& [end, h] : column_profiles(d)) heights[end].push_back(h);

    std::vector<Partition> shapes;
    for (int i = 1; i <= n; ++i) {
        std::sort(heights[i].rbegin(), heights[i].rend());
        // French reading of bottom-justified columns = conjugate of the heights
        std::vector<std::int64_t> parts(i, 0);
        for (int j = 1; j <= i; ++j)
            parts[j - 1] = static_cast<std::int64_t>(
                std::count_if(heights[i].begin(), heights[i].end(),
                              [j](std::int64_t h) { return h >= j; }));
        shapes.emplace_back(parts);
    }
    return ParFamily(shapes);
}

Diagram family_to_diagram(const ParFamily& fam) {
    std::vector<Box> boxes;
    int col = 0;
    for (int i = 1; i <= fam.n(); ++i) {
        const Partition heights = fam.shape(i).conjugate();
        for (int c = 1; c <= heights.size(); ++c) {
            ++col;
            for (int r = i - static_cast<int>(heights.part(c)) + 1; r <= i; ++r)
                boxes.push_back({r, col});
        }
    }
    return Diagram(fam.n(), boxes);
}

ReducedDiagram reduce_diagram(const Diagram& d) {
    if (d.rowCount() == 0) throw std::invalid_argument("reduce: diagram has no rows");
    const ParFamily fam = par_family(d); // also checks column-convexity
    const int n = d.rowCount();

    std::vector<Box> shifted;
    std::set<int> dropCols;
    for (const auto& [col, rows] : d.columns())
        if (rows.front() == 1) dropCols.insert(col);
    for (const Box& b : d.boxes())
        if (!dropCols.count(b.col)) shifted.push_back({b.row - 1, b.col});

    std::vector<std::int64_t> mu(n, 0);
    for (int k = n; k >= 1; --k) {
        mu[k - 1] = fam.lambda(k, k);
        if (k < n) mu[k - 1] = checked_add(mu[k - 1], mu[k]);
    }
    return ReducedDiagram{Diagram(n - 1, shifted), Partition(mu)};
}

bool is_grassmannian(const Permutation& w) {
    return w.descents().size() <= 1;
}

std::optional<Partition> grassmannian_shape(const Permutation& w) {
    const auto des = w.descents();
    if (des.size() > 1) return std::nullopt;
    const int r = des.empty() ? w.size() : des[0];
    std::vector<std::int64_t> parts(r);
    for (int i = 1; i <= r; ++i) parts[i - 1] = w(r + 1 - i) - (r + 1 - i);
    return Partition(parts);
}

} // namespace schubertlab
