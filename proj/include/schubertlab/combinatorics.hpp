#pragma once
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// permutations, partitions, box diagrams and the column-convex machinery
namespace schubertlab {

// one-line notation, values 1..n; all accessors are 1-based
class Permutation {
public:
    explicit Permutation(std::vector<int> word);
    static Permutation identity(int n);
    static Permutation longest(int n); // n, n-1, ..., 1

    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[i - 1]; }
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;
    Permutation swapPositions(int i) const; // w * s_i, swaps entries i and i+1
    std::vector<int> descents() const;      // positions i with w(i) > w(i+1)
    int inversions() const;
    bool isIdentity() const;

    bool operator==(const Permutation& o) const { return word_ == o.word_; }
    bool operator<(const Permutation& o) const { return word_ < o.word_; }

private:
    std::vector<int> word_;
};

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

// weakly decreasing, nonnegative; trailing zeros are significant (declared length)
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::int64_t> parts);
    static Partition zero(int length);

    int size() const { return static_cast<int>(parts_.size()); }
    std::int64_t part(int i) const; // 1-based, 0 beyond declared length
    const std::vector<std::int64_t>& parts() const { return parts_; }
    std::int64_t sum() const;
    bool isZero() const;

    Partition scaled(std::int64_t t) const;
    Partition conjugate() const; // column lengths; declared length = part(1)

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<std::int64_t> parts_;
};

Partition add_partitions(const Partition& a, const Partition& b);

struct Box {
    int row = 0; // 1-based
    int col = 0;
    bool operator==(const Box& o) const { return row == o.row && col == o.col; }
    bool operator<(const Box& o) const { return row != o.row ? row < o.row : col < o.col; }
};

// finite set of boxes inside rows 1..rowCount (column positions unbounded)
class Diagram {
public:
    Diagram(int rowCount, std::vector<Box> boxes);

    int rowCount() const { return rowCount_; }
    const std::vector<Box>& boxes() const { return boxes_; } // sorted, deduped
    bool contains(int row, int col) const;
    int boxCount() const { return static_cast<int>(boxes_.size()); }

    // column -> occupied rows (ascending)
    std::vector<std::pair<int, std::vector<int>>> columns() const;

private:
    int rowCount_;
    std::vector<Box> boxes_;
};

// n partitions, the i-th of declared length i
class ParFamily {
public:
    explicit ParFamily(std::vector<Partition> shapes);

    int n() const { return static_cast<int>(shapes_.size()); }
    const Partition& shape(int i) const { return shapes_[i - 1]; }
    std::int64_t lambda(int i, int j) const { return shapes_[i - 1].part(j); }
    const std::vector<Partition>& shapes() const { return shapes_; }
    bool operator==(const ParFamily& o) const { return shapes_ == o.shapes_; }

private:
    std::vector<Partition> shapes_;
};

struct ReducedDiagram {
    Diagram tilde;
    Partition mu;
};

Diagram rothe_diagram(const Permutation& w);

// every column occupies a contiguous run of rows
bool is_column_convex(const Diagram& d);

// true iff w avoids both 3142 and 4132; witness gets the offending positions
bool avoids_patterns(const Permutation& w, std::vector<int>* witness = nullptr);

// shape lambda^(i) collects the columns whose lowest box is in row i,
// bottom-justified and read off in French notation (conjugate of the heights)
ParFamily par_family(const Diagram& d);

// canonical diagram realizing a family: columns placed left to right by end row
Diagram family_to_diagram(const ParFamily& fam);

// drop the columns with a first-row box, shift the rest up one row;
// mu_k = sum_{i=k..n} lambda^(i)_i records what was dropped
ReducedDiagram reduce_diagram(const Diagram& d);

// at most one descent; shape read at the descent position (n for the identity)
bool is_grassmannian(const Permutation& w);
std::optional<Partition> grassmannian_shape(const Permutation& w);

} // namespace schubertlab
