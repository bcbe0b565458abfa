#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace macfill {

/// A cell (row, col) of a Young diagram, both 1-based, English convention.
struct Cell {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Weakly decreasing sequence of positive parts. Trailing zeros are stripped
/// on construction; anything not weakly decreasing is rejected.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int num_rows() const noexcept { return static_cast<int>(parts_.size()); }
    /// Length of row i (1-based); 0 past the last row.
    int row_length(int i) const noexcept;
    /// Height of column j (1-based); 0 past the first row's end.
    int column_height(int j) const noexcept;
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }
    bool contains(Cell u) const noexcept;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

Partition conjugate(const Partition& shape);

/// n(shape) = sum over columns of C(column height, 2).
long long n_stat(const Partition& shape);

/// All cells in row-major order.
std::vector<Cell> cells(const Partition& shape);

/// Number of cells strictly below u in its column. Throws InputError if u is
/// not a cell of the shape.
int leg(const Partition& shape, Cell u);

/// Partitions of k, largest parts first (reverse lexicographic).
std::vector<Partition> partitions_of(int k);

/// Partitions with 1 <= |shape| <= max_size, grouped by size ascending.
std::vector<Partition> partitions_up_to(int max_size);

/// Parses "6,4,2" (also accepts an empty string for the empty partition).
Partition parse_partition(const std::string& text);

inline long long binomial2(long long n) { return n * (n - 1) / 2; }

}  // namespace macfill
