#pragma once

#include <span>
#include <vector>

#include "macfill/partition.hpp"

namespace macfill {

using Entry = int;

/// Multiplicity vector: counts[i] is the number of occurrences of letter i+1.
/// Trailing zeros are stripped so equal contents compare equal.
struct Content {
    std::vector<int> counts;

    friend auto operator<=>(const Content&, const Content&) = default;
};

Content make_content(std::vector<int> counts);

/// Positive-integer filling of a Young diagram. Entries are stored row-major;
/// rows are listed top to bottom.
class Filling {
public:
    Filling() = default;
    Filling(Partition shape, std::vector<std::vector<Entry>> rows);
    /// Row-major entries; size must equal |shape|.
    static Filling from_flat(Partition shape, std::vector<Entry> entries);

    const Partition& shape() const noexcept { return shape_; }
    Entry at(Cell u) const;
    Entry at(int row, int col) const { return at(Cell{row, col}); }
    /// Row i (1-based).
    std::span<const Entry> row(int i) const;
    const std::vector<Entry>& flat() const noexcept { return entries_; }
    std::vector<std::vector<Entry>> rows() const;

    friend bool operator==(const Filling&, const Filling&) = default;
    /// Lexicographic on row-major entries, then shape.
    friend auto operator<=>(const Filling& a, const Filling& b) {
        if (auto c = a.entries_ <=> b.entries_; c != 0) return c;
        return a.shape_ <=> b.shape_;
    }

private:
    void init();
    std::size_t offset(int row) const { return offsets_[row - 1]; }

    Partition shape_;
    std::vector<Entry> entries_;
    std::vector<std::size_t> offsets_;
};

Content content(const Filling& sigma);

/// Cells (i+1, j) whose entry exceeds the entry directly above, row-major.
std::vector<Cell> descents(const Filling& sigma);

long long maj(const Filling& sigma);

/// Inversion triples: (u, v, w) with v directly above u (a virtual 0 above
/// row 1) and w anywhere to the right of u in its row.
long long inv(const Filling& sigma);

/// q-inversion triples: (u', v', w') with u' directly below v' (a virtual
/// infinity below each column) and w' anywhere to the right of v'.
long long quinv(const Filling& sigma);

/// Each row as a sorted list.
std::vector<std::vector<Entry>> row_multisets(const Filling& sigma);

bool row_equivalent(const Filling& a, const Filling& b);

/// Membership in the triple set shared by inv and quinv:
/// y<z<x, x<y<z, z<x<y, or x=y!=z. Arguments are widened so callers can pass
/// 0 and "infinity" sentinels.
bool is_inversion_pattern(long long x, long long y, long long z) noexcept;

}  // namespace macfill
