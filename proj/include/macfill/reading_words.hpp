#pragma once

#include <vector>

#include "macfill/charge.hpp"
#include "macfill/filling.hpp"

namespace macfill {

/// standard: rows top to bottom, right to left within a row.
/// primed:   rows top to bottom, left to right within a row.
enum class CellOrder { standard, primed };

/// Strict total order on cells of a diagram.
bool cell_less(Cell u, Cell v, CellOrder order) noexcept;

/// Comparator over (value, cell): value descending, ties broken by the cell
/// order ascending.
struct ReadingOrder {
    CellOrder order;
    bool operator()(Entry a_value, Cell a, Entry b_value, Cell b) const noexcept {
        if (a_value != b_value) return a_value > b_value;
        return cell_less(a, b, order);
    }
};

std::vector<Cell> sort_cells(const Filling& sigma, CellOrder order);

/// Row indices of the cells along sort_cells.
Word cocharge_word(const Filling& sigma, CellOrder order = CellOrder::standard);

/// Reverse of cocharge_word.
Word charge_word(const Filling& sigma, CellOrder order = CellOrder::standard);

}  // namespace macfill
