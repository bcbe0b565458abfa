#include "macfill/reading_words.hpp"

#include <algorithm>

namespace macfill {

bool cell_less(Cell u, Cell v, CellOrder order) noexcept {
    if (u.row != v.row) return u.row < v.row;
    return order == CellOrder::standard ? u.col > v.col : u.col < v.col;
}

std::vector<Cell> sort_cells(const Filling& sigma, CellOrder order) {
    auto out = cells(sigma.shape());
    const ReadingOrder cmp{order};
    std::sort(out.begin(), out.end(),
              [&](Cell a, Cell b) { return cmp(sigma.at(a), a, sigma.at(b), b); });
    return out;
}

Word cocharge_word(const Filling& sigma, CellOrder order) {
    Word w;
    for (Cell u : sort_cells(sigma, order)) w.letters.push_back(u.row);
    return w;
}

Word charge_word(const Filling& sigma, CellOrder order) {
    Word w = cocharge_word(sigma, order);
    std::reverse(w.letters.begin(), w.letters.end());
    return w;
}

}  // namespace macfill
