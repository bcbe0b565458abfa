#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "macfill/charge.hpp"
#include "macfill/macdonald.hpp"
#include "macfill/reading_words.hpp"

using namespace macfill;

TEST_CASE("cell orders") {
    CHECK(cell_less({1, 5}, {2, 1}, CellOrder::standard));
    CHECK(cell_less({1, 5}, {1, 2}, CellOrder::standard));
    CHECK_FALSE(cell_less({1, 2}, {1, 5}, CellOrder::standard));
    CHECK(cell_less({1, 2}, {1, 5}, CellOrder::primed));
    CHECK_FALSE(cell_less({2, 1}, {1, 5}, CellOrder::primed));
    CHECK_FALSE(cell_less({1, 1}, {1, 1}, CellOrder::primed));

    const ReadingOrder by{CellOrder::standard};
    CHECK(by(5, {3, 1}, 4, {1, 1}));          // larger value first
    CHECK(by(5, {1, 4}, 5, {1, 3}));          // tie: standard order
    CHECK_FALSE(by(5, {1, 3}, 5, {1, 4}));
}

TEST_CASE("sorted cells of the descent example") {
    const Filling f = fx::desc_example();
    const std::vector<Cell> standard = {{1, 6}, {2, 4}, {1, 5}, {1, 4}, {1, 3}, {2, 2},
                                        {1, 2}, {3, 1}, {2, 3}, {2, 1}, {1, 1}, {3, 2}};
    CHECK(sort_cells(f, CellOrder::standard) == standard);
    const std::vector<Cell> primed = {{1, 6}, {2, 4}, {1, 5}, {1, 3}, {1, 4}, {2, 2},
                                      {1, 2}, {3, 1}, {2, 1}, {2, 3}, {1, 1}, {3, 2}};
    CHECK(sort_cells(f, CellOrder::primed) == primed);
    CHECK(sort_cells(Filling(Partition({2, 1}), {{1, 1}, {1}}), CellOrder::standard) ==
          std::vector<Cell>{{1, 2}, {1, 1}, {2, 1}});
}

TEST_CASE("reading words of the worked fillings") {
    const Filling f = fx::desc_example();
    CHECK(cocharge_word(f).to_string() == "121112132213");
    CHECK(cocharge_word(f, CellOrder::primed).to_string() == "121112132213");
    CHECK(charge_word(f).to_string() == "312231211121");
    CHECK(charge_word(f, CellOrder::primed).to_string() == "312231211121");

    CHECK(cocharge_word(Filling(Partition({4}), {{3, 1, 4, 1}})).to_string() == "1111");
    CHECK(charge_word(Filling(Partition({1}), {{9}})).to_string() == "1");

    const Word w_max = charge_word(fx::inv_max_example());
    CHECK(w_max.to_string() == "121112131421433232");
    CHECK(charge(w_max) == 7);
    const Word w_max_primed = charge_word(fx::quinv_max_example(), CellOrder::primed);
    CHECK(w_max_primed.to_string() == "121112131421433232");
    CHECK(charge(w_max_primed) == 7);

    CHECK(cocharge_word(fx::inv_zero_example()).to_string() == "341112231241123312");
    const Word cw_zero_primed = cocharge_word(fx::quinv_zero_example(), CellOrder::primed);
    CHECK(cw_zero_primed.to_string() == "341112231241123312");
    CHECK(cocharge(cw_zero_primed) == 15);
}

TEST_CASE("reading word properties, sizes up to 6 over 3 letters") {
    for (const auto& shape : partitions_up_to(6))
        for (const auto& f : enumerate_fillings(shape, 3)) {
            const Word cw = cocharge_word(f, CellOrder::standard);
            REQUIRE(cw == cocharge_word(f, CellOrder::primed));
            Word rev = cw;
            std::reverse(rev.letters.begin(), rev.letters.end());
            REQUIRE(charge_word(f) == rev);
            REQUIRE(word_content(cw).counts == shape.parts());
            REQUIRE(has_partition_content(cw));
        }
}
