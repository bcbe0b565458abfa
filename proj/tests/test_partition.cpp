#include "doctest.h"

#include "macfill/error.hpp"
#include "macfill/partition.hpp"
#include "oracles.hpp"

using namespace macfill;

namespace {
std::vector<int> parts(const Partition& p) { return p.parts(); }
}  // namespace

TEST_CASE("partition construction normalizes and validates") {
    CHECK(parts(Partition({3, 1, 0, 0})) == std::vector<int>{3, 1});
    CHECK(Partition({0}).empty());
    CHECK(Partition({6, 4, 2}).size() == 12);
    CHECK_THROWS_AS(Partition({1, 2}), InputError);
    CHECK_THROWS_AS(Partition({2, -1}), InputError);
    CHECK_THROWS_AS(Partition({2, 0, 1}), InputError);
}

TEST_CASE("row lengths, column heights and membership") {
    const Partition p({6, 4, 2});
    CHECK(p.row_length(2) == 4);
    CHECK(p.row_length(4) == 0);
    CHECK(p.column_height(3) == 2);
    CHECK(p.column_height(7) == 0);
    CHECK(p.contains(Cell{3, 2}));
    CHECK_FALSE(p.contains(Cell{4, 2}));
    CHECK_FALSE(p.contains(Cell{3, 3}));
    CHECK(p.to_string() == "[6,4,2]");
}

TEST_CASE("conjugate") {
    CHECK(parts(conjugate(Partition({6, 4, 2}))) == std::vector<int>{3, 3, 2, 2, 1, 1});
    CHECK(conjugate(Partition{}).empty());
    // columns 3 and 4 stop at row 3 because row 4 has only two cells
    CHECK(parts(conjugate(Partition({7, 5, 4, 2}))) == std::vector<int>{4, 4, 3, 3, 2, 1, 1});
}

TEST_CASE("conjugate is an involution and matches grid counting up to size 10") {
    for (int k = 0; k <= 10; ++k)
        for (const auto& p : partitions_of(k)) {
            CHECK(conjugate(conjugate(p)) == p);
            CHECK(parts(conjugate(p)) == oracle::conjugate_parts(p.parts()));
        }
}

TEST_CASE("n statistic") {
    // Columns of (1,1) have heights (2), so one pair; a single row has none.
    CHECK(n_stat(Partition({1, 1})) == 1);
    CHECK(n_stat(Partition({2})) == 0);
    CHECK(n_stat(conjugate(Partition({2}))) == 1);
    CHECK(n_stat(conjugate(Partition({6, 4, 2}))) == 22);
    CHECK(n_stat(conjugate(Partition({7, 5, 4, 2}))) == 38);
    CHECK(n_stat(Partition{}) == 0);
}

TEST_CASE("n statistic equals the sum of legs up to size 10") {
    for (int k = 0; k <= 10; ++k)
        for (const auto& p : partitions_of(k)) {
            long long legs = 0;
            for (Cell u : cells(p)) legs += leg(p, u);
            CHECK(n_stat(p) == legs);
        }
}

TEST_CASE("cells in row-major order") {
    CHECK(cells(Partition({2, 1})) == std::vector<Cell>{{1, 1}, {1, 2}, {2, 1}});
    CHECK(cells(Partition{}).empty());
    CHECK(cells(Partition({1, 1, 1})) == std::vector<Cell>{{1, 1}, {2, 1}, {3, 1}});
}

TEST_CASE("leg") {
    CHECK(leg(Partition({6, 4, 2}), Cell{2, 1}) == 1);
    CHECK(leg(Partition({6, 4, 2}), Cell{3, 1}) == 0);
    CHECK(leg(Partition({7, 5, 4, 2}), Cell{1, 3}) == 2);
    CHECK_THROWS_AS(leg(Partition({6, 4, 2}), Cell{4, 2}), InputError);
    CHECK_THROWS_AS(leg(Partition({6, 4, 2}), Cell{0, 1}), InputError);
}

TEST_CASE("partition enumeration") {
    const std::vector<std::size_t> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int k = 0; k <= 10; ++k) CHECK(partitions_of(k).size() == counts[k]);
    const auto four = partitions_of(4);
    CHECK(parts(four.front()) == std::vector<int>{4});
    CHECK(parts(four.back()) == std::vector<int>{1, 1, 1, 1});
    CHECK(partitions_up_to(4).size() == 1 + 2 + 3 + 5);
    CHECK(partitions_up_to(0).empty());
}

TEST_CASE("parse_partition") {
    CHECK(parts(parse_partition("6,4,2")) == std::vector<int>{6, 4, 2});
    CHECK(parse_partition("").empty());
    CHECK_THROWS_AS(parse_partition("6,4,"), InputError);
    CHECK_THROWS_AS(parse_partition("2,x"), InputError);
    CHECK_THROWS_AS(parse_partition("1,3"), InputError);
}
