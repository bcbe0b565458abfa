#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "macfill/filling.hpp"
#include "macfill/partition.hpp"

namespace fx {

using macfill::Filling;
using macfill::Partition;

// Two nearby fillings of shape (6,4,2). The first carries maj 6 and the
// descents (2,1),(3,1),(2,2),(2,4); the second carries inv 3, quinv 6.
inline Filling desc_example() { return Filling(Partition({6, 4, 2}), {{1, 3, 5, 5, 6, 8}, {2, 4, 2, 7}, {3, 1}}); }
inline Filling triple_example() { return Filling(Partition({6, 4, 2}), {{1, 3, 5, 2, 6, 8}, {2, 4, 1, 7}, {3, 1}}); }

inline Partition big_shape() { return Partition({7, 5, 4, 2}); }

// Row sets {1..7}, {2,5,7,9,10}, {6,8,9,10}, {7,8}.
inline std::vector<std::vector<int>> max_family() { return {{1, 2, 3, 4, 5, 6, 7}, {2, 5, 7, 9, 10}, {6, 8, 9, 10}, {7, 8}}; }
inline Filling inv_max_example() {
    return Filling(big_shape(), {{7, 6, 5, 4, 3, 2, 1}, {7, 5, 2, 10, 9}, {6, 10, 9, 8}, {8, 7}});
}
inline Filling quinv_max_example() {
    return Filling(big_shape(), {{1, 2, 7, 3, 5, 4, 6}, {9, 10, 7, 2, 5}, {8, 9, 6, 10}, {7, 8}});
}

// Row multisets {1,2,2,3,4,4,4}, {1,2,3,4,4}, {2,2,4,5}, {3,5}.
inline std::vector<std::vector<int>> zero_family() { return {{1, 2, 2, 3, 4, 4, 4}, {1, 2, 3, 4, 4}, {2, 2, 4, 5}, {3, 5}}; }
inline Filling inv_zero_example() {
    return Filling(big_shape(), {{1, 2, 2, 3, 4, 4, 4}, {2, 3, 4, 4, 1}, {4, 5, 2, 2}, {5, 3}});
}
inline Filling quinv_zero_example() {
    return Filling(big_shape(), {{2, 4, 3, 2, 1, 4, 4}, {3, 1, 4, 4, 2}, {4, 2, 5, 2}, {5, 3}});
}

// Random partition with at most max_rows rows and parts at most max_part.
inline Partition random_shape(std::mt19937& rng, int max_rows, int max_part) {
    std::uniform_int_distribution<int> rows_d(1, max_rows), part_d(1, max_part);
    std::vector<int> parts(rows_d(rng));
    for (int& p : parts) p = part_d(rng);
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

// One set per row: a random subset of {1..max_entry} of the right size.
inline std::vector<std::vector<int>> random_set_family(std::mt19937& rng, const Partition& shape, int max_entry) {
    std::vector<std::vector<int>> family;
    for (int len : shape.parts()) {
        std::vector<int> pool(max_entry);
        for (int v = 1; v <= max_entry; ++v) pool[v - 1] = v;
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(len);
        family.push_back(pool);
    }
    return family;
}

inline std::vector<std::vector<int>> random_multiset_family(std::mt19937& rng, const Partition& shape, int max_entry) {
    std::uniform_int_distribution<int> d(1, max_entry);
    std::vector<std::vector<int>> family;
    for (int len : shape.parts()) {
        std::vector<int> row(len);
        for (int& v : row) v = d(rng);
        family.push_back(row);
    }
    return family;
}

}  // namespace fx
