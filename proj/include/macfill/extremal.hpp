#pragma once

#include <set>
#include <string>
#include <vector>

#include "macfill/filling.hpp"

namespace macfill {

/// One set per row, |S_i| = lambda_i, elements distinct. Element order is
/// irrelevant.
struct RowSetFamily {
    std::vector<std::vector<Entry>> sets;
};

/// One multiset per row, |M_i| = lambda_i.
struct RowMultisetFamily {
    std::vector<std::vector<Entry>> multisets;
};

/// Row 1 strictly decreasing; below it, left to right, the largest unused
/// x <= entry above, else the largest unused.
Filling build_inv_max(const Partition& shape, const RowSetFamily& family);

/// Bottom row strictly increasing; above it, left to right, the smallest
/// unused x >= entry below, else the smallest unused (also when no cell is
/// below).
Filling build_quinv_max(const Partition& shape, const RowSetFamily& family);

/// Row 1 weakly increasing; below it, left to right, the smallest unused
/// x > entry above, else the smallest unused.
Filling build_inv_zero(const Partition& shape, const RowMultisetFamily& family);

/// Bottom row non-increasing; above it, left to right, the largest unused
/// x < entry below, else the largest unused (also when no cell is below).
Filling build_quinv_zero(const Partition& shape, const RowMultisetFamily& family);

RowSetFamily row_sets(const Filling& sigma);
RowMultisetFamily row_multiset_family(const Filling& sigma);

/// inv-maximal -> quinv-maximal filling with the same row sets.
/// Throws InputError unless inv(sigma) = n(shape').
Filling phi(const Filling& sigma);
/// quinv-maximal -> inv-maximal. Throws InputError unless quinv is maximal.
Filling phi_inverse(const Filling& tau);

/// inv-zero -> quinv-zero filling with the same row multisets.
/// Throws InputError unless inv(sigma) = 0.
Filling varphi(const Filling& sigma);
/// quinv-zero -> inv-zero. Throws InputError unless quinv(tau) = 0.
Filling varphi_inverse(const Filling& tau);

enum class ExtremalClass { inv_max, quinv_max, inv_zero, quinv_zero };

std::string to_string(ExtremalClass c);

std::set<ExtremalClass> classify(const Filling& sigma);

/// Drops column 1; the remaining columns form a filling of shape
/// (lambda_1 - 1, lambda_2 - 1, ...).
Filling remove_first_column(const Filling& sigma);

}  // namespace macfill
