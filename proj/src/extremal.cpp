#include "macfill/extremal.hpp"

#include <algorithm>
#include <iterator>

#include "macfill/error.hpp"

namespace macfill {

namespace {

using Pool = std::multiset<Entry>;

void check_family_shape(const Partition& shape, const std::vector<std::vector<Entry>>& rows,
                        const char* what) {
    if (static_cast<int>(rows.size()) != shape.num_rows())
        throw InputError(std::string(what) + " has " + std::to_string(rows.size()) + " rows but shape " +
                         shape.to_string() + " has " + std::to_string(shape.num_rows()));
    for (int i = 1; i <= shape.num_rows(); ++i) {
        const auto& r = rows[i - 1];
        if (static_cast<int>(r.size()) != shape.row_length(i))
            throw InputError(std::string(what) + " row " + std::to_string(i) + " has " +
                             std::to_string(r.size()) + " elements, expected " +
                             std::to_string(shape.row_length(i)));
        for (Entry e : r)
            if (e < 1) throw InputError(std::string(what) + " row " + std::to_string(i) + " has non-positive entry");
    }
}

void check_sets(const Partition& shape, const RowSetFamily& family) {
    check_family_shape(shape, family.sets, "row-set family");
    for (std::size_t i = 0; i < family.sets.size(); ++i) {
        auto sorted = family.sets[i];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("row-set family row " + std::to_string(i + 1) + " repeats an element");
    }
}

Entry take(Pool& pool, Pool::iterator it) {
    const Entry x = *it;
    pool.erase(it);
    return x;
}

Entry take_largest(Pool& pool) { return take(pool, std::prev(pool.end())); }
Entry take_smallest(Pool& pool) { return take(pool, pool.begin()); }

}  // namespace

Filling build_inv_max(const Partition& shape, const RowSetFamily& family) {
    check_sets(shape, family);
    std::vector<std::vector<Entry>> rows(shape.num_rows());
    for (int i = 1; i <= shape.num_rows(); ++i) {
        Pool pool(family.sets[i - 1].begin(), family.sets[i - 1].end());
        auto& row = rows[i - 1];
        for (int j = 1; j <= shape.row_length(i); ++j) {
            if (i == 1) {
                row.push_back(take_largest(pool));
                continue;
            }
            const Entry above = rows[i - 2][j - 1];
            auto it = pool.upper_bound(above);  // first x > above
            row.push_back(it != pool.begin() ? take(pool, std::prev(it)) : take_largest(pool));
        }
    }
    return Filling(shape, std::move(rows));
}

Filling build_quinv_max(const Partition& shape, const RowSetFamily& family) {
    check_sets(shape, family);
    std::vector<std::vector<Entry>> rows(shape.num_rows());
    for (int i = shape.num_rows(); i >= 1; --i) {
        Pool pool(family.sets[i - 1].begin(), family.sets[i - 1].end());
        auto& row = rows[i - 1];
        for (int j = 1; j <= shape.row_length(i); ++j) {
            if (j > shape.row_length(i + 1)) {
                row.push_back(take_smallest(pool));
                continue;
            }
            const Entry below = rows[i][j - 1];
            auto it = pool.lower_bound(below);  // first x >= below
            row.push_back(it != pool.end() ? take(pool, it) : take_smallest(pool));
        }
    }
    return Filling(shape, std::move(rows));
}

Filling build_inv_zero(const Partition& shape, const RowMultisetFamily& family) {
    check_family_shape(shape, family.multisets, "row-multiset family");
    std::vector<std::vector<Entry>> rows(shape.num_rows());
    for (int i = 1; i <= shape.num_rows(); ++i) {
        Pool pool(family.multisets[i - 1].begin(), family.multisets[i - 1].end());
        auto& row = rows[i - 1];
        for (int j = 1; j <= shape.row_length(i); ++j) {
            if (i == 1) {
                row.push_back(take_smallest(pool));
                continue;
            }
            const Entry above = rows[i - 2][j - 1];
            auto it = pool.upper_bound(above);  // first x > above
            row.push_back(it != pool.end() ? take(pool, it) : take_smallest(pool));
        }
    }
    return Filling(shape, std::move(rows));
}

Filling build_quinv_zero(const Partition& shape, const RowMultisetFamily& family) {
    check_family_shape(shape, family.multisets, "row-multiset family");
    std::vector<std::vector<Entry>> rows(shape.num_rows());
    for (int i = shape.num_rows(); i >= 1; --i) {
        Pool pool(family.multisets[i - 1].begin(), family.multisets[i - 1].end());
        auto& row = rows[i - 1];
        for (int j = 1; j <= shape.row_length(i); ++j) {
            if (j > shape.row_length(i + 1)) {
                row.push_back(take_largest(pool));
                continue;
            }
            const Entry below = rows[i][j - 1];
            auto it = pool.lower_bound(below);  // first x >= below
            row.push_back(it != pool.begin() ? take(pool, std::prev(it)) : take_largest(pool));
        }
    }
    return Filling(shape, std::move(rows));
}

RowSetFamily row_sets(const Filling& sigma) { return RowSetFamily{row_multisets(sigma)}; }

RowMultisetFamily row_multiset_family(const Filling& sigma) { return RowMultisetFamily{row_multisets(sigma)}; }

Filling phi(const Filling& sigma) {
    const long long top = n_stat(conjugate(sigma.shape()));
    const long long have = inv(sigma);
    if (have != top)
        throw InputError("phi: filling is not inv-maximal (inv = " + std::to_string(have) + ", maximum " +
                         std::to_string(top) + ")");
    return build_quinv_max(sigma.shape(), row_sets(sigma));
}

Filling phi_inverse(const Filling& tau) {
    const long long top = n_stat(conjugate(tau.shape()));
    const long long have = quinv(tau);
    if (have != top)
        throw InputError("phi inverse: filling is not quinv-maximal (quinv = " + std::to_string(have) +
                         ", maximum " + std::to_string(top) + ")");
    return build_inv_max(tau.shape(), row_sets(tau));
}

Filling varphi(const Filling& sigma) {
    const long long have = inv(sigma);
    if (have != 0) throw InputError("varphi: filling has inv = " + std::to_string(have) + ", expected 0");
    return build_quinv_zero(sigma.shape(), row_multiset_family(sigma));
}

Filling varphi_inverse(const Filling& tau) {
    const long long have = quinv(tau);
    if (have != 0) throw InputError("varphi inverse: filling has quinv = " + std::to_string(have) + ", expected 0");
    return build_inv_zero(tau.shape(), row_multiset_family(tau));
}

std::string to_string(ExtremalClass c) {
    switch (c) {
        case ExtremalClass::inv_max: return "inv_max";
        case ExtremalClass::quinv_max: return "quinv_max";
        case ExtremalClass::inv_zero: return "inv_zero";
        case ExtremalClass::quinv_zero: return "quinv_zero";
    }
    return "?";
}

std::set<ExtremalClass> classify(const Filling& sigma) {
    const long long top = n_stat(conjugate(sigma.shape()));
    const long long i = inv(sigma);
    const long long q = quinv(sigma);
    std::set<ExtremalClass> out;
    if (i == top) out.insert(ExtremalClass::inv_max);
    if (q == top) out.insert(ExtremalClass::quinv_max);
    if (i == 0) out.insert(ExtremalClass::inv_zero);
    if (q == 0) out.insert(ExtremalClass::quinv_zero);
    return out;
}

Filling remove_first_column(const Filling& sigma) {
    std::vector<int> parts;
    std::vector<std::vector<Entry>> rows;
    for (int i = 1; i <= sigma.shape().num_rows(); ++i) {
        auto r = sigma.row(i);
        if (r.size() <= 1) break;
        parts.push_back(static_cast<int>(r.size()) - 1);
        rows.emplace_back(r.begin() + 1, r.end());
    }
    return Filling(Partition(std::move(parts)), std::move(rows));
}

}  // namespace macfill
