#include "macfill/filling.hpp"

#include <algorithm>
#include <limits>

#include "macfill/error.hpp"

namespace macfill {

namespace {
constexpr long long kBelowAll = 0;
constexpr long long kAboveAll = std::numeric_limits<long long>::max();
}  // namespace

Content make_content(std::vector<int> counts) {
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
    return Content{std::move(counts)};
}

Filling::Filling(Partition shape, std::vector<std::vector<Entry>> rows) : shape_(std::move(shape)) {
    if (static_cast<int>(rows.size()) != shape_.num_rows())
        throw InputError("filling has " + std::to_string(rows.size()) + " rows but shape " +
                         shape_.to_string() + " has " + std::to_string(shape_.num_rows()));
    entries_.reserve(shape_.size());
    for (int i = 1; i <= shape_.num_rows(); ++i) {
        const auto& r = rows[i - 1];
        if (static_cast<int>(r.size()) != shape_.row_length(i))
            throw InputError("row " + std::to_string(i) + " has " + std::to_string(r.size()) +
                             " entries but shape " + shape_.to_string() + " expects " +
                             std::to_string(shape_.row_length(i)));
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
    init();
}

Filling Filling::from_flat(Partition shape, std::vector<Entry> entries) {
    if (static_cast<int>(entries.size()) != shape.size())
        throw InputError("filling needs " + std::to_string(shape.size()) + " entries, got " +
                         std::to_string(entries.size()));
    Filling f;
    f.shape_ = std::move(shape);
    f.entries_ = std::move(entries);
    f.init();
    return f;
}

void Filling::init() {
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k] < 1)
            throw InputError("filling entries must be positive, got " + std::to_string(entries_[k]));
    offsets_.assign(shape_.num_rows() + 1, 0);
    for (int i = 1; i <= shape_.num_rows(); ++i) offsets_[i] = offsets_[i - 1] + shape_.row_length(i);
}

Entry Filling::at(Cell u) const {
    if (!shape_.contains(u))
        throw InputError("cell (" + std::to_string(u.row) + "," + std::to_string(u.col) +
                         ") is not in shape " + shape_.to_string());
    return entries_[offset(u.row) + u.col - 1];
}

std::span<const Entry> Filling::row(int i) const {
    if (i < 1 || i > shape_.num_rows()) throw InputError("row " + std::to_string(i) + " out of range");
    return std::span<const Entry>(entries_).subspan(offset(i), shape_.row_length(i));
}

std::vector<std::vector<Entry>> Filling::rows() const {
    std::vector<std::vector<Entry>> out;
    for (int i = 1; i <= shape_.num_rows(); ++i) {
        auto r = row(i);
        out.emplace_back(r.begin(), r.end());
    }
    return out;
}

Content content(const Filling& sigma) {
    std::vector<int> counts;
    for (Entry e : sigma.flat()) {
        if (static_cast<std::size_t>(e) > counts.size()) counts.resize(e, 0);
        ++counts[e - 1];
    }
    return make_content(std::move(counts));
}

std::vector<Cell> descents(const Filling& sigma) {
    std::vector<Cell> out;
    const auto& shape = sigma.shape();
    for (int i = 2; i <= shape.num_rows(); ++i) {
        auto here = sigma.row(i);
        auto above = sigma.row(i - 1);
        for (std::size_t j = 0; j < here.size(); ++j)
            if (here[j] > above[j]) out.push_back({i, static_cast<int>(j) + 1});
    }
    return out;
}

long long maj(const Filling& sigma) {
    long long total = 0;
    for (Cell u : descents(sigma)) total += leg(sigma.shape(), u) + 1;
    return total;
}

bool is_inversion_pattern(long long x, long long y, long long z) noexcept {
    return (y < z && z < x) || (x < y && y < z) || (z < x && x < y) || (x == y && y != z);
}

long long inv(const Filling& sigma) {
    long long count = 0;
    const auto& shape = sigma.shape();
    for (int i = 1; i <= shape.num_rows(); ++i) {
        auto here = sigma.row(i);
        std::span<const Entry> above = i > 1 ? sigma.row(i - 1) : std::span<const Entry>{};
        for (std::size_t a = 0; a < here.size(); ++a) {
            const long long x = here[a];
            const long long y = i > 1 ? above[a] : kBelowAll;
            for (std::size_t b = a + 1; b < here.size(); ++b)
                if (is_inversion_pattern(x, y, here[b])) ++count;
        }
    }
    return count;
}

long long quinv(const Filling& sigma) {
    long long count = 0;
    const auto& shape = sigma.shape();
    for (int i = 1; i <= shape.num_rows(); ++i) {
        auto here = sigma.row(i);
        std::span<const Entry> below = i < shape.num_rows() ? sigma.row(i + 1) : std::span<const Entry>{};
        for (std::size_t a = 0; a < here.size(); ++a) {
            const long long x = a < below.size() ? below[a] : kAboveAll;
            const long long y = here[a];
            for (std::size_t b = a + 1; b < here.size(); ++b)
                if (is_inversion_pattern(x, y, here[b])) ++count;
        }
    }
    return count;
}

std::vector<std::vector<Entry>> row_multisets(const Filling& sigma) {
    auto out = sigma.rows();
    for (auto& r : out) std::sort(r.begin(), r.end());
    return out;
}

bool row_equivalent(const Filling& a, const Filling& b) {
    return a.shape() == b.shape() && row_multisets(a) == row_multisets(b);
}

}  // namespace macfill
