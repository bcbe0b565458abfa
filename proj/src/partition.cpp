#include "macfill/partition.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "macfill/error.hpp"

namespace macfill {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw InputError("partition parts must be positive, got " + std::to_string(parts_[i]) +
                             " at position " + std::to_string(i + 1));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InputError("partition parts must be weakly decreasing: " + to_string());
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::row_length(int i) const noexcept {
    return (i >= 1 && i <= num_rows()) ? parts_[i - 1] : 0;
}

int Partition::column_height(int j) const noexcept {
    int h = 0;
    while (h < num_rows() && parts_[h] >= j) ++h;
    return j >= 1 ? h : 0;
}

bool Partition::contains(Cell u) const noexcept {
    return u.row >= 1 && u.row <= num_rows() && u.col >= 1 && u.col <= parts_[u.row - 1];
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
    out << ']';
    return out.str();
}

Partition conjugate(const Partition& shape) {
    std::vector<int> out;
    const int width = shape.row_length(1);
    out.reserve(width);
    for (int k = 1; k <= width; ++k) out.push_back(shape.column_height(k));
    return Partition(std::move(out));
}

long long n_stat(const Partition& shape) {
    const Partition columns = conjugate(shape);
    long long total = 0;
    for (int part : columns.parts()) total += binomial2(part);
    return total;
}

std::vector<Cell> cells(const Partition& shape) {
    std::vector<Cell> out;
    out.reserve(shape.size());
    for (int i = 1; i <= shape.num_rows(); ++i)
        for (int j = 1; j <= shape.row_length(i); ++j) out.push_back({i, j});
    return out;
}

int leg(const Partition& shape, Cell u) {
    if (!shape.contains(u))
        throw InputError("cell (" + std::to_string(u.row) + "," + std::to_string(u.col) +
                         ") is not in shape " + shape.to_string());
    return shape.column_height(u.col) - u.row;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
    std::vector<Partition> out;
    if (k < 0) return out;
    std::vector<int> prefix;
    partitions_rec(k, k, prefix, out);
    return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
    std::vector<Partition> out;
    for (int k = 1; k <= max_size; ++k) {
        auto level = partitions_of(k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    if (!text.empty() && text.back() == ',') throw InputError("cannot parse partition '" + text + "'");
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        const char* first = text.data() + pos;
        const char* last = text.data() + end;
        while (first < last && *first == ' ') ++first;
        while (last > first && last[-1] == ' ') --last;
        int value = 0;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last || first == last)
            throw InputError("cannot parse partition '" + text + "'");
        parts.push_back(value);
        pos = end + 1;
        if (end == text.size()) break;
    }
    return Partition(std::move(parts));
}

}  // namespace macfill
