#include "macfill/charge.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "macfill/error.hpp"

namespace macfill {

std::string Word::to_string() const {
    const bool compact = std::all_of(letters.begin(), letters.end(), [](Letter l) { return l >= 1 && l <= 9; });
    std::ostringstream out;
    for (std::size_t k = 0; k < letters.size(); ++k) {
        if (!compact && k) out << ' ';
        out << letters[k];
    }
    return out.str();
}

Word parse_word(const std::string& text) {
    Word w;
    const bool has_separator = text.find_first_of(", ") != std::string::npos;
    if (!has_separator) {
        for (char c : text) {
            if (c < '1' || c > '9') throw InputError("cannot parse word '" + text + "'");
            w.letters.push_back(c - '0');
        }
        return w;
    }
    std::string token;
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream tokens(normalized);
    while (tokens >> token) {
        if (!std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw InputError("cannot parse word '" + text + "'");
        const int value = std::stoi(token);
        if (value < 1) throw InputError("word letters must be positive in '" + text + "'");
        w.letters.push_back(value);
    }
    return w;
}

Content word_content(const Word& w) {
    std::vector<int> counts;
    for (Letter l : w.letters) {
        if (l < 1) throw InputError("word letters must be positive");
        if (static_cast<std::size_t>(l) > counts.size()) counts.resize(l, 0);
        ++counts[l - 1];
    }
    return make_content(std::move(counts));
}

bool has_partition_content(const Word& w) {
    const auto mu = word_content(w).counts;
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (mu[i] == 0 || (i > 0 && mu[i] > mu[i - 1])) return false;
    return true;
}

bool is_standard(const Word& w) {
    const auto mu = word_content(w).counts;
    return std::all_of(mu.begin(), mu.end(), [](int c) { return c == 1; });
}

namespace {

void require_standard(const Word& w) {
    if (!is_standard(w)) throw InputError("word '" + w.to_string() + "' is not standard");
}

void require_partition_content(const Word& w) {
    if (!has_partition_content(w))
        throw InputError("word '" + w.to_string() + "' does not have partition content");
}

// position_of[i] = index of letter i+1 in a standard word.
std::vector<std::size_t> standard_positions(const Word& w) {
    std::vector<std::size_t> pos(w.size());
    for (std::size_t idx = 0; idx < w.size(); ++idx) pos[w.letters[idx] - 1] = idx;
    return pos;
}

// Shared driver for both extraction algorithms. `pick` selects the index of
// the next letter among `remaining` given the previously chosen index.
template <class Pick>
SubwordDecomposition decompose(const Word& w, bool ascending, Pick pick) {
    require_partition_content(w);
    SubwordDecomposition out;
    std::vector<bool> used(w.size(), false);
    std::size_t left = w.size();
    while (left > 0) {
        Letter largest = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (!used[i]) largest = std::max(largest, w.letters[i]);
        std::vector<std::size_t> chosen;
        const Letter start = ascending ? 1 : largest;
        const Letter stop = ascending ? largest : 1;
        const int step = ascending ? 1 : -1;
        std::ptrdiff_t prev = -1;
        for (Letter target = start;; target += step) {
            const std::size_t idx = pick(used, target, prev);
            used[idx] = true;
            chosen.push_back(idx);
            prev = static_cast<std::ptrdiff_t>(idx);
            if (target == stop) break;
        }
        left -= chosen.size();
        std::sort(chosen.begin(), chosen.end());
        Word sub;
        for (std::size_t idx : chosen) sub.letters.push_back(w.letters[idx]);
        out.subwords.push_back(std::move(sub));
        out.positions.push_back(std::move(chosen));
    }
    return out;
}

}  // namespace

long long charge_standard(const Word& w) {
    require_standard(w);
    const auto pos = standard_positions(w);
    const long long k = static_cast<long long>(w.size());
    long long total = 0;
    for (long long i = 1; i < k; ++i)
        if (pos[i] > pos[i - 1]) total += k - i;
    return total;
}

long long cocharge_standard(const Word& w) {
    require_standard(w);
    const auto pos = standard_positions(w);
    const long long k = static_cast<long long>(w.size());
    long long total = 0;
    for (long long i = 1; i < k; ++i)
        if (pos[i] < pos[i - 1]) total += k - i;
    return total;
}

SubwordDecomposition ls_decompose(const Word& w) {
    const std::size_t n = w.size();
    // Scan leftwards from just before `prev` (or from the right end); on
    // failure wrap to the rightmost remaining occurrence.
    return decompose(w, true, [&](const std::vector<bool>& used, Letter target, std::ptrdiff_t prev) {
        const std::ptrdiff_t from = prev < 0 ? static_cast<std::ptrdiff_t>(n) - 1 : prev - 1;
        for (std::ptrdiff_t i = from; i >= 0; --i)
            if (!used[i] && w.letters[i] == target) return static_cast<std::size_t>(i);
        for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(n) - 1; i > from; --i)
            if (!used[i] && w.letters[i] == target) return static_cast<std::size_t>(i);
        throw std::logic_error("ls_decompose: letter missing from partition-content word");
    });
}

SubwordDecomposition killpatrick_decompose(const Word& w) {
    const std::size_t n = w.size();
    // Scan rightwards from just after `prev` (or from the left end); on
    // failure wrap to the leftmost remaining occurrence.
    return decompose(w, false, [&](const std::vector<bool>& used, Letter target, std::ptrdiff_t prev) {
        const std::size_t from = prev < 0 ? 0 : static_cast<std::size_t>(prev) + 1;
        for (std::size_t i = from; i < n; ++i)
            if (!used[i] && w.letters[i] == target) return i;
        for (std::size_t i = 0; i < from; ++i)
            if (!used[i] && w.letters[i] == target) return i;
        throw std::logic_error("killpatrick_decompose: letter missing from partition-content word");
    });
}

long long charge(const Word& w, ChargeMethod method) {
    const auto dec = method == ChargeMethod::classical ? ls_decompose(w) : killpatrick_decompose(w);
    long long total = 0;
    for (const auto& sub : dec.subwords) total += charge_standard(sub);
    return total;
}

long long cocharge(const Word& w) {
    long long total = 0;
    for (const auto& sub : killpatrick_decompose(w).subwords) total += cocharge_standard(sub);
    return total;
}

long long cocharge_complement_total(const Content& mu) {
    long long total = 0;
    const int width = mu.counts.empty() ? 0 : *std::max_element(mu.counts.begin(), mu.counts.end());
    for (int k = 1; k <= width; ++k) {
        long long column = 0;
        for (int c : mu.counts) column += c >= k ? 1 : 0;
        total += binomial2(column);
    }
    return total;
}

}  // namespace macfill
