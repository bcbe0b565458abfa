#pragma once

#include <string>
#include <vector>

#include "macfill/filling.hpp"

namespace macfill {

using Letter = int;

struct Word {
    std::vector<Letter> letters;

    std::size_t size() const noexcept { return letters.size(); }
    bool empty() const noexcept { return letters.empty(); }
    /// Compact digit string when every letter is <= 9, otherwise the
    /// letters separated by spaces.
    std::string to_string() const;

    friend auto operator<=>(const Word&, const Word&) = default;
};

/// Accepts a compact digit string ("121123") or a comma/space separated list.
Word parse_word(const std::string& text);

Content word_content(const Word& w);

/// True iff letter multiplicities weakly decrease: mu_1 >= mu_2 >= ...
/// (a letter may not appear unless every smaller letter does).
bool has_partition_content(const Word& w);

bool is_standard(const Word& w);

/// Standard subwords of a word with partition content. positions[k] lists the
/// 0-based indices (ascending) of subword k's letters in the parent word.
struct SubwordDecomposition {
    std::vector<Word> subwords;
    std::vector<std::vector<std::size_t>> positions;
};

enum class ChargeMethod { classical, killpatrick };

/// Sum of (k - i) over i such that i+1 lies to the right of i.
long long charge_standard(const Word& w);
/// Sum of (k - i) over i such that i+1 lies to the left of i.
long long cocharge_standard(const Word& w);

/// Lascoux-Schutzenberger extraction: start at the rightmost 1, scan left for
/// 2, 3, ...; wrap to the rightmost remaining letter when nothing is found.
SubwordDecomposition ls_decompose(const Word& w);

/// Killpatrick extraction: start at the leftmost largest letter m, scan right
/// for m-1, ..., 1; wrap to the leftmost remaining letter when needed.
SubwordDecomposition killpatrick_decompose(const Word& w);

long long charge(const Word& w, ChargeMethod method = ChargeMethod::classical);

/// Sum of cocharges of the Killpatrick subwords.
long long cocharge(const Word& w);

/// Sum over k of C(mu'_k, 2), the charge/cocharge complement for content mu.
long long cocharge_complement_total(const Content& mu);

}  // namespace macfill
