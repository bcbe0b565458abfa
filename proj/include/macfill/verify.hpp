#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "macfill/charge.hpp"
#include "macfill/partition.hpp"

namespace macfill {

enum class Suite { hhl_equality, symmetry, whittaker, hall_littlewood, charge_equiv, uniqueness, conjecture };

std::string to_string(Suite s);
/// Accepts the CLI spellings ("hhl-equality", "charge-equiv", ...).
Suite parse_suite(const std::string& name);

struct VerifyBounds {
    std::optional<Partition> shape;  // restrict to one shape
    int max_size = 4;                // otherwise all shapes with 1 <= |shape| <= max_size
    int alphabet = 3;
    int max_length = 8;              // charge-equiv: word length
    int max_letter = 4;              // charge-equiv: largest letter
    int threads = 1;
};

/// Desk-scale ceilings. Raising them is allowed up to the hard caps below.
struct Ceilings {
    int max_size = 7;
    int alphabet = 4;
    int word_length = 10;
};

inline constexpr std::uint64_t kHardCapFillings = 50'000'000;
inline constexpr std::uint64_t kHardCapWords = 50'000'000;

std::vector<Partition> shapes_for(const VerifyBounds& bounds);
/// Upper bound on the work a suite performs: fillings for shape suites,
/// candidate words for charge-equiv.
std::uint64_t estimated_cost(Suite suite, const VerifyBounds& bounds);
/// Throws InputError naming the violated ceiling (and the cost estimate when
/// the hard cap is hit).
void check_bounds(Suite suite, const VerifyBounds& bounds, const Ceilings& ceilings);

/// Every word of partition content with 1 <= length <= max_length and
/// letters <= max_letter, shortest first.
std::vector<Word> partition_content_words(int max_length, int max_letter);

struct VerifyReport {
    bool passed = true;
    int checks = 0;
    int failures = 0;
    std::string text;  // PASS/FAIL line per check, then a summary line
};

/// Runs a suite. The report text does not depend on the thread count.
VerifyReport run_suite(Suite suite, const VerifyBounds& bounds);

}  // namespace macfill
