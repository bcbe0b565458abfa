#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "macfill/filling.hpp"
#include "macfill/poly.hpp"

namespace macfill {

enum class Stat { inv, quinv };

std::string to_string(Stat s);
long long statistic(const Filling& sigma, Stat s);

/// Odometer over every filling of a shape with entries in {1..n}. Cells are
/// visited in row-major order with the last cell least significant, so the
/// sequence is lexicographic in the row-major entries. A fixed prefix pins the
/// first cells, which is how the enumeration is split into independent ranges.
class FillingOdometer {
public:
    FillingOdometer(Partition shape, int alphabet, std::vector<Entry> prefix = {});

    bool done() const noexcept { return done_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    Filling current() const { return Filling::from_flat(shape_, entries_); }
    void advance();

private:
    Partition shape_;
    int alphabet_;
    std::size_t fixed_;
    std::vector<Entry> entries_;
    bool done_ = false;
};

/// n^|shape|, saturating at UINT64_MAX.
std::uint64_t filling_count(const Partition& shape, int alphabet);

std::vector<Filling> enumerate_fillings(const Partition& shape, int alphabet);

/// Prefixes that split the enumeration into disjoint ranges, in enumeration
/// order. Concatenating the ranges reproduces enumerate_fillings.
std::vector<std::vector<Entry>> enumeration_chunks(const Partition& shape, int alphabet);

/// Runs fn on every chunk using up to `threads` workers and returns the
/// per-chunk results in chunk order, independent of scheduling.
template <class Partial>
std::vector<Partial> map_chunks(const Partition& shape, int alphabet, int threads,
                                const std::function<Partial(FillingOdometer&)>& fn) {
    const auto chunks = enumeration_chunks(shape, alphabet);
    std::vector<Partial> results(chunks.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(chunks.size());
    auto worker = [&] {
        for (std::size_t k = next++; k < chunks.size(); k = next++) {
            try {
                FillingOdometer odometer(shape, alphabet, chunks[k]);
                results[k] = fn(odometer);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(chunks.size())));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

struct FillingRecord {
    Filling filling;
    long long maj = 0;
    long long inv = 0;
    long long quinv = 0;
};

/// All fillings with their statistics, in enumeration order.
std::vector<FillingRecord> filling_records(const Partition& shape, int alphabet, int threads = 1);

/// x^sigma as a monomial over x_1..x_n (q and t exponents zero).
Monomial x_weight(const Filling& sigma, int alphabet);

/// Sum of q^stat t^maj x^sigma over fillings with entries <= n.
MultiPoly macdonald_poly(const Partition& shape, int alphabet, Stat stat, int threads = 1);

enum class WhittakerRoute { extract, inv_max_sum, quinv_max_sum };
enum class HallLittlewoodRoute { extract, inv_zero_sum, quinv_zero_sum };

/// Coefficient of q^{n(shape')}: the q-Whittaker polynomial of shape'.
MultiPoly q_whittaker(const Partition& shape, int alphabet, WhittakerRoute route, int threads = 1);

/// q-constant term: the modified Hall-Littlewood polynomial.
MultiPoly modified_hall_littlewood(const Partition& shape, int alphabet, HallLittlewoodRoute route,
                                   int threads = 1);

/// Joint distribution of (row-multiset family, maj, stat). The family
/// determines the content, so this refines the (content, maj, stat) profile.
struct ProfileKey {
    std::vector<std::vector<Entry>> family;
    long long maj = 0;
    long long stat = 0;

    friend auto operator<=>(const ProfileKey&, const ProfileKey&) = default;
};

struct StatProfile {
    std::map<ProfileKey, long long> refined;

    /// Multiplicities keyed by (content, maj, stat).
    std::map<std::tuple<Content, long long, long long>, long long> by_content() const;
    long long total() const;

    friend bool operator==(const StatProfile&, const StatProfile&) = default;
};

StatProfile stat_profile(const Partition& shape, int alphabet, Stat stat, int threads = 1);
StatProfile stat_profile(const std::vector<FillingRecord>& records, Stat stat);

struct MatchPair {
    Filling sigma;  // quinv(sigma) = stat
    Filling delta;  // inv(delta) = stat, delta row-equivalent to sigma
    long long maj = 0;
    long long stat = 0;
};

/// Pairs the k-th smallest filling of each (family, maj, quinv = p) class with
/// the k-th smallest of the matching (family, maj, inv = p) class. Throws
/// Counterexample naming the key and both classes if their sizes differ.
std::vector<MatchPair> conjecture_match(const Partition& shape, int alphabet, int threads = 1);
std::vector<MatchPair> conjecture_match(const std::vector<FillingRecord>& records);

}  // namespace macfill
