#include "macfill/macdonald.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "macfill/error.hpp"

namespace macfill {

std::string to_string(Stat s) { return s == Stat::inv ? "inv" : "quinv"; }

long long statistic(const Filling& sigma, Stat s) { return s == Stat::inv ? inv(sigma) : quinv(sigma); }

FillingOdometer::FillingOdometer(Partition shape, int alphabet, std::vector<Entry> prefix)
    : shape_(std::move(shape)), alphabet_(alphabet), fixed_(prefix.size()), entries_(std::move(prefix)) {
    if (alphabet_ < 1) throw InputError("alphabet size must be at least 1");
    if (fixed_ > static_cast<std::size_t>(shape_.size()))
        throw InputError("enumeration prefix longer than the diagram");
    for (Entry e : entries_)
        if (e < 1 || e > alphabet_) throw InputError("enumeration prefix entry outside the alphabet");
    entries_.resize(shape_.size(), 1);
}

void FillingOdometer::advance() {
    if (done_) return;
    for (std::size_t k = entries_.size(); k > fixed_; --k) {
        if (entries_[k - 1] < alphabet_) {
            ++entries_[k - 1];
            return;
        }
        entries_[k - 1] = 1;
    }
    done_ = true;
}

std::uint64_t filling_count(const Partition& shape, int alphabet) {
    std::uint64_t total = 1;
    for (int k = 0; k < shape.size(); ++k) {
        if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(alphabet))
            return std::numeric_limits<std::uint64_t>::max();
        total *= static_cast<std::uint64_t>(alphabet);
    }
    return total;
}

std::vector<Filling> enumerate_fillings(const Partition& shape, int alphabet) {
    std::vector<Filling> out;
    for (FillingOdometer it(shape, alphabet); !it.done(); it.advance()) out.push_back(it.current());
    return out;
}

std::vector<std::vector<Entry>> enumeration_chunks(const Partition& shape, int alphabet) {
    if (alphabet < 1) throw InputError("alphabet size must be at least 1");
    const std::size_t prefix_len = std::min<std::size_t>(shape.size(), 2);
    std::vector<std::vector<Entry>> out;
    std::vector<Entry> prefix(prefix_len, 1);
    while (true) {
        out.push_back(prefix);
        std::size_t k = prefix_len;
        while (k > 0 && prefix[k - 1] == alphabet) prefix[--k] = 1;
        if (k == 0) break;
        ++prefix[k - 1];
    }
    return out;
}

std::vector<FillingRecord> filling_records(const Partition& shape, int alphabet, int threads) {
    auto parts = map_chunks<std::vector<FillingRecord>>(
        shape, alphabet, threads, [](FillingOdometer& it) {
            std::vector<FillingRecord> local;
            for (; !it.done(); it.advance()) {
                Filling f = it.current();
                FillingRecord rec{f, maj(f), inv(f), quinv(f)};
                local.push_back(std::move(rec));
            }
            return local;
        });
    std::vector<FillingRecord> out;
    for (auto& part : parts)
        for (auto& rec : part) out.push_back(std::move(rec));
    return out;
}

Monomial x_weight(const Filling& sigma, int alphabet) {
    Monomial m{std::vector<int>(alphabet, 0), 0, 0};
    for (Entry e : sigma.flat()) {
        if (e > alphabet) throw InputError("filling entry " + std::to_string(e) + " exceeds alphabet size");
        ++m.xexp[e - 1];
    }
    return m;
}

namespace {

using Selector = std::function<bool(const Filling&, long long& q_exponent, long long& t_exponent)>;

// Sum of q^a t^b x^sigma over fillings accepted by `select`, which also
// supplies the exponents.
MultiPoly filling_sum(const Partition& shape, int alphabet, int threads, const Selector& select) {
    auto parts = map_chunks<MultiPoly>(shape, alphabet, threads, [&](FillingOdometer& it) {
        MultiPoly local(alphabet);
        for (; !it.done(); it.advance()) {
            const Filling f = it.current();
            long long a = 0, b = 0;
            if (!select(f, a, b)) continue;
            Monomial m = x_weight(f, alphabet);
            m.qexp = static_cast<int>(a);
            m.texp = static_cast<int>(b);
            local.add_term(m, 1);
        }
        return local;
    });
    MultiPoly total(alphabet);
    for (const auto& part : parts) total.merge(part);
    return total;
}

}  // namespace

MultiPoly macdonald_poly(const Partition& shape, int alphabet, Stat stat, int threads) {
    return filling_sum(shape, alphabet, threads, [stat](const Filling& f, long long& a, long long& b) {
        a = statistic(f, stat);
        b = maj(f);
        return true;
    });
}

MultiPoly q_whittaker(const Partition& shape, int alphabet, WhittakerRoute route, int threads) {
    const long long top = n_stat(conjugate(shape));
    if (route == WhittakerRoute::extract)
        return coeff_of_q(macdonald_poly(shape, alphabet, Stat::inv, threads), static_cast<int>(top));
    const Stat stat = route == WhittakerRoute::inv_max_sum ? Stat::inv : Stat::quinv;
    return filling_sum(shape, alphabet, threads, [stat, top](const Filling& f, long long& a, long long& b) {
        if (statistic(f, stat) != top) return false;
        a = 0;
        b = maj(f);
        return true;
    });
}

MultiPoly modified_hall_littlewood(const Partition& shape, int alphabet, HallLittlewoodRoute route,
                                   int threads) {
    if (route == HallLittlewoodRoute::extract)
        return coeff_of_q(macdonald_poly(shape, alphabet, Stat::inv, threads), 0);
    const Stat stat = route == HallLittlewoodRoute::inv_zero_sum ? Stat::inv : Stat::quinv;
    return filling_sum(shape, alphabet, threads, [stat](const Filling& f, long long& a, long long& b) {
        if (statistic(f, stat) != 0) return false;
        a = 0;
        b = maj(f);
        return true;
    });
}

std::map<std::tuple<Content, long long, long long>, long long> StatProfile::by_content() const {
    std::map<std::tuple<Content, long long, long long>, long long> out;
    for (const auto& [key, count] : refined) {
        std::vector<int> counts;
        for (const auto& row : key.family)
            for (Entry e : row) {
                if (static_cast<std::size_t>(e) > counts.size()) counts.resize(e, 0);
                ++counts[e - 1];
            }
        out[{make_content(std::move(counts)), key.maj, key.stat}] += count;
    }
    return out;
}

long long StatProfile::total() const {
    long long sum = 0;
    for (const auto& [key, count] : refined) sum += count;
    return sum;
}

StatProfile stat_profile(const std::vector<FillingRecord>& records, Stat stat) {
    StatProfile profile;
    for (const auto& rec : records) {
        ProfileKey key{row_multisets(rec.filling), rec.maj, stat == Stat::inv ? rec.inv : rec.quinv};
        ++profile.refined[std::move(key)];
    }
    return profile;
}

StatProfile stat_profile(const Partition& shape, int alphabet, Stat stat, int threads) {
    return stat_profile(filling_records(shape, alphabet, threads), stat);
}

namespace {

std::string describe_family(const std::vector<std::vector<Entry>>& family) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < family.size(); ++i) {
        out << (i ? "," : "") << '{';
        for (std::size_t k = 0; k < family[i].size(); ++k) out << (k ? "," : "") << family[i][k];
        out << '}';
    }
    out << ']';
    return out.str();
}

std::string describe_class(const std::vector<const Filling*>& members) {
    std::ostringstream out;
    out << members.size() << " [";
    for (std::size_t k = 0; k < members.size(); ++k) out << (k ? " " : "") << describe_family(members[k]->rows());
    out << ']';
    return out.str();
}

}  // namespace

std::vector<MatchPair> conjecture_match(const std::vector<FillingRecord>& records) {
    std::map<ProfileKey, std::vector<const Filling*>> quinv_side, inv_side;
    for (const auto& rec : records) {
        auto family = row_multisets(rec.filling);
        quinv_side[ProfileKey{family, rec.maj, rec.quinv}].push_back(&rec.filling);
        inv_side[ProfileKey{std::move(family), rec.maj, rec.inv}].push_back(&rec.filling);
    }
    auto mismatch = [&](const ProfileKey& key) {
        static const std::vector<const Filling*> none;
        auto q = quinv_side.find(key);
        auto i = inv_side.find(key);
        throw Counterexample("class-size mismatch at family " + describe_family(key.family) + " maj " +
                             std::to_string(key.maj) + " stat " + std::to_string(key.stat) + ": quinv side " +
                             describe_class(q == quinv_side.end() ? none : q->second) + ", inv side " +
                             describe_class(i == inv_side.end() ? none : i->second));
    };
    auto by_value = [](const Filling* a, const Filling* b) { return *a < *b; };
    for (auto* side : {&quinv_side, &inv_side})
        for (auto& [key, members] : *side) std::sort(members.begin(), members.end(), by_value);
    std::vector<MatchPair> out;
    out.reserve(records.size());
    for (const auto& [key, sigmas] : quinv_side) {
        auto it = inv_side.find(key);
        if (it == inv_side.end() || it->second.size() != sigmas.size()) mismatch(key);
        for (std::size_t k = 0; k < sigmas.size(); ++k)
            out.push_back(MatchPair{*sigmas[k], *it->second[k], key.maj, key.stat});
    }
    for (const auto& [key, deltas] : inv_side)
        if (!quinv_side.count(key)) mismatch(key);
    return out;
}

std::vector<MatchPair> conjecture_match(const Partition& shape, int alphabet, int threads) {
    return conjecture_match(filling_records(shape, alphabet, threads));
}

}  // namespace macfill
