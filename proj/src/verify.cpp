#include "macfill/verify.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "macfill/error.hpp"
#include "macfill/extremal.hpp"
#include "macfill/json_io.hpp"
#include "macfill/macdonald.hpp"
#include "macfill/reading_words.hpp"

namespace macfill {

namespace {

const std::vector<std::pair<Suite, std::string>>& suite_names() {
    static const std::vector<std::pair<Suite, std::string>> names = {
        {Suite::hhl_equality, "hhl-equality"}, {Suite::symmetry, "symmetry"},
        {Suite::whittaker, "whittaker"},       {Suite::hall_littlewood, "hall-littlewood"},
        {Suite::charge_equiv, "charge-equiv"}, {Suite::uniqueness, "uniqueness"},
        {Suite::conjecture, "conjecture"},
    };
    return names;
}

class ReportBuilder {
public:
    void check(bool ok, const std::string& what, const std::string& detail = {}) {
        ++report_.checks;
        if (!ok) {
            ++report_.failures;
            report_.passed = false;
        }
        out_ << (ok ? "PASS " : "FAIL ") << what << '\n';
        if (!ok && !detail.empty()) {
            std::istringstream lines(detail);
            std::string line;
            while (std::getline(lines, line)) out_ << "  " << line << '\n';
        }
    }
    void note(const std::string& line) { out_ << line << '\n'; }

    VerifyReport finish() {
        out_ << "summary " << (report_.passed ? "PASS" : "FAIL") << ' ' << (report_.checks - report_.failures) << '/'
             << report_.checks << '\n';
        report_.text = out_.str();
        return report_;
    }

private:
    VerifyReport report_;
    std::ostringstream out_;
};

std::string poly_diff(const MultiPoly& a, const MultiPoly& b) { return "diff (left - right):\n" + to_text(difference(a, b)); }

std::string shape_tag(const Partition& shape) { return "shape " + shape.to_string(); }

std::string filling_text(const Filling& f) { return to_json(f).dump(); }

void run_hhl(const VerifyBounds& b, ReportBuilder& r) {
    for (const auto& shape : shapes_for(b)) {
        const auto by_inv = macdonald_poly(shape, b.alphabet, Stat::inv, b.threads);
        const auto by_quinv = macdonald_poly(shape, b.alphabet, Stat::quinv, b.threads);
        r.check(equals(by_inv, by_quinv),
                shape_tag(shape) + " inv-sum = quinv-sum terms " + std::to_string(by_inv.term_count()),
                poly_diff(by_inv, by_quinv));
    }
}

void run_symmetry(const VerifyBounds& b, ReportBuilder& r) {
    for (const auto& shape : shapes_for(b)) {
        const auto lhs = swap_qt(macdonald_poly(shape, b.alphabet, Stat::inv, b.threads));
        const auto rhs = macdonald_poly(conjugate(shape), b.alphabet, Stat::inv, b.threads);
        r.check(equals(lhs, rhs),
                shape_tag(shape) + " swap_qt(H) = H of " + conjugate(shape).to_string() + " terms " +
                    std::to_string(lhs.term_count()),
                poly_diff(lhs, rhs));
    }
}

void run_whittaker(const VerifyBounds& b, ReportBuilder& r) {
    for (const auto& shape : shapes_for(b)) {
        const auto extract = q_whittaker(shape, b.alphabet, WhittakerRoute::extract, b.threads);
        const auto by_inv = q_whittaker(shape, b.alphabet, WhittakerRoute::inv_max_sum, b.threads);
        const auto by_quinv = q_whittaker(shape, b.alphabet, WhittakerRoute::quinv_max_sum, b.threads);
        r.check(equals(extract, by_inv), shape_tag(shape) + " whittaker extract = inv-max sum terms " +
                                              std::to_string(extract.term_count()),
                poly_diff(extract, by_inv));
        r.check(equals(extract, by_quinv), shape_tag(shape) + " whittaker extract = quinv-max sum terms " +
                                                std::to_string(extract.term_count()),
                poly_diff(extract, by_quinv));
        if (b.alphabet >= shape.row_length(1)) {
            const long long top = n_stat(conjugate(shape));
            const auto degree = macdonald_poly(shape, b.alphabet, Stat::inv, b.threads).max_q_degree();
            r.check(degree && *degree == top,
                    shape_tag(shape) + " top q-degree " + std::to_string(degree.value_or(-1)) + " = n(shape') " +
                        std::to_string(top));
        }
    }
}

void run_hall_littlewood(const VerifyBounds& b, ReportBuilder& r) {
    for (const auto& shape : shapes_for(b)) {
        const auto extract = modified_hall_littlewood(shape, b.alphabet, HallLittlewoodRoute::extract, b.threads);
        const auto by_inv = modified_hall_littlewood(shape, b.alphabet, HallLittlewoodRoute::inv_zero_sum, b.threads);
        const auto by_quinv =
            modified_hall_littlewood(shape, b.alphabet, HallLittlewoodRoute::quinv_zero_sum, b.threads);
        r.check(equals(extract, by_inv), shape_tag(shape) + " hall-littlewood extract = inv-zero sum terms " +
                                              std::to_string(extract.term_count()),
                poly_diff(extract, by_inv));
        r.check(equals(extract, by_quinv), shape_tag(shape) + " hall-littlewood extract = quinv-zero sum terms " +
                                                std::to_string(extract.term_count()),
                poly_diff(extract, by_quinv));
    }
}

// Scans words in order and reports the first (shortest) one failing pred.
void check_words(ReportBuilder& r, const std::vector<Word>& words, const std::string& what,
                 const std::function<std::string(const Word&)>& failure) {
    for (const auto& w : words) {
        const std::string why = failure(w);
        if (!why.empty()) {
            r.check(false, what + " words " + std::to_string(words.size()),
                    "counterexample " + w.to_string() + ": " + why);
            return;
        }
    }
    r.check(true, what + " words " + std::to_string(words.size()));
}

void run_charge_equiv(const VerifyBounds& b, ReportBuilder& r) {
    const auto words = partition_content_words(b.max_length, b.max_letter);
    check_words(r, words, "charge classical = killpatrick", [](const Word& w) -> std::string {
        const long long a = charge(w, ChargeMethod::classical);
        const long long k = charge(w, ChargeMethod::killpatrick);
        return a == k ? "" : "classical " + std::to_string(a) + " killpatrick " + std::to_string(k);
    });
    check_words(r, words, "cocharge routes agree", [](const Word& w) -> std::string {
        const long long via_killpatrick = cocharge(w);
        const long long via_complement = cocharge_complement_total(word_content(w)) - charge(w);
        long long via_classical = 0;
        for (const auto& sub : ls_decompose(w).subwords) via_classical += cocharge_standard(sub);
        if (via_killpatrick == via_complement && via_complement == via_classical) return "";
        return "killpatrick " + std::to_string(via_killpatrick) + " complement " + std::to_string(via_complement) +
               " classical " + std::to_string(via_classical);
    });
    check_words(r, words, "decomposition lengths match conjugate content", [](const Word& w) -> std::string {
        const auto mu = word_content(w);
        std::vector<int> lengths_expected;
        const int width = mu.counts.empty() ? 0 : mu.counts.front();
        for (int k = 1; k <= width; ++k) {
            int column = 0;
            for (int c : mu.counts) column += c >= k;
            lengths_expected.push_back(column);
        }
        for (const auto& dec : {ls_decompose(w), killpatrick_decompose(w)}) {
            std::vector<int> lengths;
            std::vector<int> seen(w.size(), 0);
            for (std::size_t k = 0; k < dec.subwords.size(); ++k) {
                lengths.push_back(static_cast<int>(dec.subwords[k].size()));
                for (std::size_t p : dec.positions[k]) ++seen[p];
            }
            if (lengths != lengths_expected) return "subword lengths differ from conjugate content";
            if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; }))
                return "positions do not partition the word";
        }
        return "";
    });
    std::vector<Word> standard;
    for (const auto& w : words)
        if (is_standard(w)) standard.push_back(w);
    check_words(r, standard, "standard charge + cocharge = C(k,2)", [](const Word& w) -> std::string {
        const long long total = charge_standard(w) + cocharge_standard(w);
        const long long expected = binomial2(static_cast<long long>(w.size()));
        return total == expected ? "" : "sum " + std::to_string(total);
    });
}

using Family = std::vector<std::vector<Entry>>;

bool rows_distinct(const Family& family) {
    for (const auto& row : family)
        if (std::adjacent_find(row.begin(), row.end()) != row.end()) return false;
    return true;
}

struct ClassSpec {
    std::string name;
    std::function<bool(const FillingRecord&, long long top)> member;
    std::function<Filling(const Partition&, const Family&)> build;
    std::function<long long(const Filling&)> word_stat;  // must equal maj
    bool sets_only;
};

void run_uniqueness_shape(const Partition& shape, const VerifyBounds& b, ReportBuilder& r) {
    const long long top = n_stat(conjugate(shape));
    const auto records = filling_records(shape, b.alphabet, b.threads);

    std::set<Family> all_families, set_families;
    for (const auto& rec : records) {
        auto family = row_multisets(rec.filling);
        if (rows_distinct(family)) set_families.insert(family);
        all_families.insert(std::move(family));
    }

    const std::vector<ClassSpec> specs = {
        {"inv-max", [](const FillingRecord& x, long long t) { return x.inv == t; },
         [](const Partition& s, const Family& f) { return build_inv_max(s, RowSetFamily{f}); },
         [](const Filling& f) { return charge(charge_word(f, CellOrder::standard)); }, true},
        {"quinv-max", [](const FillingRecord& x, long long t) { return x.quinv == t; },
         [](const Partition& s, const Family& f) { return build_quinv_max(s, RowSetFamily{f}); },
         [](const Filling& f) { return charge(charge_word(f, CellOrder::primed)); }, true},
        {"inv-zero", [](const FillingRecord& x, long long) { return x.inv == 0; },
         [](const Partition& s, const Family& f) { return build_inv_zero(s, RowMultisetFamily{f}); },
         [](const Filling& f) { return cocharge(cocharge_word(f, CellOrder::standard)); }, false},
        {"quinv-zero", [](const FillingRecord& x, long long) { return x.quinv == 0; },
         [](const Partition& s, const Family& f) { return build_quinv_zero(s, RowMultisetFamily{f}); },
         [](const Filling& f) { return cocharge(cocharge_word(f, CellOrder::primed)); }, false},
    };

    std::map<std::string, std::map<Family, std::vector<const FillingRecord*>>> found;
    for (const auto& spec : specs) {
        auto& by_family = found[spec.name];
        for (const auto& rec : records)
            if (spec.member(rec, top)) by_family[row_multisets(rec.filling)].push_back(&rec);

        const auto& expected = spec.sets_only ? set_families : all_families;
        std::string problem;
        for (const auto& family : expected) {
            auto it = by_family.find(family);
            const std::size_t count = it == by_family.end() ? 0 : it->second.size();
            if (count != 1) {
                std::ostringstream msg;
                msg << "family " << json(family).dump() << " has " << count << " " << spec.name << " fillings";
                if (count > 1)
                    for (const auto* rec : it->second) msg << "\n" << filling_text(rec->filling);
                problem = msg.str();
                break;
            }
            const Filling greedy = spec.build(shape, family);
            if (!(greedy == it->second.front()->filling)) {
                problem = "family " + json(family).dump() + ": greedy " + filling_text(greedy) + " vs enumerated " +
                          filling_text(it->second.front()->filling);
                break;
            }
        }
        if (problem.empty())
            for (const auto& [family, members] : by_family)
                if (!expected.count(family)) {
                    problem = "unexpected " + spec.name + " filling " + filling_text(members.front()->filling);
                    break;
                }
        r.check(problem.empty(),
                shape_tag(shape) + " " + spec.name + " unique per family, families " + std::to_string(expected.size()),
                problem);

        std::string maj_problem;
        std::size_t members_seen = 0;
        for (const auto& [family, members] : by_family)
            for (const auto* rec : members) {
                ++members_seen;
                const long long via_word = spec.word_stat(rec->filling);
                if (maj_problem.empty() && via_word != rec->maj)
                    maj_problem = filling_text(rec->filling) + ": maj " + std::to_string(rec->maj) + " word statistic " +
                                  std::to_string(via_word);
            }
        r.check(maj_problem.empty(),
                shape_tag(shape) + " " + spec.name + " maj = word statistic, fillings " + std::to_string(members_seen),
                maj_problem);

        std::string column_problem;
        for (const auto& [family, members] : by_family)
            for (const auto* rec : members) {
                const Filling rest = remove_first_column(rec->filling);
                if (rest.shape().empty()) continue;
                const long long rest_top = n_stat(conjugate(rest.shape()));
                const FillingRecord rest_rec{rest, maj(rest), inv(rest), quinv(rest)};
                if (!spec.member(rest_rec, rest_top) && column_problem.empty()) column_problem = filling_text(rec->filling);
            }
        r.check(column_problem.empty(), shape_tag(shape) + " " + spec.name + " closed under first-column removal",
                column_problem);
    }

    std::string phi_problem;
    for (const auto& [family, members] : found["inv-max"]) {
        const Filling image = phi(members.front()->filling);
        auto target = found["quinv-max"].find(family);
        if (target == found["quinv-max"].end() || !(target->second.front()->filling == image) ||
            maj(image) != members.front()->maj || !row_equivalent(image, members.front()->filling)) {
            phi_problem = filling_text(members.front()->filling) + " -> " + filling_text(image);
            break;
        }
    }
    r.check(phi_problem.empty(), shape_tag(shape) + " phi bijects inv-max onto quinv-max preserving rows and maj",
            phi_problem);

    std::string varphi_problem;
    for (const auto& [family, members] : found["inv-zero"]) {
        const Filling image = varphi(members.front()->filling);
        auto target = found["quinv-zero"].find(family);
        if (target == found["quinv-zero"].end() || !(target->second.front()->filling == image) ||
            maj(image) != members.front()->maj || !row_equivalent(image, members.front()->filling)) {
            varphi_problem = filling_text(members.front()->filling) + " -> " + filling_text(image);
            break;
        }
    }
    r.check(varphi_problem.empty(),
            shape_tag(shape) + " varphi bijects inv-zero onto quinv-zero preserving rows and maj", varphi_problem);
}

void run_uniqueness(const VerifyBounds& b, ReportBuilder& r) {
    for (const auto& shape : shapes_for(b)) run_uniqueness_shape(shape, b, r);
}

void run_conjecture(const VerifyBounds& b, ReportBuilder& r) {
    for (const auto& shape : shapes_for(b)) {
        const auto records = filling_records(shape, b.alphabet, b.threads);
        const auto by_inv = stat_profile(records, Stat::inv);
        const auto by_quinv = stat_profile(records, Stat::quinv);
        std::string detail;
        if (!(by_inv == by_quinv)) {
            for (const auto& [key, count] : by_inv.refined) {
                auto it = by_quinv.refined.find(key);
                const long long other = it == by_quinv.refined.end() ? 0 : it->second;
                if (other != count) {
                    detail = "family " + json(key.family).dump() + " maj " + std::to_string(key.maj) + " stat " +
                             std::to_string(key.stat) + ": inv " + std::to_string(count) + " quinv " +
                             std::to_string(other);
                    break;
                }
            }
            if (detail.empty()) detail = "quinv profile has keys absent from the inv profile";
        }
        r.check(detail.empty(),
                shape_tag(shape) + " profile inv = quinv classes " + std::to_string(by_inv.refined.size()), detail);

        std::string match_problem;
        std::size_t pairs = 0;
        try {
            const auto matching = conjecture_match(records);
            pairs = matching.size();
            std::set<Filling> left, right;
            for (const auto& p : matching) {
                left.insert(p.sigma);
                right.insert(p.delta);
                if (match_problem.empty() &&
                    (!row_equivalent(p.sigma, p.delta) || maj(p.sigma) != maj(p.delta) ||
                     quinv(p.sigma) != inv(p.delta) || quinv(p.sigma) != p.stat))
                    match_problem = "bad pair " + to_json(p).dump();
            }
            if (match_problem.empty() && (left.size() != records.size() || right.size() != records.size()))
                match_problem = "matching is not a bijection";
        } catch (const Counterexample& e) {
            match_problem = e.what();
        }
        r.check(match_problem.empty(), shape_tag(shape) + " complete matching pairs " + std::to_string(pairs),
                match_problem);
    }
}

}  // namespace

std::string to_string(Suite s) {
    for (const auto& [suite, name] : suite_names())
        if (suite == s) return name;
    return "?";
}

Suite parse_suite(const std::string& name) {
    for (const auto& [suite, spelled] : suite_names())
        if (spelled == name) return suite;
    throw InputError("unknown verify suite '" + name + "'");
}

std::vector<Partition> shapes_for(const VerifyBounds& bounds) {
    if (bounds.shape) return {*bounds.shape};
    return partitions_up_to(bounds.max_size);
}

std::uint64_t estimated_cost(Suite suite, const VerifyBounds& bounds) {
    auto add = [](std::uint64_t a, std::uint64_t b) {
        return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
    };
    std::uint64_t total = 0;
    if (suite == Suite::charge_equiv) {
        const auto letters = static_cast<std::uint64_t>(std::max(1, bounds.max_letter));
        std::uint64_t power = 1;
        for (int len = 1; len <= bounds.max_length; ++len) {
            power = power > std::numeric_limits<std::uint64_t>::max() / letters ? std::numeric_limits<std::uint64_t>::max()
                                                                                 : power * letters;
            total = add(total, power);
        }
        return total;
    }
    for (const auto& shape : shapes_for(bounds)) {
        std::uint64_t n = filling_count(shape, std::max(1, bounds.alphabet));
        if (suite == Suite::symmetry) n = add(n, n);  // shape and its conjugate
        total = add(total, n);
    }
    return total;
}

void check_bounds(Suite suite, const VerifyBounds& bounds, const Ceilings& ceilings) {
    if (bounds.alphabet < 1) throw InputError("--alphabet must be at least 1");
    if (bounds.threads < 1) throw InputError("--threads must be at least 1");
    if (bounds.max_size < 1 && !bounds.shape) throw InputError("--max-size must be at least 1");
    if (bounds.max_length < 1 || bounds.max_letter < 1) throw InputError("--max-length and --max-letter must be positive");
    if (suite == Suite::charge_equiv) {
        if (bounds.max_length > ceilings.word_length)
            throw InputError("word length " + std::to_string(bounds.max_length) + " exceeds ceiling " +
                             std::to_string(ceilings.word_length) + " (raise with --ceiling-length)");
    } else {
        const int size = bounds.shape ? bounds.shape->size() : bounds.max_size;
        if (size > ceilings.max_size)
            throw InputError("shape size " + std::to_string(size) + " exceeds ceiling " +
                             std::to_string(ceilings.max_size) + " (raise with --ceiling-size)");
        if (bounds.alphabet > ceilings.alphabet)
            throw InputError("alphabet " + std::to_string(bounds.alphabet) + " exceeds ceiling " +
                             std::to_string(ceilings.alphabet) + " (raise with --ceiling-alphabet)");
    }
    const std::uint64_t cost = estimated_cost(suite, bounds);
    const std::uint64_t cap = suite == Suite::charge_equiv ? kHardCapWords : kHardCapFillings;
    if (cost > cap)
        throw InputError("estimated cost " + std::to_string(cost) + (suite == Suite::charge_equiv ? " words" : " fillings") +
                         " exceeds hard cap " + std::to_string(cap));
}

std::vector<Word> partition_content_words(int max_length, int max_letter) {
    std::vector<Word> out;
    for (int len = 1; len <= max_length; ++len) {
        for (const auto& mu : partitions_of(len)) {
            if (mu.num_rows() > max_letter) continue;
            Word w;
            for (int letter = 1; letter <= mu.num_rows(); ++letter)
                w.letters.insert(w.letters.end(), mu.row_length(letter), letter);
            do {
                out.push_back(w);
            } while (std::next_permutation(w.letters.begin(), w.letters.end()));
        }
    }
    return out;
}

VerifyReport run_suite(Suite suite, const VerifyBounds& bounds) {
    ReportBuilder r;
    std::ostringstream header;
    header << "suite " << to_string(suite);
    if (suite == Suite::charge_equiv) {
        header << " max-length " << bounds.max_length << " max-letter " << bounds.max_letter;
    } else {
        header << " alphabet " << bounds.alphabet;
        if (bounds.shape) header << " shape " << bounds.shape->to_string();
        else header << " max-size " << bounds.max_size;
    }
    r.note(header.str());
    switch (suite) {
        case Suite::hhl_equality: run_hhl(bounds, r); break;
        case Suite::symmetry: run_symmetry(bounds, r); break;
        case Suite::whittaker: run_whittaker(bounds, r); break;
        case Suite::hall_littlewood: run_hall_littlewood(bounds, r); break;
        case Suite::charge_equiv: run_charge_equiv(bounds, r); break;
        case Suite::uniqueness: run_uniqueness(bounds, r); break;
        case Suite::conjecture: run_conjecture(bounds, r); break;
    }
    return r.finish();
}

}  // namespace macfill
