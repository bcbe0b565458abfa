#include "macfill/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "macfill/charge.hpp"
#include "macfill/error.hpp"
#include "macfill/extremal.hpp"
#include "macfill/json_io.hpp"
#include "macfill/macdonald.hpp"
#include "macfill/reading_words.hpp"
#include "macfill/verify.hpp"

namespace macfill::cli {

namespace {

struct Options {
    std::string input = "-";
    std::string word;
    std::string order = "standard";
    std::string kind;
    std::string shape;
    int alphabet = 3;
    std::string stat = "inv";
    std::string part = "full";
    std::string by = "family";
    int threads = 1;
    std::string out_file;
    std::string suite;
    int max_size = 4;
    int max_length = 8;
    int max_letter = 4;
    Ceilings ceilings;
};

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
    std::ifstream file(path);
    if (!file) throw InputError("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(file), {});
}

CellOrder parse_order(const std::string& s) {
    if (s == "standard") return CellOrder::standard;
    if (s == "primed") return CellOrder::primed;
    throw InputError("unknown order '" + s + "' (expected standard or primed)");
}

Stat parse_stat(const std::string& s) {
    if (s == "inv") return Stat::inv;
    if (s == "quinv") return Stat::quinv;
    throw InputError("unknown statistic '" + s + "' (expected inv or quinv)");
}

Partition require_shape(const Options& o) {
    if (o.shape.empty()) throw InputError("--shape is required");
    return parse_partition(o.shape);
}

// Shape commands share the verify ceilings and hard cap.
void check_enumeration(const Partition& shape, const Options& o) {
    VerifyBounds b;
    b.shape = shape;
    b.alphabet = o.alphabet;
    b.threads = o.threads;
    check_bounds(Suite::hhl_equality, b, o.ceilings);
}

std::string cells_text(const std::vector<Cell>& cs) {
    std::ostringstream s;
    s << '{';
    for (std::size_t k = 0; k < cs.size(); ++k) s << (k ? "," : "") << '(' << cs[k].row << ',' << cs[k].col << ')';
    s << '}';
    return s.str();
}

std::string subwords_text(const SubwordDecomposition& dec) {
    std::ostringstream s;
    for (std::size_t k = 0; k < dec.subwords.size(); ++k) s << (k ? " " : "") << dec.subwords[k].to_string();
    return s.str();
}

int cmd_stats(const Options& o, std::istream& in, std::ostream& out) {
    if (!o.word.empty()) {
        const Word w = parse_word(o.word);
        out << "word " << w.to_string() << '\n';
        out << "content " << json(word_content(w).counts).dump() << '\n';
        if (!has_partition_content(w)) throw InputError("word '" + w.to_string() + "' does not have partition content");
        const auto ls = ls_decompose(w);
        const auto kp = killpatrick_decompose(w);
        out << "classical-subwords " << subwords_text(ls) << '\n';
        out << "killpatrick-subwords " << subwords_text(kp) << '\n';
        out << "charge " << charge(w, ChargeMethod::classical) << '\n';
        out << "charge-killpatrick " << charge(w, ChargeMethod::killpatrick) << '\n';
        out << "cocharge " << cocharge(w) << '\n';
        return kOk;
    }
    const Filling sigma = filling_from_json(parse_json_text(read_input(o.input, in), o.input));
    const CellOrder order = parse_order(o.order);
    const Word cw = cocharge_word(sigma, order);
    const Word w = charge_word(sigma, order);
    out << "shape " << sigma.shape().to_string() << '\n';
    out << "content " << json(content(sigma).counts).dump() << '\n';
    out << "des " << cells_text(descents(sigma)) << '\n';
    out << "maj " << maj(sigma) << '\n';
    out << "inv " << inv(sigma) << '\n';
    out << "quinv " << quinv(sigma) << '\n';
    out << "cw " << cw.to_string() << '\n';
    out << "w " << w.to_string() << '\n';
    out << "charge " << charge(w) << '\n';
    out << "cocharge " << cocharge(cw) << '\n';
    std::string classes;
    for (auto c : classify(sigma)) classes += " " + to_string(c);
    out << "classes" << (classes.empty() ? " none" : classes) << '\n';
    return kOk;
}

int cmd_build(const Options& o, std::istream& in, std::ostream& out) {
    const Partition shape = require_shape(o);
    const auto family = row_family_from_json(parse_json_text(read_input(o.input, in), o.input));
    Filling sigma;
    std::string check;
    if (o.kind == "inv-max") {
        sigma = build_inv_max(shape, RowSetFamily{family});
        check = "charge " + std::to_string(charge(charge_word(sigma, CellOrder::standard)));
    } else if (o.kind == "quinv-max") {
        sigma = build_quinv_max(shape, RowSetFamily{family});
        check = "charge " + std::to_string(charge(charge_word(sigma, CellOrder::primed)));
    } else if (o.kind == "inv-zero") {
        sigma = build_inv_zero(shape, RowMultisetFamily{family});
        check = "cocharge " + std::to_string(cocharge(cocharge_word(sigma, CellOrder::standard)));
    } else if (o.kind == "quinv-zero") {
        sigma = build_quinv_zero(shape, RowMultisetFamily{family});
        check = "cocharge " + std::to_string(cocharge(cocharge_word(sigma, CellOrder::primed)));
    } else {
        throw InputError("unknown build kind '" + o.kind + "'");
    }
    out << to_json(sigma).dump() << '\n';
    out << "maj " << maj(sigma) << '\n';
    out << check << '\n';
    return kOk;
}

int cmd_map(const Options& o, std::istream& in, std::ostream& out) {
    const Filling sigma = filling_from_json(parse_json_text(read_input(o.input, in), o.input));
    Filling image;
    if (o.kind == "phi") image = phi(sigma);
    else if (o.kind == "phi-inverse") image = phi_inverse(sigma);
    else if (o.kind == "varphi") image = varphi(sigma);
    else if (o.kind == "varphi-inverse") image = varphi_inverse(sigma);
    else throw InputError("unknown map kind '" + o.kind + "'");
    out << to_json(image).dump() << '\n';
    out << "maj " << maj(image) << '\n';
    return kOk;
}

int cmd_poly(const Options& o, std::ostream& out) {
    const Partition shape = require_shape(o);
    check_enumeration(shape, o);
    MultiPoly p;
    if (o.part == "full") p = macdonald_poly(shape, o.alphabet, parse_stat(o.stat), o.threads);
    else if (o.part == "whittaker")
        p = q_whittaker(shape, o.alphabet,
                        parse_stat(o.stat) == Stat::inv ? WhittakerRoute::inv_max_sum : WhittakerRoute::quinv_max_sum,
                        o.threads);
    else if (o.part == "hall-littlewood")
        p = modified_hall_littlewood(
            shape, o.alphabet,
            parse_stat(o.stat) == Stat::inv ? HallLittlewoodRoute::inv_zero_sum : HallLittlewoodRoute::quinv_zero_sum,
            o.threads);
    else throw InputError("unknown --part '" + o.part + "' (expected full, whittaker or hall-littlewood)");
    out << to_text(p);
    return kOk;
}

int cmd_profile(const Options& o, std::ostream& out) {
    const Partition shape = require_shape(o);
    check_enumeration(shape, o);
    const auto profile = stat_profile(shape, o.alphabet, parse_stat(o.stat), o.threads);
    if (o.by == "family") {
        for (const auto& [key, count] : profile.refined)
            out << json{{"family", key.family}, {"maj", key.maj}, {"stat", key.stat}, {"count", count}}.dump() << '\n';
    } else if (o.by == "content") {
        for (const auto& [key, count] : profile.by_content())
            out << json{{"content", std::get<0>(key).counts}, {"maj", std::get<1>(key)}, {"stat", std::get<2>(key)},
                        {"count", count}}
                       .dump()
                << '\n';
    } else {
        throw InputError("unknown --by '" + o.by + "' (expected family or content)");
    }
    return kOk;
}

int cmd_match(const Options& o, std::ostream& out) {
    const Partition shape = require_shape(o);
    check_enumeration(shape, o);
    for (const auto& pair : conjecture_match(shape, o.alphabet, o.threads)) out << to_json(pair).dump() << '\n';
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const Suite suite = parse_suite(o.suite);
    VerifyBounds b;
    if (!o.shape.empty()) b.shape = parse_partition(o.shape);
    b.max_size = o.max_size;
    b.alphabet = o.alphabet;
    b.max_length = o.max_length;
    b.max_letter = o.max_letter;
    b.threads = o.threads;
    check_bounds(suite, b, o.ceilings);
    const auto report = run_suite(suite, b);
    out << report.text;
    return report.passed ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Fillings, charge statistics and modified Macdonald polynomial sums", "macfill"};
    app.require_subcommand(1);

    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out_file, "Write output to FILE"); };
    auto add_threads = [&](CLI::App* sub) {
        sub->add_option("--threads", o.threads, "Worker threads for enumeration")->check(CLI::PositiveNumber);
    };
    auto add_ceilings = [&](CLI::App* sub) {
        sub->add_option("--ceiling-size", o.ceilings.max_size, "Largest allowed |shape|");
        sub->add_option("--ceiling-alphabet", o.ceilings.alphabet, "Largest allowed alphabet");
        sub->add_option("--ceiling-length", o.ceilings.word_length, "Largest allowed word length");
    };

    auto* stats = app.add_subcommand("stats", "Statistics of a filling (JSON) or of a word (--word)");
    stats->add_option("input", o.input, "Filling JSON file, or - for stdin");
    stats->add_option("--word", o.word, "Word as digits (121123) or comma-separated letters");
    stats->add_option("--order", o.order, "Cell order for reading words: standard|primed");
    add_out(stats);

    auto* build = app.add_subcommand("build", "Greedy extremal filling from a row family");
    build->add_option("--kind", o.kind, "inv-max|quinv-max|inv-zero|quinv-zero")->required();
    build->add_option("--shape", o.shape, "Shape, e.g. 7,5,4,2")->required();
    build->add_option("input", o.input, "Row family JSON (array of arrays), or - for stdin");
    add_out(build);

    auto* map = app.add_subcommand("map", "Apply phi / varphi (or their inverses) to a filling");
    map->add_option("--kind", o.kind, "phi|phi-inverse|varphi|varphi-inverse")->required();
    map->add_option("input", o.input, "Filling JSON file, or - for stdin");
    add_out(map);

    auto* poly = app.add_subcommand("poly", "Generating polynomial over fillings with entries <= alphabet");
    poly->add_option("--shape", o.shape, "Shape, e.g. 2,1")->required();
    poly->add_option("--alphabet", o.alphabet, "Largest entry")->check(CLI::PositiveNumber);
    poly->add_option("--stat", o.stat, "inv|quinv");
    poly->add_option("--part", o.part, "full|whittaker|hall-littlewood");
    add_threads(poly);
    add_ceilings(poly);
    add_out(poly);

    auto* profile = app.add_subcommand("profile", "Joint distribution of (row family, maj, stat)");
    profile->add_option("--shape", o.shape, "Shape")->required();
    profile->add_option("--alphabet", o.alphabet, "Largest entry")->check(CLI::PositiveNumber);
    profile->add_option("--stat", o.stat, "inv|quinv");
    profile->add_option("--by", o.by, "family|content");
    add_threads(profile);
    add_ceilings(profile);
    add_out(profile);

    auto* match = app.add_subcommand("match", "Row-, maj-preserving matching taking quinv to inv");
    match->add_option("--shape", o.shape, "Shape")->required();
    match->add_option("--alphabet", o.alphabet, "Largest entry")->check(CLI::PositiveNumber);
    add_threads(match);
    add_ceilings(match);
    add_out(match);

    auto* verify = app.add_subcommand("verify", "Exhaustive identity checks");
    verify->add_option("suite", o.suite,
                       "hhl-equality|symmetry|whittaker|hall-littlewood|charge-equiv|uniqueness|conjecture")
        ->required();
    verify->add_option("--shape", o.shape, "Check a single shape");
    verify->add_option("--max-size", o.max_size, "All shapes with |shape| <= N");
    verify->add_option("--alphabet", o.alphabet, "Largest entry");
    verify->add_option("--max-length", o.max_length, "charge-equiv: longest word");
    verify->add_option("--max-letter", o.max_letter, "charge-equiv: largest letter");
    add_threads(verify);
    add_ceilings(verify);
    add_out(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    std::ostringstream buffer;
    int code = kOk;
    try {
        if (stats->parsed()) code = cmd_stats(o, in, buffer);
        else if (build->parsed()) code = cmd_build(o, in, buffer);
        else if (map->parsed()) code = cmd_map(o, in, buffer);
        else if (poly->parsed()) code = cmd_poly(o, buffer);
        else if (profile->parsed()) code = cmd_profile(o, buffer);
        else if (match->parsed()) code = cmd_match(o, buffer);
        else if (verify->parsed()) code = cmd_verify(o, buffer);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Counterexample& e) {
        err << "error: counterexample: " << e.what() << '\n';
        return kFailure;
    }

    if (o.out_file.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.out_file);
        if (!file) {
            err << "error: cannot write '" << o.out_file << "'\n";
            return kUsage;
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace macfill::cli
