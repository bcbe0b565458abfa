#include "macfill/poly.hpp"

#include <sstream>

#include "macfill/error.hpp"

namespace macfill {

MultiPoly MultiPoly::constant(int alphabet_size, const BigInt& c) {
    MultiPoly p(alphabet_size);
    p.add_term(Monomial{std::vector<int>(alphabet_size, 0), 0, 0}, c);
    return p;
}

void MultiPoly::check_alphabet(const Monomial& m) const {
    if (static_cast<int>(m.xexp.size()) != alphabet_size_)
        throw InputError("monomial has " + std::to_string(m.xexp.size()) + " x-exponents, polynomial alphabet is " +
                         std::to_string(alphabet_size_));
}

BigInt MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

MultiPoly& MultiPoly::add_term(const Monomial& m, const BigInt& c) {
    check_alphabet(m);
    if (c == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

MultiPoly& MultiPoly::merge(const MultiPoly& other) {
    if (other.alphabet_size_ != alphabet_size_)
        throw InputError("cannot merge polynomials over " + std::to_string(alphabet_size_) + " and " +
                         std::to_string(other.alphabet_size_) + " variables");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

std::optional<int> MultiPoly::max_q_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.qexp;  // q is the primary sort key
}

MultiPoly coeff_of_q(const MultiPoly& p, int k) {
    MultiPoly out(p.alphabet_size());
    for (const auto& [m, c] : p.terms()) {
        if (m.qexp != k) continue;
        Monomial stripped = m;
        stripped.qexp = 0;
        out.add_term(stripped, c);
    }
    return out;
}

MultiPoly swap_qt(const MultiPoly& p) {
    MultiPoly out(p.alphabet_size());
    for (const auto& [m, c] : p.terms()) {
        Monomial swapped = m;
        std::swap(swapped.qexp, swapped.texp);
        out.add_term(swapped, c);
    }
    return out;
}

bool equals(const MultiPoly& p, const MultiPoly& r) {
    if (p.alphabet_size() != r.alphabet_size())
        throw InputError("cannot compare polynomials over " + std::to_string(p.alphabet_size()) + " and " +
                         std::to_string(r.alphabet_size()) + " variables");
    return p.terms() == r.terms();
}

MultiPoly difference(const MultiPoly& p, const MultiPoly& r) {
    MultiPoly out = p;
    if (p.alphabet_size() != r.alphabet_size())
        throw InputError("cannot subtract polynomials over different alphabets");
    for (const auto& [m, c] : r.terms()) out.add_term(m, -c);
    return out;
}

std::string to_text(const MultiPoly& p) {
    if (p.is_zero()) return "0\n";
    std::ostringstream out;
    for (const auto& [m, c] : p.terms()) {
        out << c;
        if (m.qexp) out << " q^" << m.qexp;
        if (m.texp) out << " t^" << m.texp;
        for (std::size_t i = 0; i < m.xexp.size(); ++i)
            if (m.xexp[i]) out << " x" << (i + 1) << '^' << m.xexp[i];
        out << '\n';
    }
    return out.str();
}

namespace {

int parse_exponent(const std::string& token, std::size_t from, const std::string& line) {
    if (from >= token.size()) throw InputError("missing exponent in term '" + line + "'");
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token.substr(from), &used);
    } catch (const std::exception&) {
        throw InputError("bad exponent in term '" + line + "'");
    }
    if (used != token.size() - from || value < 0) throw InputError("bad exponent in term '" + line + "'");
    return value;
}

}  // namespace

MultiPoly parse_text(const std::string& text, int alphabet_size) {
    MultiPoly p(alphabet_size);
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream tokens(line);
        std::string token;
        if (!(tokens >> token)) continue;
        BigInt coeff;
        try {
            coeff = BigInt(token);
        } catch (const std::exception&) {
            throw InputError("bad coefficient in term '" + line + "'");
        }
        Monomial m{std::vector<int>(alphabet_size, 0), 0, 0};
        while (tokens >> token) {
            if (token.rfind("q^", 0) == 0) {
                m.qexp = parse_exponent(token, 2, line);
            } else if (token.rfind("t^", 0) == 0) {
                m.texp = parse_exponent(token, 2, line);
            } else if (token.size() > 1 && token[0] == 'x') {
                const auto caret = token.find('^');
                if (caret == std::string::npos) throw InputError("bad variable in term '" + line + "'");
                const int index = parse_exponent(token.substr(0, caret), 1, line);
                if (index < 1 || index > alphabet_size)
                    throw InputError("variable x" + std::to_string(index) + " outside alphabet in '" + line + "'");
                m.xexp[index - 1] = parse_exponent(token, caret + 1, line);
            } else {
                throw InputError("unrecognized token '" + token + "' in term '" + line + "'");
            }
        }
        p.add_term(m, coeff);
    }
    return p;
}

}  // namespace macfill
