#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace macfill {

using BigInt = boost::multiprecision::cpp_int;

/// x_1^e_1 ... x_n^e_n q^qexp t^texp
struct Monomial {
    std::vector<int> xexp;
    int qexp = 0;
    int texp = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Display order: ascending in q, then t, then x exponents lexicographically.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        if (a.qexp != b.qexp) return a.qexp < b.qexp;
        if (a.texp != b.texp) return a.texp < b.texp;
        return a.xexp < b.xexp;
    }
};

/// Sparse polynomial in x_1..x_n, q, t with arbitrary-precision integer
/// coefficients. No zero coefficient is ever stored.
class MultiPoly {
public:
    using Terms = std::map<Monomial, BigInt, MonomialOrder>;

    explicit MultiPoly(int alphabet_size = 0) : alphabet_size_(alphabet_size) {}

    static MultiPoly constant(int alphabet_size, const BigInt& c);

    int alphabet_size() const noexcept { return alphabet_size_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Coefficient of m (zero when absent).
    BigInt coefficient(const Monomial& m) const;

    MultiPoly& add_term(const Monomial& m, const BigInt& c);
    /// Adds every term of other. Addition is commutative, so partial sums can
    /// be merged in any order.
    MultiPoly& merge(const MultiPoly& other);

    /// Largest q exponent present, or nullopt for the zero polynomial.
    std::optional<int> max_q_degree() const;

private:
    void check_alphabet(const Monomial& m) const;

    int alphabet_size_;
    Terms terms_;
};

/// Polynomial in x, t collecting the terms with q exponent k.
MultiPoly coeff_of_q(const MultiPoly& p, int k);

/// Exchanges q and t exponents in every monomial.
MultiPoly swap_qt(const MultiPoly& p);

/// Exact term-by-term equality. Throws InputError on alphabet mismatch.
bool equals(const MultiPoly& p, const MultiPoly& r);

/// p - r.
MultiPoly difference(const MultiPoly& p, const MultiPoly& r);

/// One term per line, "<coeff> q^a t^b x1^e1 ... xn^en", zero exponents
/// omitted, lines in display order. The zero polynomial prints as "0".
std::string to_text(const MultiPoly& p);

/// Inverse of to_text. Throws InputError on malformed input.
MultiPoly parse_text(const std::string& text, int alphabet_size);

}  // namespace macfill
