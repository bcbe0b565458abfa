#include "doctest.h"

#include <algorithm>
#include <random>

#include "macfill/error.hpp"
#include "macfill/macdonald.hpp"
#include "macfill/poly.hpp"

using namespace macfill;

namespace {

Monomial mono(std::vector<int> x, int q = 0, int t = 0) { return Monomial{std::move(x), q, t}; }

// x1^2 + (1 + t) x1 x2 + x2^2, summed by hand over the four fillings of a
// two-cell column with entries in {1, 2}.
MultiPoly column_by_hand() {
    MultiPoly p(2);
    p.add_term(mono({2, 0}), 1);     // 1 over 1
    p.add_term(mono({1, 1}, 0, 1), 1);  // 1 over 2: a descent with leg 0
    p.add_term(mono({1, 1}), 1);     // 2 over 1
    p.add_term(mono({0, 2}), 1);     // 2 over 2
    return p;
}

// x1^2 + (1 + q) x1 x2 + x2^2 for a two-cell row: only "2 1" is an inversion.
MultiPoly row_by_hand() {
    MultiPoly p(2);
    p.add_term(mono({2, 0}), 1);
    p.add_term(mono({1, 1}), 1);
    p.add_term(mono({1, 1}, 1, 0), 1);
    p.add_term(mono({0, 2}), 1);
    return p;
}

MultiPoly random_poly(std::mt19937& rng, int n, int terms) {
    std::uniform_int_distribution<int> e(0, 3), c(-5, 5);
    MultiPoly p(n);
    for (int k = 0; k < terms; ++k) {
        std::vector<int> x(n);
        for (int& v : x) v = e(rng);
        p.add_term(mono(x, e(rng), e(rng)), c(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("term accumulation") {
    MultiPoly p(1);
    p.add_term(mono({1}), 1);
    p.add_term(mono({1}), 1);
    CHECK(p.coefficient(mono({1})) == 2);
    p.add_term(mono({1}), -2);
    CHECK(p.is_zero());
    p.add_term(mono({2}), 0);
    CHECK(p.is_zero());
    CHECK_THROWS_AS(p.add_term(mono({1, 0}), 1), InputError);
    CHECK(MultiPoly::constant(3, 5).coefficient(mono({0, 0, 0})) == 5);
    CHECK(MultiPoly::constant(3, 0).is_zero());
}

TEST_CASE("hand-summed polynomials match the enumeration") {
    CHECK(equals(macdonald_poly(Partition({1, 1}), 2, Stat::inv), column_by_hand()));
    CHECK(equals(macdonald_poly(Partition({1, 1}), 2, Stat::quinv), column_by_hand()));
    CHECK(equals(macdonald_poly(Partition({2}), 2, Stat::inv), row_by_hand()));
    CHECK(equals(macdonald_poly(Partition({2}), 2, Stat::quinv), row_by_hand()));
}

TEST_CASE("q coefficients") {
    MultiPoly x1x2(2);
    x1x2.add_term(mono({1, 1}), 1);
    CHECK(equals(coeff_of_q(row_by_hand(), 1), x1x2));
    CHECK(coeff_of_q(column_by_hand(), 1).is_zero());
    CHECK(equals(coeff_of_q(column_by_hand(), 0), column_by_hand()));
    CHECK(row_by_hand().max_q_degree() == 1);
    CHECK_FALSE(MultiPoly(2).max_q_degree().has_value());
}

TEST_CASE("q and t exchange") {
    MultiPoly p(1), r(1);
    p.add_term(mono({0}, 2, 1), 3);
    r.add_term(mono({0}, 1, 2), 3);
    CHECK(equals(swap_qt(p), r));
    CHECK(equals(swap_qt(swap_qt(column_by_hand())), column_by_hand()));
    CHECK(equals(swap_qt(row_by_hand()), column_by_hand()));
}

TEST_CASE("equality and difference") {
    MultiPoly a(2), b(2);
    a.add_term(mono({1, 0}), 1);
    b.add_term(mono({0, 1}), 1);
    CHECK(equals(a, a));
    CHECK_FALSE(equals(a, b));
    CHECK_THROWS_AS(equals(a, MultiPoly(3)), InputError);
    const MultiPoly d = difference(a, b);
    CHECK(d.coefficient(mono({1, 0})) == 1);
    CHECK(d.coefficient(mono({0, 1})) == -1);
    CHECK(difference(a, a).is_zero());
    CHECK(equals(macdonald_poly(Partition({2, 1}), 2, Stat::inv), macdonald_poly(Partition({2, 1}), 2, Stat::quinv)));
}

TEST_CASE("text format") {
    CHECK(to_text(column_by_hand()) == "1 x2^2\n1 x1^1 x2^1\n1 x1^2\n1 t^1 x1^1 x2^1\n");
    CHECK(to_text(MultiPoly(2)) == "0\n");
    MultiPoly big(1);
    const BigInt huge("123456789012345678901234567890");
    big.add_term(mono({4}, 7, 2), huge);
    big.add_term(mono({0}), -3);
    CHECK(to_text(big) == "-3\n123456789012345678901234567890 q^7 t^2 x1^4\n");
    CHECK(equals(parse_text(to_text(big), 1), big));
    CHECK(parse_text("0\n", 2).is_zero());
    CHECK_THROWS_AS(parse_text("1 y^2\n", 2), InputError);
    CHECK_THROWS_AS(parse_text("1 x3^1\n", 2), InputError);
    CHECK_THROWS_AS(parse_text("one x1^1\n", 2), InputError);
}

TEST_CASE("accumulation order does not matter and text round trips") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 4;
        std::vector<std::pair<Monomial, BigInt>> stream;
        std::uniform_int_distribution<int> e(0, 2), c(-3, 3);
        for (int k = 0; k < 40; ++k) {
            std::vector<int> x(n);
            for (int& v : x) v = e(rng);
            stream.emplace_back(mono(x, e(rng), e(rng)), c(rng));
        }
        MultiPoly forward(n), backward(n), shuffled(n);
        for (const auto& [m, coeff] : stream) forward.add_term(m, coeff);
        for (auto it = stream.rbegin(); it != stream.rend(); ++it) backward.add_term(it->first, it->second);
        std::shuffle(stream.begin(), stream.end(), rng);
        for (const auto& [m, coeff] : stream) shuffled.add_term(m, coeff);
        REQUIRE(equals(forward, backward));
        REQUIRE(equals(forward, shuffled));

        // merge is associative and commutative
        const MultiPoly a = random_poly(rng, n, 10), b = random_poly(rng, n, 10), c3 = random_poly(rng, n, 10);
        MultiPoly ab = a, ba = b;
        ab.merge(b);
        ba.merge(a);
        REQUIRE(equals(ab, ba));
        MultiPoly left = ab, bc = b;
        left.merge(c3);
        bc.merge(c3);
        MultiPoly right = a;
        right.merge(bc);
        REQUIRE(equals(left, right));

        REQUIRE(equals(parse_text(to_text(forward), n), forward));
        REQUIRE(to_text(parse_text(to_text(a), n)) == to_text(a));
        for (const auto& [m, coeff] : forward.terms()) REQUIRE(coeff != 0);
    }
}
