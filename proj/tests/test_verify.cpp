#include "doctest.h"

#include <string>

#include "macfill/charge.hpp"
#include "macfill/error.hpp"
#include "macfill/verify.hpp"

using namespace macfill;

namespace {

const Suite kAll[] = {Suite::hhl_equality, Suite::symmetry,   Suite::whittaker, Suite::hall_littlewood,
                      Suite::charge_equiv, Suite::uniqueness, Suite::conjecture};

std::string bounds_error(Suite suite, const VerifyBounds& b) {
    try {
        check_bounds(suite, b, Ceilings{});
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("suite names round trip") {
    for (Suite s : kAll) CHECK(parse_suite(to_string(s)) == s);
    CHECK(to_string(Suite::hhl_equality) == "hhl-equality");
    CHECK_THROWS_AS(parse_suite("everything"), InputError);
}

TEST_CASE("shape selection") {
    VerifyBounds b;
    b.max_size = 3;
    CHECK(shapes_for(b).size() == 1 + 2 + 3);
    b.shape = Partition({2, 2});
    REQUIRE(shapes_for(b).size() == 1);
    CHECK(shapes_for(b).front() == Partition({2, 2}));
}

TEST_CASE("partition-content words") {
    const auto words = partition_content_words(3, 3);
    CHECK(words.size() == 14);
    for (const auto& w : words) CHECK(has_partition_content(w));
    CHECK(partition_content_words(4, 1).size() == 4);
}

TEST_CASE("ceilings are enforced with a stated limit") {
    VerifyBounds b;
    b.max_size = 9;
    CHECK(bounds_error(Suite::uniqueness, b) == "shape size 9 exceeds ceiling 7 (raise with --ceiling-size)");
    b.max_size = 4;
    b.alphabet = 6;
    CHECK(bounds_error(Suite::hhl_equality, b).find("ceiling 4") != std::string::npos);
    b.alphabet = 3;
    b.max_length = 11;
    CHECK(bounds_error(Suite::charge_equiv, b).find("ceiling 10") != std::string::npos);
    b.max_length = 8;
    b.threads = 0;
    CHECK_FALSE(bounds_error(Suite::symmetry, b).empty());
    b.threads = 1;
    CHECK(bounds_error(Suite::symmetry, b).empty());

    // Raised ceilings still stop at the hard cap, with the estimate shown.
    VerifyBounds huge;
    huge.max_size = 14;
    huge.alphabet = 6;
    Ceilings loose{20, 10, 20};
    CHECK(estimated_cost(Suite::hhl_equality, huge) > kHardCapFillings);
    try {
        check_bounds(Suite::hhl_equality, huge, loose);
        FAIL("expected refusal");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("estimated cost") != std::string::npos);
        CHECK(std::string(e.what()).find("hard cap 50000000") != std::string::npos);
    }
}

TEST_CASE("every suite passes at small bounds and reports one line per check") {
    VerifyBounds b;
    b.max_size = 4;
    b.alphabet = 3;
    b.max_length = 6;
    b.max_letter = 3;
    for (Suite s : kAll) {
        const VerifyReport r = run_suite(s, b);
        CHECK(r.passed);
        CHECK(r.failures == 0);
        CHECK(r.checks > 0);
        CHECK(r.text.rfind("suite " + to_string(s), 0) == 0);
        const std::string tail = "summary PASS " + std::to_string(r.checks) + "/" + std::to_string(r.checks) + "\n";
        CHECK(r.text.size() >= tail.size());
        CHECK(r.text.compare(r.text.size() - tail.size(), tail.size(), tail) == 0);
        CHECK(r.text.find("FAIL") == std::string::npos);
    }
}

TEST_CASE("conjecture suite on a single shape") {
    VerifyBounds b;
    b.shape = Partition({2, 2});
    b.alphabet = 2;
    const VerifyReport r = run_suite(Suite::conjecture, b);
    CHECK(r.passed);
    CHECK(r.text.find("pairs 16") != std::string::npos);
}

TEST_CASE("reports do not depend on the thread count") {
    VerifyBounds one;
    one.max_size = 5;
    VerifyBounds four = one;
    four.threads = 4;
    for (Suite s : kAll) CHECK(run_suite(s, one).text == run_suite(s, four).text);
}
