#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "rado/search.hpp"

using namespace rado;

TEST_CASE("valid coloring below the Rado number, none at it") {
    const auto below = find_valid_coloring(6, {4, 2, 2});
    const auto* valid = std::get_if<ValidColoring>(&below);
    REQUIRE(valid);
    CHECK(!find_monochromatic_solution(valid->coloring, {4, 2, 2}));

    CHECK(std::holds_alternative<NoValidColoring>(find_valid_coloring(7, {4, 2, 2})));
    CHECK(std::holds_alternative<NoValidColoring>(find_valid_coloring(3, {2, 2, 2})));
}

TEST_CASE("exact values by exhaustive search") {
    CHECK(rado_brute({4, 2, 2}) == RadoValue::finite(7));
    CHECK(rado_brute({3, 1, 2}) == RadoValue::finite(4));
}

TEST_CASE("search cannot decide the infinite case, only bound it") {
    SearchBudget budget;
    budget.max_n = 100;
    CHECK(rado_brute({2, 1, 2}, budget) == RadoValue::unknown_above(100));
}

TEST_CASE("search agrees with the closed form on a small grid") {
    for (std::int64_t m = 2; m <= 4; ++m)
        for (std::int64_t c = 1; c <= 4; ++c) {
            const auto v = rado_number(m, c);
            if (!v.is_finite()) continue;
            REQUIRE(rado_brute({m, c, 2}) == v);
        }
}

TEST_CASE("search agrees with full enumeration on tiny domains") {
    // Exhausts all 2^n colorings with the naive oracle; also confirms that
    // fixing 1 red loses no outcomes.
    const EquationParams cases[] = {{2, 2, 2}, {3, 1, 2}, {2, 1, 3}, {1, 2, 3}, {3, -1, 2}};
    for (const auto& p : cases)
        for (std::int64_t n = 1; n <= 9; ++n) {
            const bool expect = testing::naive_valid_exists(n, p);
            const auto outcome = find_valid_coloring(n, p);
            REQUIRE(std::holds_alternative<ValidColoring>(outcome) == expect);
        }
}

TEST_CASE("refutations are monotone in n") {
    for (const auto& p : {EquationParams{3, 3, 2}, EquationParams{4, 4, 2}}) {
        const std::int64_t r = rado_number(p.m, p.c).value();
        CHECK(std::holds_alternative<ValidColoring>(find_valid_coloring(r - 1, p)));
        CHECK(std::holds_alternative<NoValidColoring>(find_valid_coloring(r, p)));
        CHECK(std::holds_alternative<NoValidColoring>(find_valid_coloring(r + 1, p)));
        CHECK(std::holds_alternative<NoValidColoring>(find_valid_coloring(r + 2, p)));
    }
}

TEST_CASE("thread count does not change the outcome") {
    SearchBudget four;
    four.threads = 4;
    for (const std::int64_t n : {10, 11, 12}) {
        const auto seq = find_valid_coloring(n, {5, 3, 2});
        const auto par = find_valid_coloring(n, {5, 3, 2}, four);
        REQUIRE(seq.index() == par.index());
        if (const auto* v = std::get_if<ValidColoring>(&seq))
            CHECK(v->coloring == std::get<ValidColoring>(par).coloring);
        if (const auto* r = std::get_if<NoValidColoring>(&seq))
            CHECK(r->nodes_explored == std::get<NoValidColoring>(par).nodes_explored);
    }
    CHECK(rado_brute({5, 3, 2}, four) == rado_brute({5, 3, 2}));
}

TEST_CASE("budgets are ordinary outcomes") {
    SearchBudget tiny;
    tiny.max_nodes = 2;
    const auto outcome = find_valid_coloring(12, {3, 3, 2}, tiny);
    CHECK(std::holds_alternative<BudgetExhausted>(outcome));

    SearchBudget shallow;
    shallow.max_n = 3;
    CHECK(rado_brute({3, 3, 2}, shallow) == RadoValue::unknown_above(3));

    SearchBudget starved;
    starved.max_nodes = 1;
    const auto value = rado_brute({4, 4, 2}, starved);
    CHECK(value.is_unknown());
}

TEST_CASE("certificates accompany finite results") {
    const auto res = rado_brute_certified({4, 2, 2});
    REQUIRE(res.value == RadoValue::finite(7));
    REQUIRE(res.certificate);
    CHECK(res.certificate->size() == 6);
    CHECK(!find_monochromatic_solution(*res.certificate, {4, 2, 2}));
}

TEST_CASE("negative c exploration") {
    CHECK(explore_negative_c(50, -48) == RadoValue::finite(1));
    CHECK(explore_negative_c(4, -2) == RadoValue::finite(1));
    // Frozen from exhaustive runs. Note the c >= 1 closed form does not
    // blindly extend here: its expression would give 4 for (5, -2).
    CHECK(explore_negative_c(5, -2) == RadoValue::finite(5));
    CHECK(explore_negative_c(6, -2) == RadoValue::finite(6));
    CHECK_THROWS_AS(explore_negative_c(4, 1), std::domain_error);
    CHECK_THROWS_AS(explore_negative_c(4, -4), std::domain_error);
}

TEST_CASE("degenerate equations") {
    // m + c = a makes (1, ..., 1 | 1) a solution, so R = 1.
    CHECK(rado_brute({2, 1, 3}) == RadoValue::finite(1));
    CHECK(rado_brute({50, -48, 2}) == RadoValue::finite(1));
}
