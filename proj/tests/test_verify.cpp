#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "bjw/printer.hpp"
#include "bjw/verify.hpp"
#include "oracle.hpp"

using namespace bjw;
using bjw::testing::oracle_normal_form;

namespace {

OrderingVector uniform_vector(const ClassicalMonomial& m) {
    OrderingVector v;
    v.monomial = m;
    std::vector<Word> words = all_orderings(m);
    for (const Word& w : words) v.weights[w] = Rational(1, BigInt(words.size()));
    return v;
}

}  // namespace

TEST_CASE("exact linear solver: unique solution") {
    // x + y = 3, x - y = 1  ->  x = 2, y = 1
    std::vector<std::vector<Rational>> a = {{1, 1}, {1, -1}};
    std::vector<Rational> b = {3, 1};
    AffineSolution sol = solve_exact(a, b);
    REQUIRE(sol.feasible);
    CHECK(sol.dimension() == 0);
    CHECK(sol.particular == std::vector<Rational>{2, 1});
}

TEST_CASE("exact linear solver: underdetermined system") {
    // x + y + z = 1 with a redundant doubled row.
    std::vector<std::vector<Rational>> a = {{1, 1, 1}, {2, 2, 2}};
    std::vector<Rational> b = {1, 2};
    AffineSolution sol = solve_exact(a, b);
    REQUIRE(sol.feasible);
    CHECK(sol.dimension() == 2);
    for (const auto& v : sol.nullspace) {
        Rational dot(0);
        for (const Rational& x : v) dot += x;
        CHECK(dot == 0);
    }
    CHECK(affine_contains(sol, {Rational(1, 3), Rational(1, 3), Rational(1, 3)}));
    CHECK_FALSE(affine_contains(sol, {1, 1, 1}));
}

TEST_CASE("exact linear solver: infeasible and fractional") {
    std::vector<std::vector<Rational>> a = {{1, 1}, {1, 1}};
    std::vector<Rational> b = {1, 2};
    CHECK_FALSE(solve_exact(a, b).feasible);

    std::vector<std::vector<Rational>> c = {{Rational(1, 2), Rational(1, 3)}};
    std::vector<Rational> d = {Rational(1, 6)};
    AffineSolution sol = solve_exact(c, d);
    REQUIRE(sol.feasible);
    CHECK(sol.dimension() == 1);
    // Resubstitute particular and particular + basis.
    auto check_row = [&](const std::vector<Rational>& x) {
        CHECK(Rational(1, 2) * x[0] + Rational(1, 3) * x[1] == Rational(1, 6));
    };
    check_row(sol.particular);
    std::vector<Rational> shifted = sol.particular;
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += sol.nullspace[0][i];
    check_row(shifted);
}

TEST_CASE("power commutator identity") {
    CHECK(check_eq7(1, 1));
    CHECK(check_eq7(2, 1));
    for (unsigned m = 1; m <= 4; ++m)
        for (unsigned n = 1; n <= 4; ++n) REQUIRE(check_eq7(m, n));
    CHECK_THROWS_AS(check_eq7(0, 1), std::invalid_argument);
}

TEST_CASE("commutator conditions hold for born-jordan") {
    auto ok = [](std::pair<bool, bool> r) { return r.first && r.second; };
    CHECK(ok(check_eq11(Rule::BornJordan, {2, 0})));
    CHECK(ok(check_eq11(Rule::BornJordan, {2, 2})));
    CHECK(ok(check_eq11(Rule::BornJordan, {0, 0})));
    for (unsigned d = 0; d <= 6; ++d)
        for (unsigned s = 0; s <= d; ++s) REQUIRE(ok(check_eq11(Rule::BornJordan, {s, d - s})));
}

TEST_CASE("one-sided orderings violate the conditions") {
    auto [q_ok, p_ok] = check_eq11(Rule::Standard, {2, 1});
    CHECK_FALSE((q_ok && p_ok));
}

TEST_CASE("weyl violates the momentum condition first at p^2 q^3") {
    for (unsigned d = 0; d <= 4; ++d) {
        for (unsigned s = 0; s <= d; ++s) {
            auto [q_ok, p_ok] = check_eq11(Rule::Weyl, {s, d - s});
            REQUIRE(q_ok);
            REQUIRE(p_ok);
        }
    }
    auto [q_ok, p_ok] = check_eq11(Rule::Weyl, {2, 3});
    CHECK(q_ok);
    CHECK_FALSE(p_ok);
}

TEST_CASE("solution space for pq is a one-parameter family") {
    SolutionSpace space = ordering_solution_space({1, 1});
    REQUIRE(space.feasible);
    CHECK(space.words.size() == 2);
    CHECK(space.dimension == 1);
    CHECK(solution_space_contains(space, rule_weights(Rule::BornJordan, {1, 1})));
    CHECK(solution_space_contains(space, rule_weights(Rule::Weyl, {1, 1})));
    CHECK(solution_space_contains(space, rule_weights(Rule::Standard, {1, 1})));
}

TEST_CASE("solution space for p^2 is trivial") {
    SolutionSpace space = ordering_solution_space({2, 0});
    REQUIRE(space.feasible);
    CHECK(space.words.size() == 1);
    CHECK(space.dimension == 0);
    CHECK(space.particular.weights.at(Word::from_letters("pp")) == 1);
}

TEST_CASE("solution space resubstitution is exact") {
    for (unsigned s = 0; s <= 3; ++s) {
        for (unsigned r = 0; r <= 3; ++r) {
            SolutionSpace space = ordering_solution_space({s, r});
            REQUIRE(space.feasible);
            REQUIRE(weights_satisfy_conditions(space.particular));
            for (const auto& basis_vec : space.nullspace_basis) {
                OrderingVector shifted = space.particular;
                for (const auto& [w, c] : basis_vec) {
                    shifted.weights[w] += c;
                    if (shifted.weights[w] == 0) shifted.weights.erase(w);
                }
                REQUIRE(weights_satisfy_conditions(shifted));
            }
            REQUIRE(solution_space_contains(space, rule_weights(Rule::BornJordan, {s, r})));
            REQUIRE(solution_space_contains(space, uniform_vector({s, r})));
        }
    }
}

TEST_CASE("both quantizations of p^2 q^2 satisfy the conditions") {
    SolutionSpace space = ordering_solution_space({2, 2});
    REQUIRE(space.feasible);
    CHECK(solution_space_contains(space, rule_weights(Rule::BornJordan, {2, 2})));
    CHECK(solution_space_contains(space, rule_weights(Rule::Weyl, {2, 2})));
}

TEST_CASE("weyl weights drop out of the solution space at p^2 q^3") {
    SolutionSpace space = ordering_solution_space({2, 3});
    REQUIRE(space.feasible);
    CHECK(solution_space_contains(space, rule_weights(Rule::BornJordan, {2, 3})));
    CHECK_FALSE(solution_space_contains(space, rule_weights(Rule::Weyl, {2, 3})));
    // The uniform vector still satisfies the conditions: it represents the
    // Weyl operator through a different word expansion.
    CHECK(solution_space_contains(space, uniform_vector({2, 3})));
}

TEST_CASE("bj-weyl differences in low degree") {
    CHECK(bj_weyl_difference({1, 1}).difference.is_zero());
    CHECK(bj_weyl_difference({2, 1}).difference.is_zero());

    BjWeylDifference d = bj_weyl_difference({2, 2});
    CHECK(d.central);
    CHECK(d.difference == NCPoly::scalar(ScalarCoeff::term(2, GaussianRational(Rational(-1, 6)))));

    // Cross-check through the independent rewriter.
    ClassicalPoly m22 = ClassicalPoly::monomial({2, 2});
    CHECK(d.difference == oracle_normal_form(bj_quantize(m22) - weyl_quantize(m22)));
}

TEST_CASE("difference vanishes on one-sided monomials") {
    for (unsigned s = 0; s <= 5; ++s) {
        for (unsigned r = 0; r <= 5; ++r) {
            if (s <= 1 || r <= 1 || s + r <= 2) REQUIRE(bj_weyl_difference({s, r}).difference.is_zero());
        }
    }
}

TEST_CASE("smallest non-central difference") {
    CHECK(smallest_noncentral_difference(2) == std::nullopt);
    CHECK(smallest_noncentral_difference(4) == std::nullopt);

    auto found = smallest_noncentral_difference(8);
    REQUIRE(found.has_value());
    CHECK(*found == ClassicalMonomial{2, 3});

    BjWeylDifference d = bj_weyl_difference(*found);
    CHECK_FALSE(d.central);
    NCPoly expected = NCPoly::from_word(Word::from_letters("q"),
                                        ScalarCoeff::term(2, GaussianRational(Rational(-1, 2))));
    CHECK(d.difference == expected);
    ClassicalPoly m23 = ClassicalPoly::monomial({2, 3});
    CHECK(d.difference == oracle_normal_form(bj_quantize(m23) - weyl_quantize(m23)));

    CHECK_THROWS_AS(smallest_noncentral_difference(13), std::invalid_argument);
}

TEST_CASE("golden fixture stays in sync") {
    std::ifstream f(std::string(GOLDEN_DIR) + "/verify_golden.json");
    REQUIRE(f.good());
    nlohmann::json golden = nlohmann::json::parse(f);

    CHECK(to_string(bj_weyl_difference({2, 2}).difference) ==
          golden["bj_weyl_difference"]["p^2*q^2"].get<std::string>());
    auto found = smallest_noncentral_difference(8);
    REQUIRE(found.has_value());
    CHECK(to_string(*found) == golden["smallest_noncentral"]["bound_8"].get<std::string>());
    CHECK(golden["smallest_noncentral"]["bound_4"].is_null());
    CHECK(to_string(bj_weyl_difference(*found).difference) ==
          golden["bj_weyl_difference"]["p^2*q^3"].get<std::string>());
    for (const auto& [key, dim] : golden["solution_space_dimension"].items()) {
        unsigned s = static_cast<unsigned>(key[0] - '0');
        unsigned r = static_cast<unsigned>(key[2] - '0');
        CHECK(ordering_solution_space({s, r}).dimension == dim.get<std::size_t>());
    }
}
