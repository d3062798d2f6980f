#include <doctest.h>

#include "schubert/config.hpp"
#include "schubert/errors.hpp"
#include "schubert/json_io.hpp"

using namespace schubert;

TEST_CASE("schur combination wire format") {
    SchurCombination c;
    c.add_term(Partition{2}, 1);
    c.add_term(Partition{1, 1}, 1);
    nlohmann::json j = to_json(c);
    CHECK(j.dump() == R"({"1,1":1,"2":1})");
    CHECK(schur_combination_from_json(j) == c);

    CHECK_THROWS_AS(schur_combination_from_json(nlohmann::json::parse(R"({"1,3":1})")), input_error);
    CHECK_THROWS_AS(schur_combination_from_json(nlohmann::json::parse(R"([1])")), input_error);
}

TEST_CASE("cohomology class wire format") {
    CohomologyClass c;
    c.shape = {2, 2};
    c.terms.add_term(Partition{2, 2}, 3);
    nlohmann::json j = to_json(c);
    CHECK(j["shape"]["m"] == 2);
    CHECK(j["scale"] == 2);
    CHECK(j["terms"].dump() == R"({"2,2":3})");
}

TEST_CASE("rational matrix wire format") {
    auto j = nlohmann::json::parse(R"([[1,"1/2"],["-3/4",2]])");
    RationalMatrix m = rational_matrix_from_json(j);
    CHECK(m.at(0, 1) == mpq_class(1, 2));
    CHECK(m.at(1, 0) == mpq_class(-3, 4));
    CHECK(to_json(m).dump() == R"([[1,"1/2"],["-3/4",2]])");

    CHECK_THROWS_AS(rational_matrix_from_json(nlohmann::json::parse(R"([[1],[2,3]])")), input_error);
    CHECK_THROWS_AS(rational_matrix_from_json(nlohmann::json::parse(R"([["x"]])")), input_error);
    CHECK_THROWS_AS(rational_matrix_from_json(nlohmann::json::parse(R"("1")")), input_error);
}

TEST_CASE("torus element wire format") {
    auto j = nlohmann::json::parse(R"({"rank":2,"terms":{"1,0":1,"-1,0":1}})");
    Laurent x = laurent_from_json(j);
    CHECK(x.coefficient({1, 0}) == 1);
    CHECK(x.coefficient({-1, 0}) == 1);
    CHECK(laurent_from_json(to_json(x)) == x);

    CHECK_THROWS_AS(laurent_from_json(nlohmann::json::parse(R"({"rank":2,"terms":{"1":1}})")), input_error);
    CHECK_THROWS_AS(laurent_from_json(nlohmann::json::parse(R"({"terms":{}})")), input_error);
}

TEST_CASE("budget config parsing") {
    Budget b = parse_budget_text("p_max = 5\n# comment\ntensor_entries = 1000 ; inline\nexterior_cells=6\nseries_slack = 3\n");
    CHECK(b.p_max == 5);
    CHECK(b.tensor_entries == 1000);
    CHECK(b.exterior_cells == 6);
    CHECK(b.series_slack == 3);

    CHECK(parse_budget_text("").p_max == Budget{}.p_max);
    CHECK(parse_budget_text("[budgets]\np_max = 4\n").p_max == 4);

    CHECK_THROWS_AS(parse_budget_text("p_max 5"), input_error);
    CHECK_THROWS_AS(parse_budget_text("mystery = 1"), input_error);
    CHECK_THROWS_AS(parse_budget_text("p_max = 0"), input_error);
    CHECK_THROWS_AS(parse_budget_text("p_max = banana"), input_error);
}
