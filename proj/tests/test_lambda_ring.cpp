#include <doctest.h>

#include "schubert/errors.hpp"
#include "schubert/lambda_ring.hpp"

using namespace schubert;

namespace {

Laurent alpha(int rank, int i, int power = 1) { return Laurent::variable_power(rank, i, power); }

}  // namespace

TEST_CASE("lambda operations on sums of lines") {
    Laurent x = alpha(2, 1) + alpha(2, 2);
    CHECK(lambda_op(2, x) == Laurent::monomial({1, 1}));
    CHECK(lambda_op(0, x) == Laurent::constant(2, 1));
    CHECK(lambda_op(1, x) == x);

    // a single character has lambda_t = 1 + xi t
    Laurent xi = Laurent::monomial({2, -1});
    CHECK(lambda_op(2, xi).is_zero());
    CHECK(lambda_op(3, xi).is_zero());

    Laurent e2 = lambda_op(2, alpha(3, 1) + alpha(3, 2) + alpha(3, 3));
    Laurent expected(3);
    expected.add_term({1, 1, 0}, 1);
    expected.add_term({1, 0, 1}, 1);
    expected.add_term({0, 1, 1}, 1);
    CHECK(e2 == expected);
}

TEST_CASE("gamma operations") {
    Laurent x = alpha(2, 1) + alpha(2, 2) * 3;
    CHECK(gamma_op(1, x) == x);
    CHECK(gamma_op(0, x) == Laurent::constant(2, 1));

    // gamma_t(xi - 1) = 1 + (xi - 1) t exactly
    Laurent line = alpha(1, 1) - Laurent::constant(1, 1);
    CHECK(gamma_op(1, line) == line);
    CHECK(gamma_op(2, line).is_zero());
    CHECK(gamma_op(3, line).is_zero());
}

TEST_CASE("augmentation counts dimensions") {
    CHECK(augmentation(alpha(2, 1) + alpha(2, 2)) == 2);
    CHECK(augmentation(alpha(2, 1) - alpha(2, 2)) == 0);
    CHECK(augmentation(Laurent::constant(2, -5)) == -5);
}

TEST_CASE("gr image substitutes alpha = 1 + u") {
    Laurent x = alpha(2, 1) - Laurent::constant(2, 1);
    GradedPolynomial u1(2);
    u1.add_term({1, 0}, 1);
    CHECK(gr_image(x, 3) == u1);

    Laurent prod = (alpha(2, 1) - Laurent::constant(2, 1)) * (alpha(2, 2) - Laurent::constant(2, 1));
    GradedPolynomial u1u2(2);
    u1u2.add_term({1, 1}, 1);
    CHECK(gr_image(prod, 3) == u1u2);

    Laurent inv = alpha(1, 1, -1) - Laurent::constant(1, 1);
    GradedPolynomial expected(1);
    expected.add_term({1}, -1);
    expected.add_term({2}, 1);
    CHECK(gr_image(inv, 2) == expected);
}

TEST_CASE("chern classes of the standard character") {
    GradedPolynomial c2 = chern_class(2, standard_character(3));
    GradedPolynomial expected(3);
    expected.add_term({1, 1, 0}, 1);
    expected.add_term({1, 0, 1}, 1);
    expected.add_term({0, 1, 1}, 1);
    CHECK(c2 == expected);

    // degree-1 part of the reduced image
    Laurent y = alpha(2, 1) * 2 + alpha(2, 2);
    GradedPolynomial c1 = chern_class(1, y);
    GradedPolynomial want(2);
    want.add_term({1, 0}, 2);
    want.add_term({0, 1}, 1);
    CHECK(c1 == want);
}

TEST_CASE("odd symplectic chern classes vanish") {
    for (int n = 1; n <= 3; ++n) {
        TorusElement y = symplectic_standard_character(n);
        for (int k = 1; k <= 2 * n; k += 2) CHECK(chern_class(k, y).is_zero());
        // even ones do not all vanish
        CHECK_FALSE(chern_class(2, y).is_zero());
    }
}

TEST_CASE("chern to schubert lands on the special classes") {
    CHECK(chern_to_schubert(1, {2, 2}).terms == SchurCombination::single(Partition{1}));
    CHECK(chern_to_schubert(2, {2, 2}).terms == SchurCombination::single(Partition{1, 1}));
    CHECK(chern_to_schubert(2, {1, 2}).terms == SchurCombination::single(Partition{1, 1}));
    CHECK(chern_to_schubert(3, {2, 2}).is_zero());  // k > n
}

TEST_CASE("series truncation is a per-call parameter") {
    Laurent x = alpha(1, 1, -2);
    GradedPolynomial d2 = gr_image(x, 2);
    GradedPolynomial d4 = gr_image(x, 4);
    for (int d = 0; d <= 2; ++d) CHECK(d2.homogeneous_part(d) == d4.homogeneous_part(d));
    CHECK(d4.homogeneous_part(4).is_zero() == false);
}

TEST_CASE("input guards") {
    CHECK_THROWS_AS(lambda_op(-1, Laurent::constant(1, 1)), input_error);
    CHECK_THROWS_AS(chern_class(0, Laurent::constant(1, 1)), input_error);
    CHECK_THROWS_AS(gr_image(Laurent::constant(1, 1), -1), input_error);
}

TEST_CASE("overflowing coefficients are refused, not corrupted") {
    // lambda^10 of a character with a huge multiplicity needs binomial(10^9, 10)
    Laurent huge = Laurent::constant(1, 1000000000) * Laurent::variable_power(1, 1);
    CHECK_THROWS_AS(lambda_op(10, huge), budget_error);
}
