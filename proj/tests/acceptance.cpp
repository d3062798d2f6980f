// Acceptance suite: the exact identities the engine exists to uphold, each
// run over its pinned grid and printed as one pass/fail line. Exits nonzero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "schubert/curvature.hpp"
#include "schubert/grassmannian.hpp"
#include "schubert/lambda_ring.hpp"
#include "schubert/schur_functor.hpp"
#include "schubert/schur_ring.hpp"
#include "schubert/verify.hpp"
#include "test_util.hpp"

using namespace schubert;
using testutil::exterior_matrices_match;
using testutil::random_matrix;
using testutil::Rng;

namespace {

struct Tally {
    long long cases = 0;
    long long failures = 0;
    void expect(bool ok) {
        ++cases;
        if (!ok) ++failures;
    }
};

std::vector<Partition> partitions_up_to(int max_weight, int max_part = 1 << 20) {
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w)
        for (const auto& la : partitions_in_rectangle(w, w, std::min(w, max_part))) out.push_back(la);
    return out;
}

long long factorial(int p) {
    long long f = 1;
    for (int i = 2; i <= p; ++i) f *= i;
    return f;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - i + 1) / i;
    return r;
}

// 1. Theorem 1: rho is a ring homomorphism onto the Schubert basis.
Tally criterion_theorem() {
    Tally t;
    auto pool = partitions_up_to(4);
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        GrassmannianShape shape{m, n};
        for (const auto& la : pool)
            for (const auto& mu : pool)
                t.expect(rho(schur_multiply(la, mu), shape) == schubert_product(la, mu, shape));
    }
    return t;
}

// 2. The central coincidence: character-evaluation oracle vs Pieri/Giambelli.
Tally criterion_two_routes() {
    Tally t;
    auto pool = partitions_up_to(6, 4);
    for (const auto& la : pool)
        for (const auto& mu : pool) {
            if (la.weight() + mu.weight() > 6) continue;
            t.expect(lr_oracle(la, mu) == schur_multiply(la, mu));
        }
    return t;
}

// 3. The form identity: wedge products of Schubert forms decompose with the
// truncated structure constants.
Tally criterion_form_identity() {
    Tally t;
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
        GrassmannianShape shape{m, n};
        std::vector<Partition> fitting;
        for (int w = 0; w <= m * n; ++w)
            for (const auto& la : partitions_in_rectangle(w, n, m)) fitting.push_back(la);
        for (const auto& la : fitting)
            for (const auto& mu : fitting) {
                if (la.weight() + mu.weight() > m * n) continue;
                t.expect(wedge_decompose(la, mu, m, n) == truncate(schur_multiply(la, mu), shape).terms);
            }
    }
    return t;
}

// 4. Rectangle vanishing of the forms, both directions.
Tally criterion_vanishing() {
    Tally t;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for (int w = 0; w <= m * n + 2; ++w)
                for (const auto& la : partitions_of(w))
                    t.expect(is_zero_form(la, m, n) == !la.fits_rectangle(n, m));
    return t;
}

// 5. Young symmetrizer quasi-idempotency, with the p = 2 closed forms.
Tally criterion_symmetrizer() {
    Tally t;
    for (int p = 1; p <= 5; ++p)
        for (const auto& la : partitions_of(p)) {
            GroupAlgebraElement c = young_symmetrizer(la);
            t.expect(c * c == c * (factorial(p) / standard_tableau_count(la)));
        }
    GroupAlgebraElement c2(2), c11(2);
    Permutation swap = Permutation::from_images({1, 0});
    c2.add_term(Permutation(2), 1);
    c2.add_term(swap, 1);
    c11.add_term(Permutation(2), 1);
    c11.add_term(swap, -1);
    t.expect(young_symmetrizer(Partition{2}) == c2);
    t.expect(young_symmetrizer(Partition{1, 1}) == c11);
    return t;
}

// 6. Example 2: the Schur matrix of a column shape is the compound matrix.
Tally criterion_exterior() {
    Tally t;
    Rng rng(601);
    for (int d = 1; d <= 4; ++d) {
        RationalMatrix a = random_matrix(rng, d);
        for (int k = 1; k <= d; ++k) {
            Partition column(std::vector<int>(static_cast<std::size_t>(k), 1));
            RationalMatrix s = schur_matrix(column, a);
            RationalMatrix e = exterior_matrix(k, a);
            t.expect(exterior_matrices_match(k, d, s, e));
            t.expect(s.trace() == e.trace());
        }
        t.expect(schur_matrix(Partition{1}, a) == a);
        RationalMatrix full = schur_matrix(Partition(std::vector<int>(static_cast<std::size_t>(d), 1)), a);
        t.expect(full.rows() == 1 && full.at(0, 0) == a.determinant());
    }
    return t;
}

// 7. Functoriality of the Schur matrices on 20 seeded pairs.
Tally criterion_functoriality() {
    Tally t;
    Rng rng(701);
    std::vector<std::pair<Partition, int>> grid;
    for (int d = 2; d <= 3; ++d)
        for (int w = 1; w <= 4; ++w)
            for (const auto& la : partitions_of(w)) grid.emplace_back(la, d);
    for (int i = 0; i < 20; ++i) {
        const auto& [la, d] = grid[static_cast<std::size_t>(i) % grid.size()];
        RationalMatrix a = random_matrix(rng, d), b = random_matrix(rng, d);
        t.expect(schur_matrix(la, a * b) == schur_matrix(la, a) * schur_matrix(la, b));
        t.expect(schur_matrix(la, RationalMatrix::identity(d)) ==
                 RationalMatrix::identity(schur_matrix(la, a).rows()));
    }
    return t;
}

// 8. Trace coherence: character sum = matrix trace = Schur polynomial.
Tally criterion_trace() {
    Tally t;
    Rng rng(801);
    for (int d = 2; d <= 3; ++d)
        for (int w = 1; w <= 4; ++w)
            for (const auto& la : partitions_of(w)) {
                RationalMatrix a = random_matrix(rng, d);
                t.expect(schur_trace(la, a) == schur_matrix(la, a).trace());

                std::vector<mpq_class> eigs;
                for (int i = 0; i < d; ++i) eigs.push_back(to_mpq(rng.range(1, 9), rng.range(1, 3)));
                RationalMatrix diag = RationalMatrix::diagonal(eigs);
                mpq_class via_char = schur_trace(la, diag);
                t.expect(via_char == schur_matrix(la, diag).trace());
                t.expect(via_char == schur_to_monomials(la, d).evaluate(eigs));
            }
    return t;
}

// 9. Lambda-ring suite: Examples 4, 5, 6.
Tally criterion_lambda() {
    Tally t;
    for (int n = 1; n <= 4; ++n) {
        TorusElement x = standard_character(n);
        for (int k = 1; k <= n; ++k) {
            GradedPolynomial ck = chern_class(k, x);
            t.expect(ck.is_integral() && ck.to_laurent() == elementary_symmetric(k, n));
        }
    }
    for (int rank = 1; rank <= 3; ++rank) {
        std::vector<int> e(static_cast<std::size_t>(rank), -2);
        while (true) {
            TorusElement line = Laurent::monomial(e) - Laurent::constant(rank, 1);
            for (int k = 2; k <= 4; ++k) t.expect(gamma_op(k, line).is_zero());
            int i = 0;
            while (i < rank && e[static_cast<std::size_t>(i)] == 2) e[static_cast<std::size_t>(i++)] = -2;
            if (i == rank) break;
            ++e[static_cast<std::size_t>(i)];
        }
    }
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 2 * n; k += 2)
            t.expect(chern_class(k, symplectic_standard_character(n)).is_zero());
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m)
            for (int k = 1; k <= n; ++k) {
                GrassmannianShape shape{m, n};
                Partition column(std::vector<int>(static_cast<std::size_t>(k), 1));
                t.expect(chern_to_schubert(k, shape) == truncate(SchurCombination::single(column), shape));
            }
    return t;
}

// 10. Betti numbers, Poincare duality, and the quaternionic doubling.
Tally criterion_duality() {
    Tally t;
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            GrassmannianShape shape{m, n};
            long long total = 0;
            for (int k = 0; k <= m * n; ++k) {
                total += betti_number(shape, k);
                t.expect(betti_number(shape, k) == betti_number(shape, m * n - k));
            }
            t.expect(total == binomial(m + n, n));
        }
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            GrassmannianShape shape{m, n};
            std::vector<Partition> fitting;
            for (int w = 0; w <= m * n; ++w)
                for (const auto& la : partitions_in_rectangle(w, n, m)) fitting.push_back(la);
            for (const auto& la : fitting)
                for (const auto& mu : fitting) {
                    long long expected = (mu == rectangle_complement(la, shape)) ? 1 : 0;
                    t.expect(top_pairing(schubert_product(la, mu, shape)) == expected);
                }
        }
    auto pool = partitions_up_to(4);
    for (int m = 2; m <= 3; ++m)
        for (int n = 2; n <= 3; ++n) {
            GrassmannianShape shape{m, n};
            for (const auto& la : pool)
                for (const auto& mu : pool) {
                    if (!shape.admits(la) || !shape.admits(mu)) continue;
                    CohomologyClass sp = sp_product(la, mu, shape);
                    CohomologyClass sigma = schubert_product(la, mu, shape);
                    t.expect(sp.terms == sigma.terms && sp.degree_scale == 4 && sigma.degree_scale == 2);
                }
        }
    return t;
}

}  // namespace

int main() {
    struct Criterion {
        const char* label;
        double limit_seconds;
        std::function<Tally()> run;
    };
    const std::vector<Criterion> criteria = {
        {"Theorem 1 homomorphism: rho(schur_multiply) = schubert_product", 10, criterion_theorem},
        {"two-route structure constants: lr_oracle = schur_multiply", 120, criterion_two_routes},
        {"form identity: wedge_decompose = truncated coefficients", 60, criterion_form_identity},
        {"rectangle vanishing of Schubert forms", 60, criterion_vanishing},
        {"Young symmetrizer quasi-idempotency", 30, criterion_symmetrizer},
        {"column Schur matrices are compound matrices", 0, criterion_exterior},
        {"functoriality of Schur matrices", 0, criterion_functoriality},
        {"trace coherence across all three routes", 0, criterion_trace},
        {"lambda-ring Chern classes (standard, line, symplectic, bridge)", 30, criterion_lambda},
        {"Betti numbers, duality pairing, quaternionic doubling", 10, criterion_duality},
    };

    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Tally t;
        std::string note;
        try {
            t = criteria[i].run();
        } catch (const std::exception& e) {
            t.failures = t.cases = 1;
            note = std::string(" [threw: ") + e.what() + "]";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = t.failures == 0;
        bool in_budget = criteria[i].limit_seconds <= 0 || secs < criteria[i].limit_seconds;
        if (!in_budget) note += " [over time budget]";
        ok = ok && in_budget;
        all_ok = all_ok && ok;
        std::printf("%s  %2zu. %s (%lld cases, %lld failed, %.2fs)%s\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].label, t.cases, t.failures, secs, note.c_str());
    }
    std::printf("%s\n", all_ok ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES PRESENT");
    return all_ok ? 0 : 1;
}
