#include "schubert/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "schubert/curvature.hpp"
#include "schubert/errors.hpp"
#include "schubert/rational.hpp"
#include "schubert/grassmannian.hpp"
#include "schubert/lambda_ring.hpp"
#include "schubert/rational_matrix.hpp"
#include "schubert/schur_functor.hpp"
#include "schubert/schur_ring.hpp"
#include "schubert/version.hpp"

namespace schubert {

namespace {

class SuiteRun {
public:
    explicit SuiteRun(std::string name, unsigned seed) : start_(std::chrono::steady_clock::now()) {
        report_.suite = std::move(name);
        report_.seed = seed;
        report_.engine = engine_version;
    }

    void check(const std::string& case_id, bool ok, const std::string& expected, const std::string& actual) {
        ++report_.cases;
        if (!ok) report_.failures.push_back({case_id, expected, actual});
    }

    template <typename T>
    void check_eq(const std::string& case_id, const T& expected, const T& actual) {
        ++report_.cases;
        if (!(expected == actual)) report_.failures.push_back({case_id, to_text(expected), to_text(actual)});
    }

    VerificationReport finish() {
        std::sort(report_.failures.begin(), report_.failures.end());
        report_.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return std::move(report_);
    }

private:
    static std::string to_text(const SchurCombination& c) { return c.to_string(); }
    static std::string to_text(const CohomologyClass& c) { return c.terms.to_string(); }
    static std::string to_text(long long v) { return std::to_string(v); }
    static std::string to_text(bool v) { return v ? "true" : "false"; }
    static std::string to_text(const GroupAlgebraElement& g) { return g.to_string(); }
    static std::string to_text(const Laurent& x) { return x.to_string(); }

    VerificationReport report_;
    std::chrono::steady_clock::time_point start_;
};

std::vector<Partition> partitions_up_to(int max_weight, int max_part = 1 << 20) {
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w)
        for (const auto& la : partitions_in_rectangle(w, w, std::min(w, max_part))) out.push_back(la);
    return out;
}

long long binomial_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - i + 1) / i;
    return r;
}

long long factorial_ll(int p) {
    long long f = 1;
    for (int i = 2; i <= p; ++i) f *= i;
    return f;
}

// Deterministic small generator; stdlib distributions are not pinned across
// platforms, so raw modular draws are used throughout.
struct Rng {
    unsigned long long state;
    explicit Rng(unsigned seed) : state(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}
    unsigned long long next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 17;
    }
    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(next() % static_cast<unsigned long long>(hi - lo + 1));
    }
};

}  // namespace

VerificationReport verify_theorem(const VerifyOptions& opts) {
    int max_weight = opts.max_weight < 0 ? 4 : opts.max_weight;
    int max_m = opts.max_m < 0 ? 3 : opts.max_m;
    int max_n = opts.max_n < 0 ? 3 : opts.max_n;
    SuiteRun run("theorem", opts.seed);

    std::vector<Partition> pool = partitions_up_to(max_weight);
    for (int m = 2; m <= max_m; ++m)
        for (int n = 2; n <= max_n; ++n) {
            GrassmannianShape shape{m, n};
            for (const auto& la : pool)
                for (const auto& mu : pool) {
                    std::string id = "rho m=" + std::to_string(m) + " n=" + std::to_string(n) + " la=" +
                                     la.to_string() + " mu=" + mu.to_string();
                    CohomologyClass lhs = rho(schur_multiply(la, mu), shape);
                    CohomologyClass rhs = schubert_product(la, mu, shape);
                    run.check_eq(id, rhs.terms, lhs.terms);
                }
        }

    for (int m = 1; m <= std::max(max_m, 5); ++m)
        for (int n = 1; n <= std::max(max_n, 5); ++n) {
            GrassmannianShape shape{m, n};
            long long total = 0;
            for (int k = 0; k <= m * n; ++k) total += betti_number(shape, k);
            run.check_eq("betti-sum m=" + std::to_string(m) + " n=" + std::to_string(n),
                         binomial_ll(m + n, n), total);
            for (int k = 0; k <= m * n; ++k)
                run.check_eq("betti-symmetry m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                 " k=" + std::to_string(k),
                             betti_number(shape, m * n - k), betti_number(shape, k));
        }

    for (int m = 2; m <= std::min(max_m, 3); ++m)
        for (int n = 2; n <= std::min(max_n, 3); ++n) {
            GrassmannianShape shape{m, n};
            std::vector<Partition> fitting;
            for (int w = 0; w <= m * n; ++w)
                for (const auto& la : partitions_in_rectangle(w, n, m)) fitting.push_back(la);
            for (const auto& la : fitting)
                for (const auto& mu : fitting) {
                    long long expected = (mu == rectangle_complement(la, shape)) ? 1 : 0;
                    run.check_eq("duality m=" + std::to_string(m) + " n=" + std::to_string(n) + " la=" +
                                     la.to_string() + " mu=" + mu.to_string(),
                                 expected, top_pairing(schubert_product(la, mu, shape)));
                }
        }

    for (int m = 2; m <= max_m; ++m)
        for (int n = 2; n <= max_n; ++n) {
            GrassmannianShape shape{m, n};
            for (const auto& la : pool)
                for (const auto& mu : pool) {
                    if (!shape.admits(la) || !shape.admits(mu)) continue;
                    CohomologyClass complex_side = schubert_product(la, mu, shape);
                    CohomologyClass quaternionic = sp_product(la, mu, shape);
                    std::string id = "sp m=" + std::to_string(m) + " n=" + std::to_string(n) + " la=" +
                                     la.to_string() + " mu=" + mu.to_string();
                    run.check(id, quaternionic.terms == complex_side.terms && quaternionic.degree_scale == 4,
                              complex_side.terms.to_string() + " at scale 4",
                              quaternionic.terms.to_string() + " at scale " +
                                  std::to_string(quaternionic.degree_scale));
                }
        }

    return run.finish();
}

VerificationReport verify_oracle(const VerifyOptions& opts) {
    int max_weight = opts.max_weight < 0 ? 6 : opts.max_weight;
    SuiteRun run("oracle", opts.seed);
    if (max_weight > opts.budget.p_max)
        throw budget_error("oracle suite weight bound exceeds p_max");

    std::vector<Partition> pool = partitions_up_to(max_weight, 4);
    for (const auto& la : pool)
        for (const auto& mu : pool) {
            if (la.weight() + mu.weight() > max_weight) continue;
            std::string id = "oracle la=" + la.to_string() + " mu=" + mu.to_string();
            run.check_eq(id, schur_multiply(la, mu), lr_oracle(la, mu, opts.budget, opts.seed));
        }
    return run.finish();
}

namespace {

// Character-sum route to the Schubert form: power sums replaced by traces of
// curvature powers. Entries are even forms, so the symmetric-function
// identity applies verbatim.
GrassmannElement schubert_form_character_route(const Partition& la, const CurvatureMatrix& gamma,
                                               const Budget& budget) {
    int p = la.weight();
    if (p == 0) return GrassmannElement::scalar(gamma.m, gamma.n, 1);
    std::vector<GrassmannElement> power_traces;  // index j-1 holds Tr(Gamma^j)
    for (int j = 1; j <= p; ++j) power_traces.push_back(curvature_trace(curvature_power(gamma, j)));

    GroupAlgebraElement c = young_symmetrizer(la, budget);
    GrassmannElement sum(gamma.m, gamma.n);
    for (const auto& [s, coeff] : c.terms()) {
        GrassmannElement prod = GrassmannElement::scalar(gamma.m, gamma.n, to_mpq(coeff));
        Partition type = s.cycle_type();
        for (int len : type.parts()) {
            if (prod.is_zero()) break;
            prod = prod * power_traces[static_cast<std::size_t>(len - 1)];
        }
        sum += prod;
    }
    return sum * to_mpq(standard_tableau_count(la), factorial_ll(p));
}

}  // namespace

VerificationReport verify_forms(const VerifyOptions& opts) {
    int max_m = opts.max_m < 0 ? 2 : opts.max_m;
    int max_n = opts.max_n < 0 ? 2 : opts.max_n;
    SuiteRun run("forms", opts.seed);

    for (int m = 1; m <= max_m; ++m)
        for (int n = 1; n <= max_n; ++n) {
            GrassmannianShape shape{m, n};
            CurvatureMatrix gamma = curvature_matrix(m, n, opts.budget);
            std::string mn = " m=" + std::to_string(m) + " n=" + std::to_string(n);

            // Chern forms by two routes
            for (int k = 0; k <= n + 1; ++k)
                run.check("eq2-two-routes k=" + std::to_string(k) + mn,
                          chern_form(k, gamma) == chern_form_sign_sum(k, gamma), "equal forms", "differ");

            // rectangle vanishing, both directions
            for (int w = 0; w <= m * n + 2; ++w)
                for (const auto& la : partitions_of(w)) {
                    bool zero = is_zero_form(la, m, n, opts.budget);
                    run.check_eq("vanishing la=" + la.to_string() + mn, !la.fits_rectangle(n, m), zero);
                }

            // type purity and per-degree linear independence
            for (int w = 0; w <= m * n; ++w) {
                std::vector<Partition> fitting = partitions_in_rectangle(w, n, m);
                std::vector<GrassmannElement> forms;
                for (const auto& nu : fitting) {
                    GrassmannElement f = schubert_form(nu, m, n, opts.budget);
                    run.check("type-purity la=" + nu.to_string() + mn, f.is_pure_type(w, w),
                              "type (" + std::to_string(w) + "," + std::to_string(w) + ")", "mixed type");
                    forms.push_back(std::move(f));
                }
                if (forms.empty()) continue;
                std::set<GrassmannElement::Mask> support;
                for (const auto& f : forms)
                    for (const auto& [mono, c] : f.terms()) support.insert(mono);
                RationalMatrix coords(static_cast<int>(support.size()), static_cast<int>(forms.size()));
                int row = 0;
                for (GrassmannElement::Mask mono : support) {
                    for (std::size_t j = 0; j < forms.size(); ++j)
                        coords.at(row, static_cast<int>(j)) = forms[j].coefficient(mono);
                    ++row;
                }
                run.check_eq("independence w=" + std::to_string(w) + mn,
                             static_cast<long long>(forms.size()),
                             static_cast<long long>(coords.reduced_echelon().rank));
            }

            // the product identity, at the shapes where it is pinned
            if (m * n <= 6 && m >= 2 && n >= 2) {
                std::vector<Partition> fitting;
                for (int w = 0; w <= m * n; ++w)
                    for (const auto& la : partitions_in_rectangle(w, n, m)) fitting.push_back(la);
                for (const auto& la : fitting)
                    for (const auto& mu : fitting) {
                        if (la.weight() + mu.weight() > m * n) continue;
                        SchurCombination expected = truncate(schur_multiply(la, mu), shape).terms;
                        run.check_eq("product la=" + la.to_string() + " mu=" + mu.to_string() + mn, expected,
                                     wedge_decompose(la, mu, m, n, opts.budget));
                    }
            }

            // character-sum cross-check at the smallest interesting shape
            if (m == 2 && n == 2) {
                for (int w = 0; w <= 3; ++w)
                    for (const auto& la : partitions_of(w)) {
                        GrassmannElement direct = schubert_form(la, m, n, opts.budget);
                        GrassmannElement viachar = schubert_form_character_route(la, gamma, opts.budget);
                        run.check("frobenius la=" + la.to_string() + mn, direct == viachar, "equal forms",
                                  "differ");
                    }
            }
        }

    return run.finish();
}

VerificationReport verify_lambda(const VerifyOptions& opts) {
    int max_rank = opts.max_n < 0 ? 4 : opts.max_n;
    SuiteRun run("lambda", opts.seed);

    // Chern classes of the standard character are the elementary symmetrics
    for (int n = 1; n <= max_rank; ++n) {
        TorusElement x = standard_character(n);
        for (int k = 1; k <= n + 1; ++k) {
            GradedPolynomial ck = chern_class(k, x, opts.budget);
            Laurent expected = elementary_symmetric(k, n);
            bool ok = ck.is_integral() && ck.to_laurent() == expected;
            run.check("chern-standard n=" + std::to_string(n) + " k=" + std::to_string(k), ok,
                      expected.to_string(), ck.is_integral() ? ck.to_laurent().to_string() : "non-integral");
            run.check("weyl-invariance n=" + std::to_string(n) + " k=" + std::to_string(k), ck.is_symmetric(),
                      "symmetric", "not symmetric");
        }
    }

    // gamma_t(xi - 1) = 1 + (xi - 1) t: all higher gammas collapse
    for (int rank = 1; rank <= std::min(max_rank, 3); ++rank) {
        std::vector<int> e(static_cast<std::size_t>(rank), -2);
        while (true) {
            TorusElement xi = Laurent::monomial(e);
            TorusElement line = xi - Laurent::constant(rank, 1);
            for (int k = 2; k <= 4; ++k) {
                std::string id = "line-collapse rank=" + std::to_string(rank) + " k=" + std::to_string(k) +
                                 " xi=" + xi.to_string();
                run.check_eq(id, Laurent::zero(rank), gamma_op(k, line));
            }
            int i = 0;
            while (i < rank && e[static_cast<std::size_t>(i)] == 2) e[static_cast<std::size_t>(i++)] = -2;
            if (i == rank) break;
            ++e[static_cast<std::size_t>(i)];
        }
    }

    // additivity of lambda_t on seeded random virtual characters
    {
        Rng rng(opts.seed * 7919u + 11u);
        const int order = 6;
        for (int trial = 0; trial < 30; ++trial) {
            int rank = static_cast<int>(rng.range(1, 3));
            auto random_element = [&] {
                Laurent x(rank);
                int terms = static_cast<int>(rng.range(1, 3));
                for (int t = 0; t < terms; ++t) {
                    Laurent::Exponents e(static_cast<std::size_t>(rank));
                    for (auto& v : e) v = static_cast<int>(rng.range(-2, 2));
                    long long c = rng.range(-3, 3);
                    x.add_term(e, c == 0 ? 1 : c);
                }
                return x;
            };
            TorusElement x = random_element(), y = random_element();
            TruncatedSeries joint = lambda_series(x + y, order);
            TruncatedSeries split = lambda_series(x, order) * lambda_series(y, order);
            for (int k = 0; k <= order; ++k)
                run.check_eq("lambda-additivity trial=" + std::to_string(trial) + " k=" + std::to_string(k),
                             split.coefficient(k), joint.coefficient(k));
        }
    }

    // Whitney formula for the gr-level Chern classes
    {
        Rng rng(opts.seed * 104729u + 3u);
        for (int trial = 0; trial < 10; ++trial) {
            int rank = static_cast<int>(rng.range(1, 3));
            auto random_reduced = [&] {
                Laurent x(rank);
                int terms = static_cast<int>(rng.range(1, 3));
                for (int t = 0; t < terms; ++t) {
                    Laurent::Exponents e(static_cast<std::size_t>(rank));
                    for (auto& v : e) v = static_cast<int>(rng.range(-1, 2));
                    x.add_term(e, rng.range(1, 2));
                }
                return x - Laurent::constant(rank, augmentation(x));
            };
            TorusElement x = random_reduced(), y = random_reduced();
            for (int k = 1; k <= 4; ++k) {
                GradedPolynomial lhs = gr_image(gamma_op(k, x + y), k).homogeneous_part(k);
                GradedPolynomial rhs(rank);
                for (int i = 0; i <= k; ++i) {
                    GradedPolynomial gi = gr_image(gamma_op(i, x), k).homogeneous_part(i);
                    GradedPolynomial gj = gr_image(gamma_op(k - i, y), k).homogeneous_part(k - i);
                    rhs = rhs + gi.multiply(gj, k);
                }
                run.check("whitney trial=" + std::to_string(trial) + " k=" + std::to_string(k), lhs == rhs,
                          "sum formula", "differ");
            }
        }
    }

    // odd Chern classes of the symplectic standard character vanish
    for (int n = 1; n <= std::min(max_rank, 3); ++n) {
        TorusElement y = symplectic_standard_character(n);
        for (int k = 1; k <= 2 * n; k += 2) {
            GradedPolynomial ck = chern_class(k, y, opts.budget);
            run.check("symplectic-odd n=" + std::to_string(n) + " k=" + std::to_string(k), ck.is_zero(), "0",
                      "nonzero");
        }
    }

    // bridge to the special Schubert classes
    for (int n = 1; n <= max_rank; ++n)
        for (int m = 1; m <= (opts.max_m < 0 ? 4 : opts.max_m); ++m) {
            GrassmannianShape shape{m, n};
            for (int k = 1; k <= n; ++k) {
                std::vector<int> col(static_cast<std::size_t>(k), 1);
                CohomologyClass expected = truncate(SchurCombination::single(Partition(col)), shape);
                run.check_eq("bridge m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                 " k=" + std::to_string(k),
                             expected.terms, chern_to_schubert(k, shape, opts.budget).terms);
            }
        }

    return run.finish();
}

VerificationReport verify_symmetrizer(const VerifyOptions& opts) {
    int max_weight = opts.max_weight < 0 ? 5 : opts.max_weight;
    SuiteRun run("symmetrizer", opts.seed);
    if (max_weight > opts.budget.p_max)
        throw budget_error("symmetrizer suite weight bound exceeds p_max");

    for (int p = 1; p <= max_weight; ++p)
        for (const auto& la : partitions_of(p)) {
            GroupAlgebraElement c = young_symmetrizer(la, opts.budget);
            long long expected = factorial_ll(p) / standard_tableau_count(la);
            run.check_eq("quasi-idempotent la=" + la.to_string(), c * expected, c * c);
            run.check_eq("norm la=" + la.to_string(), expected, symmetrizer_norm(la, opts.budget));
        }

    // the p = 2 closed forms
    {
        GroupAlgebraElement expected_sym(2), expected_alt(2);
        Permutation swap = Permutation::from_images({1, 0});
        expected_sym.add_term(Permutation(2), 1);
        expected_sym.add_term(swap, 1);
        expected_alt.add_term(Permutation(2), 1);
        expected_alt.add_term(swap, -1);
        run.check_eq("closed-form la=2", expected_sym, young_symmetrizer(Partition{2}, opts.budget));
        run.check_eq("closed-form la=1,1", expected_alt, young_symmetrizer(Partition{1, 1}, opts.budget));
        run.check_eq("closed-form la=1", GroupAlgebraElement::identity(1),
                     young_symmetrizer(Partition{1}, opts.budget));
    }

    return run.finish();
}

std::vector<VerificationReport> verify_all(const VerifyOptions& opts) {
    return {verify_theorem(opts), verify_oracle(opts), verify_forms(opts), verify_lambda(opts),
            verify_symmetrizer(opts)};
}

VerificationReport run_suite(const std::string& name, const VerifyOptions& opts) {
    if (name == "theorem") return verify_theorem(opts);
    if (name == "oracle") return verify_oracle(opts);
    if (name == "forms") return verify_forms(opts);
    if (name == "lambda") return verify_lambda(opts);
    if (name == "symmetrizer") return verify_symmetrizer(opts);
    throw input_error("unknown suite '" + name + "'");
}

}  // namespace schubert
