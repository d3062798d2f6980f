#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "schubert/budget.hpp"
#include "schubert/grassmannian.hpp"
#include "schubert/laurent.hpp"

namespace schubert {

// Elements of the representation ring of a rank-n torus are Laurent
// polynomials in the characters alpha_1..alpha_n.
using TorusElement = Laurent;

// Polynomial in u_1..u_n with rational coefficients, graded by total degree:
// where the Chern classes land (gr R(T) = Z[u_1..u_n]).
class GradedPolynomial {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, mpq_class>;

    explicit GradedPolynomial(int vars) : vars_(vars) {}

    int vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Exponents& e, const mpq_class& c);
    mpq_class coefficient(const Exponents& e) const;

    GradedPolynomial operator+(const GradedPolynomial& rhs) const;
    GradedPolynomial operator-(const GradedPolynomial& rhs) const;
    // product truncated past total degree max_degree (pass a large value for exact)
    GradedPolynomial multiply(const GradedPolynomial& rhs, int max_degree) const;
    bool operator==(const GradedPolynomial& rhs) const = default;

    GradedPolynomial homogeneous_part(int degree) const;
    int min_degree() const;  // -1 when zero
    bool is_symmetric() const;
    bool is_integral() const;
    Laurent to_laurent() const;  // requires integral coefficients
private:
    int vars_ = 0;
    TermMap terms_;
};

// lambda_t(x) as a polynomial in t truncated at the given order; built
// multiplicatively from the line decomposition of x, with negative
// multiplicities expanded as geometric series.
class TruncatedSeries {
public:
    TruncatedSeries(int vars, int order);
    static TruncatedSeries one(int vars, int order);

    int order() const { return static_cast<int>(coeff_.size()) - 1; }
    int vars() const { return vars_; }
    const Laurent& coefficient(int k) const { return coeff_[static_cast<std::size_t>(k)]; }
    Laurent& coefficient(int k) { return coeff_[static_cast<std::size_t>(k)]; }

    TruncatedSeries operator*(const TruncatedSeries& rhs) const;

private:
    int vars_;
    std::vector<Laurent> coeff_;
};

TruncatedSeries lambda_series(const TorusElement& x, int order);

// Coefficient of t^k in lambda_t(x); lambda^0 = 1, lambda^1 = id.
TorusElement lambda_op(int k, const TorusElement& x);

// Coefficient of t^k in gamma_t(x) = lambda_{t/(1-t)}(x).
TorusElement gamma_op(int k, const TorusElement& x);

// Sum of coefficients: the dimension of a virtual character.
long long augmentation(const TorusElement& x);

// Image in gr R(T): substitute alpha_i = 1 + u_i (inverses as geometric
// series) and drop total degree beyond max_degree.
GradedPolynomial gr_image(const TorusElement& x, int max_degree);

// c_k(x) = gamma^k(x - eps(x)) pushed into gr, returned as its degree-k
// homogeneous part. Components of degree < k must vanish and the answer must
// be stable under raising the truncation order; both are checked and a
// violation throws logic_error.
GradedPolynomial chern_class(int k, const TorusElement& x, const Budget& budget = default_budget());

// Chern class of the standard rank-n character recognized in the Schur basis
// and pushed to the Schubert basis: must land on sigma_{(1^k)} truncated.
CohomologyClass chern_to_schubert(int k, GrassmannianShape shape, const Budget& budget = default_budget());

// Convenience characters: sum of the alphas, and the symplectic standard
// restricted to the torus (sum of alpha_i + alpha_i^{-1}).
TorusElement standard_character(int n);
TorusElement symplectic_standard_character(int n);

}  // namespace schubert
