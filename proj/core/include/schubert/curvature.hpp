#pragma once

#include <vector>

#include "schubert/budget.hpp"
#include "schubert/exterior.hpp"
#include "schubert/partition.hpp"
#include "schubert/schur_ring.hpp"

namespace schubert {

// The curvature of the quotient bundle as an n x n matrix of degree-2
// exterior elements, Gamma_{alpha,beta} = sum_i e_{i,alpha} f_{i,beta}.
struct CurvatureMatrix {
    int m = 0, n = 0;
    std::vector<GrassmannElement> entries;  // row-major n x n

    const GrassmannElement& at(int alpha, int beta) const {
        return entries[static_cast<std::size_t>(alpha) * static_cast<std::size_t>(n) + static_cast<std::size_t>(beta)];
    }
    GrassmannElement& at(int alpha, int beta) {
        return entries[static_cast<std::size_t>(alpha) * static_cast<std::size_t>(n) + static_cast<std::size_t>(beta)];
    }
};

CurvatureMatrix curvature_matrix(int m, int n, const Budget& budget = default_budget());

// k-th Chern form Tr(wedge^k Omega): sum over k-subsets S of det(Gamma_S).
// Zero for k > n, the scalar 1 for k = 0.
GrassmannElement chern_form(int k, const CurvatureMatrix& gamma);

// The same form through the literal sign-sum expansion
//   (1/k!) sum sgn(alpha;beta) Gamma_{a1 b1} ... Gamma_{ak bk};
// kept separate so the two routes can be played against each other.
GrassmannElement chern_form_sign_sum(int k, const CurvatureMatrix& gamma);

// Schubert form Omega_la: the Giambelli determinant of Chern forms, a closed
// form of type (|la|, |la|). Omits the (i/2pi)^{|la|} normalization.
GrassmannElement schubert_form(const Partition& la, int m, int n, const Budget& budget = default_budget());

// Matrix powers and traces inside the commuting even subalgebra; used for the
// character-sum cross-check of the Schubert forms.
CurvatureMatrix curvature_power(const CurvatureMatrix& gamma, int j);
GrassmannElement curvature_trace(const CurvatureMatrix& gamma);

// Expresses Omega_la ^ Omega_mu exactly in the Schubert forms of the product
// degree; the coefficients are the truncated structure constants. Throws
// logic_error if the form system is singular or the solution is not a
// nonnegative integer vector.
SchurCombination wedge_decompose(const Partition& la, const Partition& mu, int m, int n,
                                 const Budget& budget = default_budget());

bool is_zero_form(const Partition& la, int m, int n, const Budget& budget = default_budget());

// Coefficient against the full-rectangle Schubert form in top degree 2mn;
// zero for elements of lower degree.
mpq_class top_coefficient(const GrassmannElement& x, int m, int n, const Budget& budget = default_budget());

}  // namespace schubert
