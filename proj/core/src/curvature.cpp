#include "schubert/curvature.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "schubert/errors.hpp"
#include "schubert/rational.hpp"
#include "schubert/rational_matrix.hpp"

namespace schubert {

namespace {

void check_cells(int m, int n, const Budget& budget) {
    if (m < 1 || n < 1) throw input_error("curvature needs m,n >= 1");
    if (m * n > budget.exterior_cells)
        throw budget_error("exterior algebra on " + std::to_string(m * n) + " cells exceeds budget of " +
                           std::to_string(budget.exterior_cells));
}

}  // namespace

CurvatureMatrix curvature_matrix(int m, int n, const Budget& budget) {
    check_cells(m, n, budget);
    CurvatureMatrix gamma;
    gamma.m = m;
    gamma.n = n;
    gamma.entries.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), GrassmannElement(m, n));
    for (int alpha = 0; alpha < n; ++alpha)
        for (int beta = 0; beta < n; ++beta) {
            GrassmannElement sum(m, n);
            for (int i = 1; i <= m; ++i)
                sum += GrassmannElement::generator_e(m, n, i, alpha + 1) *
                       GrassmannElement::generator_f(m, n, i, beta + 1);
            gamma.at(alpha, beta) = std::move(sum);
        }
    return gamma;
}

namespace {

// det of the S x S submatrix; entries are even, hence commute, and a plain
// Leibniz walk with early zero pruning is enough at desk scale.
GrassmannElement submatrix_det(const CurvatureMatrix& gamma, const std::vector<int>& rows,
                               const std::vector<int>& cols) {
    int k = static_cast<int>(rows.size());
    GrassmannElement total(gamma.m, gamma.n);
    std::vector<int> perm(cols.begin(), cols.end());
    std::sort(perm.begin(), perm.end());
    // iterate permutations of cols with parity tracking via inversion count
    do {
        int inversions = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
        GrassmannElement prod = GrassmannElement::scalar(gamma.m, gamma.n, 1);
        for (int i = 0; i < k && !prod.is_zero(); ++i)
            prod = prod * gamma.at(rows[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i)]);
        total += prod * mpq_class(inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

void subsets_rec(int n, int k, int start, std::vector<int>& acc, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(acc.size()) == k) {
        out.push_back(acc);
        return;
    }
    for (int i = start; i < n; ++i) {
        acc.push_back(i);
        subsets_rec(n, k, i + 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

GrassmannElement chern_form(int k, const CurvatureMatrix& gamma) {
    if (k < 0) throw input_error("chern_form needs k >= 0");
    GrassmannElement total(gamma.m, gamma.n);
    if (k == 0) return GrassmannElement::scalar(gamma.m, gamma.n, 1);
    if (k > gamma.n) return total;
    std::vector<std::vector<int>> subsets;
    std::vector<int> acc;
    subsets_rec(gamma.n, k, 0, acc, subsets);
    for (const auto& s : subsets) total += submatrix_det(gamma, s, s);
    return total;
}

GrassmannElement chern_form_sign_sum(int k, const CurvatureMatrix& gamma) {
    if (k < 0) throw input_error("chern_form needs k >= 0");
    if (k == 0) return GrassmannElement::scalar(gamma.m, gamma.n, 1);
    GrassmannElement total(gamma.m, gamma.n);
    if (k > gamma.n) return total;
    // alpha runs over k-tuples with distinct entries, beta over permutations
    // of alpha; tuples with a repeat have sgn = 0 and are skipped.
    std::vector<std::vector<int>> subsets;
    std::vector<int> acc;
    subsets_rec(gamma.n, k, 0, acc, subsets);
    long long kfact = 1;
    for (int i = 2; i <= k; ++i) kfact *= i;
    for (const auto& s : subsets) {
        std::vector<int> alpha = s;
        std::sort(alpha.begin(), alpha.end());
        do {
            std::vector<int> beta = alpha;
            std::sort(beta.begin(), beta.end());
            do {
                // parity of the permutation taking alpha to beta
                int inversions = 0;
                std::vector<int> rel(static_cast<std::size_t>(k));
                for (int i = 0; i < k; ++i) {
                    int pos = 0;
                    while (alpha[static_cast<std::size_t>(pos)] != beta[static_cast<std::size_t>(i)]) ++pos;
                    rel[static_cast<std::size_t>(i)] = pos;
                }
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j < k; ++j)
                        if (rel[static_cast<std::size_t>(i)] > rel[static_cast<std::size_t>(j)]) ++inversions;
                GrassmannElement prod = GrassmannElement::scalar(gamma.m, gamma.n, 1);
                for (int i = 0; i < k && !prod.is_zero(); ++i)
                    prod = prod * gamma.at(alpha[static_cast<std::size_t>(i)], beta[static_cast<std::size_t>(i)]);
                total += prod * mpq_class(inversions % 2 == 0 ? 1 : -1);
            } while (std::next_permutation(beta.begin(), beta.end()));
        } while (std::next_permutation(alpha.begin(), alpha.end()));
    }
    return total * to_mpq(1, kfact);
}

namespace {

// Giambelli determinant with a depth-first Leibniz walk; the band of zero
// Chern forms (index < 0 or > n) prunes almost everything for long shapes.
void giambelli_form_rec(const std::vector<int>& conj, const std::vector<GrassmannElement>& chern,
                        int n, std::size_t row, unsigned used, int sign, const GrassmannElement& partial,
                        GrassmannElement& total) {
    std::size_t q = conj.size();
    if (partial.is_zero()) return;
    if (row == q) {
        total += partial * mpq_class(sign);
        return;
    }
    for (std::size_t j = 0; j < q; ++j) {
        if (used & (1u << j)) continue;
        int idx = conj[row] + static_cast<int>(j) - static_cast<int>(row);
        if (idx < 0 || idx > n) continue;
        int swaps = 0;
        for (std::size_t t = j + 1; t < q; ++t)
            if (used & (1u << t)) ++swaps;
        int next_sign = (swaps % 2 == 0) ? sign : -sign;
        if (idx == 0) {
            giambelli_form_rec(conj, chern, n, row + 1, used | (1u << j), next_sign, partial, total);
        } else {
            giambelli_form_rec(conj, chern, n, row + 1, used | (1u << j), next_sign,
                               partial * chern[static_cast<std::size_t>(idx)], total);
        }
    }
}

}  // namespace

GrassmannElement schubert_form(const Partition& la, int m, int n, const Budget& budget) {
    check_cells(m, n, budget);
    if (la.empty()) return GrassmannElement::scalar(m, n, 1);
    if (la.parts()[0] > 31) throw budget_error("schubert_form: partition too wide");
    CurvatureMatrix gamma = curvature_matrix(m, n, budget);
    std::vector<GrassmannElement> chern;
    for (int k = 0; k <= n; ++k) chern.push_back(chern_form(k, gamma));
    std::vector<int> conj = la.conjugate().parts();
    GrassmannElement total(m, n);
    giambelli_form_rec(conj, chern, n, 0, 0, 1, GrassmannElement::scalar(m, n, 1), total);
    return total;
}

CurvatureMatrix curvature_power(const CurvatureMatrix& gamma, int j) {
    if (j < 1) throw input_error("curvature_power needs j >= 1");
    CurvatureMatrix out = gamma;
    for (int step = 1; step < j; ++step) {
        CurvatureMatrix next;
        next.m = gamma.m;
        next.n = gamma.n;
        next.entries.assign(static_cast<std::size_t>(gamma.n) * static_cast<std::size_t>(gamma.n),
                            GrassmannElement(gamma.m, gamma.n));
        for (int a = 0; a < gamma.n; ++a)
            for (int b = 0; b < gamma.n; ++b) {
                GrassmannElement sum(gamma.m, gamma.n);
                for (int c = 0; c < gamma.n; ++c) sum += out.at(a, c) * gamma.at(c, b);
                next.at(a, b) = std::move(sum);
            }
        out = std::move(next);
    }
    return out;
}

GrassmannElement curvature_trace(const CurvatureMatrix& gamma) {
    GrassmannElement t(gamma.m, gamma.n);
    for (int a = 0; a < gamma.n; ++a) t += gamma.at(a, a);
    return t;
}

SchurCombination wedge_decompose(const Partition& la, const Partition& mu, int m, int n, const Budget& budget) {
    check_cells(m, n, budget);
    int w = la.weight() + mu.weight();
    if (w > m * n) return {};

    GrassmannElement product = schubert_form(la, m, n, budget) * schubert_form(mu, m, n, budget);
    std::vector<Partition> candidates = partitions_in_rectangle(w, n, m);
    std::vector<GrassmannElement> forms;
    forms.reserve(candidates.size());
    for (const auto& nu : candidates) forms.push_back(schubert_form(nu, m, n, budget));

    // exact solve over the union of the monomial supports
    std::set<GrassmannElement::Mask> support;
    for (const auto& f : forms)
        for (const auto& [mono, c] : f.terms()) support.insert(mono);
    for (const auto& [mono, c] : product.terms()) support.insert(mono);

    RationalMatrix system(static_cast<int>(support.size()), static_cast<int>(candidates.size()));
    std::vector<mpq_class> rhs;
    rhs.reserve(support.size());
    int row = 0;
    for (GrassmannElement::Mask mono : support) {
        for (std::size_t j = 0; j < forms.size(); ++j) system.at(row, static_cast<int>(j)) = forms[j].coefficient(mono);
        rhs.push_back(product.coefficient(mono));
        ++row;
    }
    auto solution = system.solve(rhs);  // throws logic_error when underdetermined
    if (!solution) throw std::logic_error("wedge_decompose: product is outside the span of the Schubert forms");

    SchurCombination out;
    for (std::size_t j = 0; j < candidates.size(); ++j) {
        const mpq_class& x = (*solution)[j];
        if (x == 0) continue;
        if (x.get_den() != 1 || x < 0)
            throw std::logic_error("wedge_decompose: solution is not a nonnegative integer vector");
        out.add_term(candidates[j], x.get_num().get_si());
    }
    return out;
}

bool is_zero_form(const Partition& la, int m, int n, const Budget& budget) {
    if (2 * la.weight() > 2 * m * n) return true;  // degree alone rules it out
    return schubert_form(la, m, n, budget).is_zero();
}

mpq_class top_coefficient(const GrassmannElement& x, int m, int n, const Budget& budget) {
    check_cells(m, n, budget);
    GrassmannElement::Mask full = (GrassmannElement::Mask(1) << (2 * m * n)) - 1;
    mpq_class c = x.coefficient(full);
    if (c == 0) return 0;
    std::vector<int> rect(static_cast<std::size_t>(n), m);
    mpq_class r = schubert_form(Partition(std::move(rect)), m, n, budget).coefficient(full);
    if (r == 0) throw std::logic_error("top_coefficient: rectangle form has no top component");
    return c / r;
}

}  // namespace schubert
