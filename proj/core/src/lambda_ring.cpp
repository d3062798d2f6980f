#include "schubert/lambda_ring.hpp"

#include <numeric>
#include <stdexcept>

#include "schubert/errors.hpp"
#include "schubert/rational.hpp"

namespace schubert {

void GradedPolynomial::add_term(const Exponents& e, const mpq_class& c) {
    if (static_cast<int>(e.size()) != vars_) throw input_error("exponent vector length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

mpq_class GradedPolynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

GradedPolynomial GradedPolynomial::operator+(const GradedPolynomial& rhs) const {
    GradedPolynomial out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

GradedPolynomial GradedPolynomial::operator-(const GradedPolynomial& rhs) const {
    GradedPolynomial out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
    return out;
}

GradedPolynomial GradedPolynomial::multiply(const GradedPolynomial& rhs, int max_degree) const {
    if (vars_ != rhs.vars_) throw input_error("variable count mismatch");
    GradedPolynomial out(vars_);
    Exponents sum(static_cast<std::size_t>(vars_));
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : rhs.terms_) {
            int total = 0;
            for (std::size_t i = 0; i < sum.size(); ++i) {
                sum[i] = e1[i] + e2[i];
                total += sum[i];
            }
            if (total > max_degree) continue;
            out.add_term(sum, c1 * c2);
        }
    return out;
}

GradedPolynomial GradedPolynomial::homogeneous_part(int degree) const {
    GradedPolynomial out(vars_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) == degree) out.add_term(e, c);
    return out;
}

int GradedPolynomial::min_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) {
        int d = std::accumulate(e.begin(), e.end(), 0);
        if (best < 0 || d < best) best = d;
    }
    return best;
}

bool GradedPolynomial::is_symmetric() const {
    for (int i = 0; i + 1 < vars_; ++i)
        for (const auto& [e, c] : terms_) {
            Exponents swapped = e;
            std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(i + 1)]);
            if (coefficient(swapped) != c) return false;
        }
    return true;
}

bool GradedPolynomial::is_integral() const {
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

Laurent GradedPolynomial::to_laurent() const {
    Laurent out(vars_);
    for (const auto& [e, c] : terms_) {
        if (c.get_den() != 1) throw input_error("non-integral coefficient");
        out.add_term(e, c.get_num().get_si());
    }
    return out;
}

TruncatedSeries::TruncatedSeries(int vars, int order) : vars_(vars) {
    coeff_.assign(static_cast<std::size_t>(order) + 1, Laurent(vars));
}

TruncatedSeries TruncatedSeries::one(int vars, int order) {
    TruncatedSeries s(vars, order);
    s.coefficient(0) = Laurent::constant(vars, 1);
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
    if (vars_ != rhs.vars_) throw input_error("variable count mismatch");
    int d = std::min(order(), rhs.order());
    TruncatedSeries out(vars_, d);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) {
            if (coefficient(i).is_zero() || rhs.coefficient(j).is_zero()) continue;
            out.coefficient(i + j) += coefficient(i) * rhs.coefficient(j);
        }
    return out;
}

namespace {

// Exact binomial with an explicit refusal when the value leaves the 64-bit
// coefficient range (large virtual multiplicities or Laurent exponents).
long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (!r.fits_slong_p())
        throw budget_error("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                           ") exceeds the 64-bit coefficient range");
    return r.get_si();
}

// (1 + xi t)^mult truncated, for a single monomial character xi.
TruncatedSeries line_power_series(const Laurent::Exponents& xi, long long mult, int vars, int order) {
    TruncatedSeries s(vars, order);
    Laurent::Exponents e(static_cast<std::size_t>(vars), 0);
    for (int j = 0; j <= order; ++j) {
        long long c;
        if (mult >= 0) {
            if (j > mult) break;
            c = binomial(mult, j);
        } else {
            long long b = -mult;
            c = binomial(b + j - 1, j);
            if (j % 2 == 1) c = -c;
        }
        s.coefficient(j) = Laurent::monomial(e, c);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += xi[i];
    }
    return s;
}

}  // namespace

TruncatedSeries lambda_series(const TorusElement& x, int order) {
    TruncatedSeries s = TruncatedSeries::one(x.vars(), order);
    for (const auto& [xi, mult] : x.terms()) s = s * line_power_series(xi, mult, x.vars(), order);
    return s;
}

TorusElement lambda_op(int k, const TorusElement& x) {
    if (k < 0) throw input_error("lambda_op needs k >= 0");
    if (k == 0) return Laurent::constant(x.vars(), 1);
    return lambda_series(x, k).coefficient(k);
}

TorusElement gamma_op(int k, const TorusElement& x) {
    if (k < 0) throw input_error("gamma_op needs k >= 0");
    if (k == 0) return Laurent::constant(x.vars(), 1);
    // coeff of t^k in s^j for s = t/(1-t) is binom(k-1, j-1)
    TruncatedSeries lam = lambda_series(x, k);
    Laurent out(x.vars());
    for (int j = 1; j <= k; ++j) {
        const Laurent& lj = lam.coefficient(j);
        if (lj.is_zero()) continue;
        out += lj * binomial(k - 1, j - 1);
    }
    return out;
}

long long augmentation(const TorusElement& x) {
    long long total = 0;
    for (const auto& [e, c] : x.terms()) total += c;
    return total;
}

namespace {

// (1+u_i)^{e} truncated at total degree cap, e possibly negative.
GradedPolynomial power_of_one_plus_u(int vars, int i, int e, int cap) {
    GradedPolynomial out(vars);
    GradedPolynomial::Exponents mono(static_cast<std::size_t>(vars), 0);
    for (int j = 0; j <= cap; ++j) {
        long long c;
        if (e >= 0) {
            if (j > e) break;
            c = binomial(e, j);
        } else {
            c = binomial(static_cast<long long>(-e) + j - 1, j);
            if (j % 2 == 1) c = -c;
        }
        mono[static_cast<std::size_t>(i)] = j;
        out.add_term(mono, to_mpq(c));
    }
    return out;
}

}  // namespace

GradedPolynomial gr_image(const TorusElement& x, int max_degree) {
    if (max_degree < 0) throw input_error("gr_image needs a nonnegative truncation degree");
    int vars = x.vars();
    GradedPolynomial out(vars);
    for (const auto& [e, c] : x.terms()) {
        GradedPolynomial term(vars);
        term.add_term(GradedPolynomial::Exponents(static_cast<std::size_t>(vars), 0), to_mpq(c));
        for (int i = 0; i < vars; ++i) {
            if (e[static_cast<std::size_t>(i)] == 0) continue;
            term = term.multiply(power_of_one_plus_u(vars, i, e[static_cast<std::size_t>(i)], max_degree), max_degree);
        }
        out = out + term;
    }
    return out;
}

GradedPolynomial chern_class(int k, const TorusElement& x, const Budget& budget) {
    if (k < 1) throw input_error("chern_class needs k >= 1");
    TorusElement reduced = x - Laurent::constant(x.vars(), augmentation(x));
    TorusElement g = gamma_op(k, reduced);

    int order = k + budget.series_slack;
    GradedPolynomial image = gr_image(g, order);
    GradedPolynomial stability_probe = gr_image(g, order + 1);
    for (int d = 0; d <= k; ++d) {
        if (!(image.homogeneous_part(d) == stability_probe.homogeneous_part(d)))
            throw std::logic_error("chern_class: truncation order is not stable");
        if (d < k && !image.homogeneous_part(d).is_zero())
            throw std::logic_error("chern_class: gamma^k left the k-th filtration step");
    }
    return image.homogeneous_part(k);
}

CohomologyClass chern_to_schubert(int k, GrassmannianShape shape, const Budget& budget) {
    if (k < 1) throw input_error("chern_to_schubert needs k >= 1");
    if (k > shape.n) {
        CohomologyClass zero;
        zero.shape = shape;
        return zero;
    }
    GradedPolynomial ck = chern_class(k, standard_character(shape.n), budget);
    return rho(expand_in_schur_basis(ck.to_laurent()), shape);
}

TorusElement standard_character(int n) {
    Laurent x(n);
    for (int i = 1; i <= n; ++i) x += Laurent::variable_power(n, i);
    return x;
}

TorusElement symplectic_standard_character(int n) {
    Laurent x(n);
    for (int i = 1; i <= n; ++i) {
        x += Laurent::variable_power(n, i);
        x += Laurent::variable_power(n, i, -1);
    }
    return x;
}

}  // namespace schubert
