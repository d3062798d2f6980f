#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

#include "schubert/budget.hpp"

namespace schubert {

// Element of the exterior algebra on the 2mn generators
//   e_{i,alpha}, f_{i,alpha}   (1 <= i <= m, 1 <= alpha <= n),
// the unnormalized invariant one-forms of the quotient bundle (the scalar
// with square i/2pi is dropped, so coefficients stay rational). Monomials
// are bit sets under the global order e11 < e12 < ... < f11 < ... ; all
// signs derive from that order.
class GrassmannElement {
public:
    using Mask = std::uint64_t;
    using TermMap = std::map<Mask, mpq_class>;

    GrassmannElement(int m, int n);  // zero element

    static GrassmannElement scalar(int m, int n, const mpq_class& c);
    static GrassmannElement generator_e(int m, int n, int i, int alpha);
    static GrassmannElement generator_f(int m, int n, int i, int alpha);

    int m() const { return m_; }
    int n() const { return n_; }
    int generator_count() const { return 2 * m_ * n_; }

    static int e_bit(int /*m*/, int n, int i, int alpha) { return (i - 1) * n + (alpha - 1); }
    static int f_bit(int m, int n, int i, int alpha) { return m * n + (i - 1) * n + (alpha - 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    mpq_class coefficient(Mask mono) const;
    void add_term(Mask mono, const mpq_class& c);

    GrassmannElement operator+(const GrassmannElement& rhs) const;
    GrassmannElement operator-(const GrassmannElement& rhs) const;
    GrassmannElement operator*(const GrassmannElement& rhs) const;  // wedge
    GrassmannElement operator*(const mpq_class& scalar) const;
    GrassmannElement& operator+=(const GrassmannElement& rhs);
    bool operator==(const GrassmannElement& rhs) const = default;

    // every monomial has the same e-count a and f-count b
    bool is_pure_type(int a, int b) const;
    int e_count(Mask mono) const;
    int f_count(Mask mono) const;

    // sign of concatenating disjoint ordered monomials a*b; 0 on overlap
    static int merge_sign(Mask a, Mask b);

    std::string monomial_name(Mask mono) const;

private:
    int m_, n_;
    TermMap terms_;
};

}  // namespace schubert
