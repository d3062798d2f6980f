#pragma once

#include <map>
#include <string>
#include <vector>

#include "schubert/laurent.hpp"
#include "schubert/partition.hpp"

namespace schubert {

// Sparse integer combination of partitions: a vector in the Schur basis of
// the ring of symmetric functions, or equally in the Schubert basis once
// truncated. Zero coefficients are never stored.
class SchurCombination {
public:
    using TermMap = std::map<Partition, long long>;

    SchurCombination() = default;
    static SchurCombination single(const Partition& la, long long c = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coefficient(const Partition& la) const;
    void add_term(const Partition& la, long long c);

    SchurCombination operator+(const SchurCombination& rhs) const;
    SchurCombination operator-(const SchurCombination& rhs) const;
    SchurCombination operator*(long long scalar) const;
    SchurCombination& operator+=(const SchurCombination& rhs);
    bool operator==(const SchurCombination& rhs) const = default;

    // Degree of a homogeneous combination; -1 for zero. Mixed weights are
    // permitted, flagged via is_homogeneous().
    bool is_homogeneous() const;
    int degree() const;

    std::string to_string() const;

private:
    TermMap terms_;
};

// Integer combination of monomials e_{k_1}...e_{k_r} in the elementary
// generators. Keys are stored as decreasing multisets; the empty key is the
// scalar 1.
class EPolynomial {
public:
    using Monomial = std::vector<int>;  // sorted decreasing, entries >= 1
    using TermMap = std::map<Monomial, long long>;

    const TermMap& terms() const { return terms_; }
    void add_term(Monomial mono, long long c);
    bool operator==(const EPolynomial& rhs) const = default;

private:
    TermMap terms_;
};

// Pieri rule: s_la * e_k as the sum over all ways of adding k boxes to la
// with no two added boxes in the same row.
SchurCombination pieri(const Partition& la, int k);
SchurCombination pieri(const SchurCombination& c, int k);

// Giambelli determinant det(e_{la'_i + j - i}) expanding s_la in the
// elementary generators; the empty determinant is 1.
EPolynomial giambelli(const Partition& la);

// Product in the Schur basis, computed by expanding mu through Giambelli and
// running Pieri chains from la. Coefficients are the structure constants
// c^nu_{la,mu}, independent of any rectangle.
SchurCombination schur_multiply(const Partition& la, const Partition& mu);

long long lr_coefficient(const Partition& la, const Partition& mu, const Partition& nu);

// Monomial expansion of s_la in n variables (zero when la has more than n
// parts): Giambelli with each e_k replaced by its squarefree monomial sum.
Laurent schur_to_monomials(const Partition& la, int n);

// Inverse change of basis: writes a symmetric polynomial with nonnegative
// exponents as a Schur combination by peeling leading terms. Throws
// input_error on non-symmetric or Laurent input.
SchurCombination expand_in_schur_basis(const Laurent& f);

}  // namespace schubert
