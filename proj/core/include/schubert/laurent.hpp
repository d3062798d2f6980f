#pragma once

#include <gmpxx.h>

#include <map>
#include <span>
#include <string>
#include <vector>

namespace schubert {

// Sparse integer Laurent polynomial in a fixed number of variables. Exponent
// vectors all share the variable count. Serves both as the character of a
// GL_n representation (nonnegative exponents) and as an element of the
// representation ring of a rank-n torus (arbitrary exponents).
class Laurent {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, long long>;

    explicit Laurent(int vars) : vars_(vars) {}

    static Laurent zero(int vars) { return Laurent(vars); }
    static Laurent constant(int vars, long long c);
    static Laurent monomial(Exponents exps, long long c = 1);
    // The i-th variable (1-based), raised to the given power.
    static Laurent variable_power(int vars, int i, int power = 1);

    int vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, long long c);

    Laurent operator+(const Laurent& rhs) const;
    Laurent operator-(const Laurent& rhs) const;
    Laurent operator*(const Laurent& rhs) const;
    Laurent operator*(long long scalar) const;
    Laurent& operator+=(const Laurent& rhs);
    Laurent& operator-=(const Laurent& rhs);
    bool operator==(const Laurent& rhs) const = default;

    bool has_negative_exponents() const;
    // Invariance under all exponent permutations (checked on the generating
    // adjacent transpositions).
    bool is_symmetric() const;
    int max_total_degree() const;

    // Exact evaluation at rational points, one per variable.
    mpq_class evaluate(std::span<const mpq_class> point) const;

    std::string to_string() const;

private:
    int vars_ = 0;
    TermMap terms_;
};

// Elementary symmetric polynomial e_k in n variables (zero for k > n, one for
// k == 0).
Laurent elementary_symmetric(int k, int n);

}  // namespace schubert
