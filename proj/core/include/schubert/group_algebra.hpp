#pragma once

#include <map>
#include <string>

#include "schubert/permutation.hpp"

namespace schubert {

// Sparse integer combination of permutations of {1,...,p}: an element of the
// integral group algebra of S_p.
class GroupAlgebraElement {
public:
    using TermMap = std::map<Permutation, long long>;

    explicit GroupAlgebraElement(int p) : p_(p) {}
    static GroupAlgebraElement identity(int p);

    int p() const { return p_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coefficient(const Permutation& s) const;
    void add_term(const Permutation& s, long long c);

    GroupAlgebraElement operator+(const GroupAlgebraElement& rhs) const;
    GroupAlgebraElement operator-(const GroupAlgebraElement& rhs) const;
    GroupAlgebraElement operator*(const GroupAlgebraElement& rhs) const;  // bilinear convolution
    GroupAlgebraElement operator*(long long scalar) const;
    bool operator==(const GroupAlgebraElement& rhs) const = default;

    std::string to_string() const;

private:
    int p_;
    TermMap terms_;
};

}  // namespace schubert
