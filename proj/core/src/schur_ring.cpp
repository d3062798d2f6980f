#include "schubert/schur_ring.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "schubert/errors.hpp"

namespace schubert {

SchurCombination SchurCombination::single(const Partition& la, long long c) {
    SchurCombination out;
    out.add_term(la, c);
    return out;
}

long long SchurCombination::coefficient(const Partition& la) const {
    auto it = terms_.find(la);
    return it == terms_.end() ? 0 : it->second;
}

void SchurCombination::add_term(const Partition& la, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(la, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SchurCombination SchurCombination::operator+(const SchurCombination& rhs) const {
    SchurCombination out = *this;
    out += rhs;
    return out;
}

SchurCombination SchurCombination::operator-(const SchurCombination& rhs) const {
    SchurCombination out = *this;
    for (const auto& [la, c] : rhs.terms_) out.add_term(la, -c);
    return out;
}

SchurCombination SchurCombination::operator*(long long scalar) const {
    SchurCombination out;
    if (scalar == 0) return out;
    for (const auto& [la, c] : terms_) out.terms_.emplace(la, c * scalar);
    return out;
}

SchurCombination& SchurCombination::operator+=(const SchurCombination& rhs) {
    for (const auto& [la, c] : rhs.terms_) add_term(la, c);
    return *this;
}

bool SchurCombination::is_homogeneous() const {
    int w = -1;
    for (const auto& [la, c] : terms_) {
        if (w == -1) w = la.weight();
        else if (la.weight() != w) return false;
    }
    return true;
}

int SchurCombination::degree() const {
    if (terms_.empty()) return -1;
    if (!is_homogeneous()) throw input_error("degree of a mixed-weight combination");
    return terms_.begin()->first.weight();
}

std::string SchurCombination::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [la, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += std::to_string(c) + "*s(" + la.to_string() + ")";
    }
    return out;
}

void EPolynomial::add_term(Monomial mono, long long c) {
    if (c == 0) return;
    std::sort(mono.begin(), mono.end(), std::greater<int>());
    auto [it, inserted] = terms_.emplace(std::move(mono), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

// Enumerate vertical k-strips over la: rows 1..len each gain at most one box,
// then the leftover boxes become unit rows at the bottom.
void pieri_rec(const std::vector<int>& la, std::size_t row, int prev, int remaining,
               std::vector<int>& acc, SchurCombination& out) {
    if (row == la.size()) {
        std::vector<int> mu = acc;
        for (int i = 0; i < remaining; ++i) mu.push_back(1);
        out.add_term(Partition(std::move(mu)), 1);
        return;
    }
    int base = la[row];
    // no box added to this row
    acc.push_back(base);
    pieri_rec(la, row + 1, base, remaining, acc, out);
    acc.pop_back();
    // one box added, if it keeps the rows weakly decreasing
    if (remaining > 0 && base + 1 <= prev) {
        acc.push_back(base + 1);
        pieri_rec(la, row + 1, base + 1, remaining - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

SchurCombination pieri(const Partition& la, int k) {
    if (k < 1) throw input_error("pieri requires k >= 1");
    SchurCombination out;
    std::vector<int> acc;
    pieri_rec(la.parts(), 0, 1 << 30, k, acc, out);
    return out;
}

SchurCombination pieri(const SchurCombination& c, int k) {
    SchurCombination out;
    for (const auto& [la, coeff] : c.terms()) out += pieri(la, k) * coeff;
    return out;
}

namespace {

// Signed sum over permutations of det(e_{la'_i + j - i}), skipping zero
// entries (negative index) as we go; index 0 contributes the scalar 1.
void giambelli_rec(const std::vector<int>& conj, std::size_t row, std::uint64_t used, int sign,
                   std::vector<int>& mono, EPolynomial& out) {
    std::size_t q = conj.size();
    if (row == q) {
        out.add_term(mono, sign);
        return;
    }
    for (std::size_t j = 0; j < q; ++j) {
        if (used & (std::uint64_t(1) << j)) continue;
        int idx = conj[row] + static_cast<int>(j) - static_cast<int>(row);
        if (idx < 0) continue;
        int swaps = 0;  // parity of the partial permutation
        for (std::size_t t = j + 1; t < q; ++t)
            if (used & (std::uint64_t(1) << t)) ++swaps;
        int next_sign = (swaps % 2 == 0) ? sign : -sign;
        if (idx > 0) mono.push_back(idx);
        giambelli_rec(conj, row + 1, used | (std::uint64_t(1) << j), next_sign, mono, out);
        if (idx > 0) mono.pop_back();
    }
}

}  // namespace

EPolynomial giambelli(const Partition& la) {
    if (!la.empty() && la.parts()[0] > 63)
        throw budget_error("giambelli determinant wider than 63 columns");
    EPolynomial out;
    std::vector<int> conj = la.conjugate().parts();
    std::vector<int> mono;
    giambelli_rec(conj, 0, 0, 1, mono, out);
    return out;
}

SchurCombination schur_multiply(const Partition& la, const Partition& mu) {
    SchurCombination out;
    EPolynomial expansion = giambelli(mu);
    for (const auto& [mono, c] : expansion.terms()) {
        SchurCombination acc = SchurCombination::single(la);
        for (int k : mono) acc = pieri(acc, k);
        out += acc * c;
    }
    return out;
}

long long lr_coefficient(const Partition& la, const Partition& mu, const Partition& nu) {
    if (nu.weight() != la.weight() + mu.weight()) return 0;
    return schur_multiply(la, mu).coefficient(nu);
}

Laurent schur_to_monomials(const Partition& la, int n) {
    if (n < 1) throw input_error("schur_to_monomials requires n >= 1");
    if (la.length() > n) return Laurent::zero(n);
    Laurent total(n);
    EPolynomial expansion = giambelli(la);
    for (const auto& [mono, c] : expansion.terms()) {
        Laurent prod = Laurent::constant(n, 1);
        for (int k : mono) prod = prod * elementary_symmetric(k, n);
        total += prod * c;
    }
    return total;
}

namespace {

// Leading-term order: exponent vectors sorted decreasingly, compared lex.
std::vector<int> sorted_desc(const std::vector<int>& e) {
    std::vector<int> s = e;
    std::sort(s.begin(), s.end(), std::greater<int>());
    return s;
}

long long partition_count_bound(int max_weight, int n) {
    // number of partitions of weight <= max_weight with at most n parts
    long long total = 0;
    for (int w = 0; w <= max_weight; ++w) total += static_cast<long long>(partitions_in_rectangle(w, n, w).size());
    return total;
}

}  // namespace

SchurCombination expand_in_schur_basis(const Laurent& f) {
    if (f.has_negative_exponents()) throw input_error("expand_in_schur_basis: negative exponents");
    if (!f.is_symmetric()) throw input_error("expand_in_schur_basis: input is not symmetric");
    int n = f.vars();
    Laurent rest = f;
    SchurCombination out;
    long long guard = partition_count_bound(f.max_total_degree(), n) + 1;
    while (!rest.is_zero()) {
        if (--guard < 0) throw std::logic_error("expand_in_schur_basis failed to terminate; malformed input");
        std::vector<int> lead;  // length n, sorted decreasingly
        for (const auto& [e, c] : rest.terms()) {
            std::vector<int> s = sorted_desc(e);
            if (lead.empty() || s > lead) lead = s;
        }
        // the sorted monomial itself is present with the orbit's coefficient
        long long c = rest.coefficient(lead);
        if (c == 0) throw std::logic_error("expand_in_schur_basis: leading orbit missing its sorted monomial");
        std::vector<int> parts = lead;
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        Partition la(std::move(parts));
        rest -= schur_to_monomials(la, n) * c;
        out.add_term(la, c);
    }
    return out;
}

}  // namespace schubert
