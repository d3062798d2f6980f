#include "schubert/laurent.hpp"

#include <algorithm>
#include <numeric>

#include "schubert/errors.hpp"

namespace schubert {

Laurent Laurent::constant(int vars, long long c) {
    Laurent x(vars);
    x.add_term(Exponents(static_cast<std::size_t>(vars), 0), c);
    return x;
}

Laurent Laurent::monomial(Exponents exps, long long c) {
    Laurent x(static_cast<int>(exps.size()));
    x.add_term(exps, c);
    return x;
}

Laurent Laurent::variable_power(int vars, int i, int power) {
    if (i < 1 || i > vars) throw input_error("variable index out of range");
    Exponents e(static_cast<std::size_t>(vars), 0);
    e[static_cast<std::size_t>(i - 1)] = power;
    return monomial(std::move(e));
}

long long Laurent::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw budget_error("coefficient overflow in Laurent addition");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw budget_error("coefficient overflow in Laurent product");
    return r;
}

}  // namespace

void Laurent::add_term(const Exponents& e, long long c) {
    if (static_cast<int>(e.size()) != vars_) throw input_error("exponent vector length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent Laurent::operator+(const Laurent& rhs) const {
    Laurent out = *this;
    out += rhs;
    return out;
}

Laurent Laurent::operator-(const Laurent& rhs) const {
    Laurent out = *this;
    out -= rhs;
    return out;
}

Laurent& Laurent::operator+=(const Laurent& rhs) {
    if (vars_ != rhs.vars_) throw input_error("variable count mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& rhs) {
    if (vars_ != rhs.vars_) throw input_error("variable count mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Laurent Laurent::operator*(const Laurent& rhs) const {
    if (vars_ != rhs.vars_) throw input_error("variable count mismatch");
    Laurent out(vars_);
    Exponents sum(static_cast<std::size_t>(vars_));
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : rhs.terms_) {
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = e1[i] + e2[i];
            out.add_term(sum, checked_mul(c1, c2));
        }
    return out;
}

Laurent Laurent::operator*(long long scalar) const {
    Laurent out(vars_);
    if (scalar == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, checked_mul(c, scalar));
    return out;
}

bool Laurent::has_negative_exponents() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) return true;
    return false;
}

bool Laurent::is_symmetric() const {
    for (int i = 0; i + 1 < vars_; ++i) {
        for (const auto& [e, c] : terms_) {
            Exponents swapped = e;
            std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(i + 1)]);
            if (coefficient(swapped) != c) return false;
        }
    }
    return true;
}

int Laurent::max_total_degree() const {
    int best = 0;
    for (const auto& [e, c] : terms_)
        best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
    return best;
}

mpq_class Laurent::evaluate(std::span<const mpq_class> point) const {
    if (static_cast<int>(point.size()) != vars_) throw input_error("evaluation point length mismatch");
    mpq_class total = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class term(static_cast<long>(c));
        for (std::size_t i = 0; i < e.size(); ++i) {
            int power = e[i];
            if (power == 0) continue;
            mpq_class base = point[i];
            if (power < 0) {
                if (base == 0) throw input_error("evaluation of negative power at zero");
                base = 1 / base;
                power = -power;
            }
            for (int j = 0; j < power; ++j) term *= base;
        }
        total += term;
    }
    return total;
}

std::string Laurent::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += std::to_string(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            out += "*x" + std::to_string(i + 1);
            if (e[i] != 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

Laurent elementary_symmetric(int k, int n) {
    Laurent out(n);
    if (k < 0 || k > n) return out;
    // iterate k-subsets of {0..n-1}
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        Laurent::Exponents e(static_cast<std::size_t>(n), 0);
        for (int i : idx) e[static_cast<std::size_t>(i)] = 1;
        out.add_term(e, 1);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace schubert
