#include "schubert/group_algebra.hpp"

#include "schubert/errors.hpp"

namespace schubert {

GroupAlgebraElement GroupAlgebraElement::identity(int p) {
    GroupAlgebraElement out(p);
    out.add_term(Permutation(p), 1);
    return out;
}

long long GroupAlgebraElement::coefficient(const Permutation& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? 0 : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& s, long long c) {
    if (s.degree() != p_) throw input_error("permutation degree mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& rhs) const {
    GroupAlgebraElement out = *this;
    for (const auto& [s, c] : rhs.terms_) out.add_term(s, c);
    return out;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& rhs) const {
    GroupAlgebraElement out = *this;
    for (const auto& [s, c] : rhs.terms_) out.add_term(s, -c);
    return out;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& rhs) const {
    if (p_ != rhs.p_) throw input_error("group algebra degree mismatch");
    GroupAlgebraElement out(p_);
    for (const auto& [s, c] : terms_)
        for (const auto& [t, d] : rhs.terms_) out.add_term(s * t, c * d);
    return out;
}

GroupAlgebraElement GroupAlgebraElement::operator*(long long scalar) const {
    GroupAlgebraElement out(p_);
    if (scalar == 0) return out;
    for (const auto& [s, c] : terms_) out.terms_.emplace(s, c * scalar);
    return out;
}

std::string GroupAlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += std::to_string(c) + "*[";
        for (int i = 0; i < s.degree(); ++i) {
            if (i) out += ' ';
            out += std::to_string(s(i) + 1);
        }
        out += ']';
    }
    return out;
}

}  // namespace schubert
