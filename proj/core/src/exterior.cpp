#include "schubert/exterior.hpp"

#include <bit>

#include "schubert/errors.hpp"

namespace schubert {

GrassmannElement::GrassmannElement(int m, int n) : m_(m), n_(n) {
    if (m < 1 || n < 1) throw input_error("exterior algebra needs m,n >= 1");
    if (2 * m * n > 62) throw input_error("exterior algebra limited to 31 cells");
}

GrassmannElement GrassmannElement::scalar(int m, int n, const mpq_class& c) {
    GrassmannElement x(m, n);
    x.add_term(0, c);
    return x;
}

GrassmannElement GrassmannElement::generator_e(int m, int n, int i, int alpha) {
    if (i < 1 || i > m || alpha < 1 || alpha > n) throw input_error("generator index out of range");
    GrassmannElement x(m, n);
    x.add_term(Mask(1) << e_bit(m, n, i, alpha), 1);
    return x;
}

GrassmannElement GrassmannElement::generator_f(int m, int n, int i, int alpha) {
    if (i < 1 || i > m || alpha < 1 || alpha > n) throw input_error("generator index out of range");
    GrassmannElement x(m, n);
    x.add_term(Mask(1) << f_bit(m, n, i, alpha), 1);
    return x;
}

mpq_class GrassmannElement::coefficient(Mask mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void GrassmannElement::add_term(Mask mono, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GrassmannElement GrassmannElement::operator+(const GrassmannElement& rhs) const {
    GrassmannElement out = *this;
    out += rhs;
    return out;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& rhs) {
    if (m_ != rhs.m_ || n_ != rhs.n_) throw input_error("exterior shape mismatch");
    for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
    return *this;
}

GrassmannElement GrassmannElement::operator-(const GrassmannElement& rhs) const {
    if (m_ != rhs.m_ || n_ != rhs.n_) throw input_error("exterior shape mismatch");
    GrassmannElement out = *this;
    for (const auto& [mono, c] : rhs.terms_) out.add_term(mono, -c);
    return out;
}

int GrassmannElement::merge_sign(Mask a, Mask b) {
    if (a & b) return 0;
    int inversions = 0;
    Mask rest = b;
    while (rest) {
        int y = std::countr_zero(rest);
        rest &= rest - 1;
        inversions += std::popcount(a >> (y + 1));
    }
    return inversions % 2 == 0 ? 1 : -1;
}

GrassmannElement GrassmannElement::operator*(const GrassmannElement& rhs) const {
    if (m_ != rhs.m_ || n_ != rhs.n_) throw input_error("exterior shape mismatch");
    GrassmannElement out(m_, n_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : rhs.terms_) {
            if (a & b) continue;
            mpq_class prod = ca * cb;
            if (merge_sign(a, b) < 0) prod = -prod;
            out.add_term(a | b, prod);
        }
    return out;
}

GrassmannElement GrassmannElement::operator*(const mpq_class& scalar) const {
    GrassmannElement out(m_, n_);
    if (scalar == 0) return out;
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, c * scalar);
    return out;
}

int GrassmannElement::e_count(Mask mono) const {
    Mask e_mask = (Mask(1) << (m_ * n_)) - 1;
    return std::popcount(mono & e_mask);
}

int GrassmannElement::f_count(Mask mono) const {
    Mask e_mask = (Mask(1) << (m_ * n_)) - 1;
    return std::popcount(mono >> (m_ * n_) & e_mask);
}

bool GrassmannElement::is_pure_type(int a, int b) const {
    for (const auto& [mono, c] : terms_)
        if (e_count(mono) != a || f_count(mono) != b) return false;
    return true;
}

std::string GrassmannElement::monomial_name(Mask mono) const {
    if (mono == 0) return "1";
    std::string out;
    for (int bit = 0; bit < generator_count(); ++bit) {
        if (!(mono & (Mask(1) << bit))) continue;
        if (!out.empty()) out += '*';
        int cell = bit % (m_ * n_);
        out += (bit < m_ * n_) ? 'e' : 'f';
        out += std::to_string(cell / n_ + 1) + "," + std::to_string(cell % n_ + 1);
    }
    return out;
}

}  // namespace schubert
