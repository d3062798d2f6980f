#include "schubert/grassmannian.hpp"

#include <algorithm>

#include "schubert/errors.hpp"

namespace schubert {

CohomologyClass truncate(const SchurCombination& c, GrassmannianShape shape, int degree_scale) {
    CohomologyClass out;
    out.shape = shape;
    out.degree_scale = degree_scale;
    for (const auto& [la, coeff] : c.terms())
        if (shape.admits(la)) out.terms.add_term(la, coeff);
    return out;
}

CohomologyClass schubert_product(const Partition& la, const Partition& mu, GrassmannianShape shape) {
    if (!shape.admits(la) || !shape.admits(mu)) {
        CohomologyClass zero;
        zero.shape = shape;
        zero.nonfitting_input = true;
        return zero;
    }
    return truncate(schur_multiply(la, mu), shape);
}

CohomologyClass sp_product(const Partition& la, const Partition& mu, GrassmannianShape shape) {
    CohomologyClass out = schubert_product(la, mu, shape);
    out.degree_scale = 4;
    return out;
}

CohomologyClass rho(const SchurCombination& c, GrassmannianShape shape) {
    return truncate(c, shape);
}

CohomologyClass rho(const Laurent& character, GrassmannianShape shape) {
    return rho(expand_in_schur_basis(character), shape);
}

long long betti_number(GrassmannianShape shape, int k) {
    if (k < 0) throw input_error("betti_number needs k >= 0");
    return static_cast<long long>(partitions_in_rectangle(k, shape.n, shape.m).size());
}

long long top_pairing(const CohomologyClass& c) {
    std::vector<int> rect(static_cast<std::size_t>(c.shape.n), c.shape.m);
    return c.terms.coefficient(Partition(std::move(rect)));
}

Partition rectangle_complement(const Partition& la, GrassmannianShape shape) {
    if (!shape.admits(la)) throw input_error("complement of a partition outside the rectangle");
    std::vector<int> parts;
    for (int i = shape.n; i >= 1; --i) {
        int v = shape.m - la.part(i);
        if (v > 0) parts.push_back(v);
    }
    // rotation preserves weak decrease; trailing zeros were skipped above
    return Partition(std::move(parts));
}

}  // namespace schubert
