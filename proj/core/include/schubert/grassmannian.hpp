#pragma once

#include "schubert/laurent.hpp"
#include "schubert/partition.hpp"
#include "schubert/schur_ring.hpp"

namespace schubert {

// G(m,n): m-dimensional subspaces of C^{m+n}, thought of as rank-n quotients.
// Schubert classes are indexed by partitions inside the n x m rectangle
// (length <= n, parts <= m; the transposed indexing).
struct GrassmannianShape {
    int m = 1;
    int n = 1;
    int capacity() const { return m * n; }  // complex dimension
    bool admits(const Partition& la) const { return la.fits_rectangle(n, m); }
    bool operator==(const GrassmannianShape&) const = default;
};

// Element of H^*(G(m,n)) in the Schubert basis. degree_scale is 2 for the
// complex Grassmannian and 4 for the degree-doubled quaternionic one; a key
// la sits in cohomological degree degree_scale * |la|.
struct CohomologyClass {
    GrassmannianShape shape;
    SchurCombination terms;
    int degree_scale = 2;
    // set when a product was asked of classes that are zero in this ring
    bool nonfitting_input = false;

    bool is_zero() const { return terms.is_zero(); }
    bool operator==(const CohomologyClass& rhs) const {
        return shape == rhs.shape && terms == rhs.terms && degree_scale == rhs.degree_scale;
    }
};

// Sets sigma_la = 0 for every key outside the rectangle, keeping the rest.
CohomologyClass truncate(const SchurCombination& c, GrassmannianShape shape, int degree_scale = 2);

// Cup product: the untruncated Schur product pushed into the rectangle.
CohomologyClass schubert_product(const Partition& la, const Partition& mu, GrassmannianShape shape);

// Quaternionic analogue: identical coefficients, degrees quadrupled.
CohomologyClass sp_product(const Partition& la, const Partition& mu, GrassmannianShape shape);

// The integral homomorphism rho: V^la -> sigma_la extended linearly; a
// character is expanded into the Schur basis first.
CohomologyClass rho(const SchurCombination& c, GrassmannianShape shape);
CohomologyClass rho(const Laurent& character, GrassmannianShape shape);

// Rank of H^{2k}: partitions of k inside the rectangle.
long long betti_number(GrassmannianShape shape, int k);

// Coefficient of the full-rectangle class: the Poincare pairing against the
// point class, standing in for integration over the Grassmannian.
long long top_pairing(const CohomologyClass& c);

// 180-degree rotated complement of la in the n x m rectangle.
Partition rectangle_complement(const Partition& la, GrassmannianShape shape);

}  // namespace schubert
