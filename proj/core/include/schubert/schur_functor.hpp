#pragma once

#include <gmpxx.h>

#include "schubert/budget.hpp"
#include "schubert/group_algebra.hpp"
#include "schubert/partition.hpp"
#include "schubert/rational_matrix.hpp"
#include "schubert/schur_ring.hpp"

namespace schubert {

// Young symmetrizer c_la = a_la * b_la built from the canonical numbering of
// the diagram: a_la is the signed sum over the column group, b_la the plain
// sum over the row group. Weight above budget.p_max is rejected.
GroupAlgebraElement young_symmetrizer(const Partition& la, const Budget& budget = default_budget());
GroupAlgebraElement row_symmetrizer(const Partition& la, const Budget& budget = default_budget());
GroupAlgebraElement column_antisymmetrizer(const Partition& la, const Budget& budget = default_budget());

// The scalar n_la with c_la^2 = n_la * c_la. Throws logic_error when the
// square is not a scalar multiple (which would be an implementation bug).
long long symmetrizer_norm(const Partition& la, const Budget& budget = default_budget());

// Basis of the Schur module inside the tensor power: the columns of the
// right-multiplication matrix of c_la at its reduced-echelon pivot indices,
// in the standard basis of (Q^d)^{tensor p}. Fixed per (la, d), independent
// of any matrix being evaluated. Column count is dim s_la(Q^d).
RationalMatrix schur_module_basis(const Partition& la, int d, const Budget& budget = default_budget());

// Matrix of A^{tensor p} restricted to the Schur module, in the basis above.
RationalMatrix schur_matrix(const Partition& la, const RationalMatrix& a, const Budget& budget = default_budget());

// Tr s_la(A) through the normalized character sum
//   (f^la / p!) * sum_{u in C, v in R} sgn(u) * prod_{cycles of uv} Tr(A^len),
// never building the tensor space. Agrees with trace(schur_matrix) wherever
// both are computable, and with the Schur polynomial at the eigenvalues for
// diagonal A.
mpq_class schur_trace(const Partition& la, const RationalMatrix& a, const Budget& budget = default_budget());

// Compound matrix of the k-th exterior power: rows and columns indexed by
// k-subsets in lexicographic order, entries the k x k minors.
RationalMatrix exterior_matrix(int k, const RationalMatrix& a);

// Tensor-product decomposition by character evaluation, independent of the
// Pieri/Giambelli route: solves for the unique combination of candidate
// weights matching s_la * s_mu on seeded prime diagonal matrices, then
// verifies on a held-out point.
SchurCombination lr_oracle(const Partition& la, const Partition& mu,
                           const Budget& budget = default_budget(), unsigned seed = 0);

}  // namespace schubert
