#include "schubert/schur_functor.hpp"

#include <algorithm>
#include <stdexcept>

#include "schubert/errors.hpp"
#include "schubert/rational.hpp"
#include "schubert/tableau.hpp"

namespace schubert {

namespace {

long long factorial(int p) {
    long long f = 1;
    for (int i = 2; i <= p; ++i) f *= i;
    return f;
}

void check_weight(const Partition& la, const Budget& budget) {
    if (la.weight() < 1) throw input_error("symmetrizer needs a nonempty partition");
    if (la.weight() > budget.p_max)
        throw budget_error("partition weight " + std::to_string(la.weight()) + " exceeds p_max " +
                           std::to_string(budget.p_max));
}

// All permutations of {0..p-1} that permute each given entry set (1-based)
// within itself: the direct product of symmetric groups on the sets.
std::vector<Permutation> block_subgroup(int p, const std::vector<std::vector<int>>& blocks) {
    std::vector<Permutation> result{Permutation(p)};
    for (const auto& block : blocks) {
        if (block.size() <= 1) continue;
        std::vector<int> sorted = block;
        std::sort(sorted.begin(), sorted.end());
        std::vector<Permutation> next;
        std::vector<int> arrangement = sorted;
        do {
            std::vector<int> img(static_cast<std::size_t>(p));
            for (int i = 0; i < p; ++i) img[static_cast<std::size_t>(i)] = i;
            for (std::size_t i = 0; i < sorted.size(); ++i)
                img[static_cast<std::size_t>(sorted[i] - 1)] = arrangement[i] - 1;
            Permutation blockperm = Permutation::from_images(std::move(img));
            for (const auto& prev : result) next.push_back(prev * blockperm);
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        result = std::move(next);
    }
    return result;
}

}  // namespace

GroupAlgebraElement row_symmetrizer(const Partition& la, const Budget& budget) {
    check_weight(la, budget);
    int p = la.weight();
    CanonicalTableau t = canonical_tableau(la);
    GroupAlgebraElement b(p);
    for (const auto& v : block_subgroup(p, t.row_groups)) b.add_term(v, 1);
    return b;
}

GroupAlgebraElement column_antisymmetrizer(const Partition& la, const Budget& budget) {
    check_weight(la, budget);
    int p = la.weight();
    CanonicalTableau t = canonical_tableau(la);
    GroupAlgebraElement a(p);
    for (const auto& u : block_subgroup(p, t.column_groups)) a.add_term(u, u.sign());
    return a;
}

GroupAlgebraElement young_symmetrizer(const Partition& la, const Budget& budget) {
    return column_antisymmetrizer(la, budget) * row_symmetrizer(la, budget);
}

long long symmetrizer_norm(const Partition& la, const Budget& budget) {
    GroupAlgebraElement c = young_symmetrizer(la, budget);
    GroupAlgebraElement c2 = c * c;
    // c has coefficient 1 on the identity (u*v = 1 forces u = v = 1)
    long long n = c2.coefficient(Permutation(c.p()));
    if (!(c2 == c * n)) throw std::logic_error("young symmetrizer square is not a scalar multiple");
    if (n <= 0) throw std::logic_error("young symmetrizer norm must be positive");
    return n;
}

namespace {

// Tensor index tuples are flattened row-major: slot p-1 varies fastest.
long long tensor_dim(int d, int p, const Budget& budget) {
    long long dim = 1;
    for (int i = 0; i < p; ++i) {
        dim *= d;
        if (dim > budget.tensor_entries)
            throw budget_error("tensor space dimension exceeds budget of " + std::to_string(budget.tensor_entries) +
                               " entries");
    }
    return dim;
}

std::vector<int> unflatten(long long idx, int d, int p) {
    std::vector<int> t(static_cast<std::size_t>(p));
    for (int k = p - 1; k >= 0; --k) {
        t[static_cast<std::size_t>(k)] = static_cast<int>(idx % d);
        idx /= d;
    }
    return t;
}

long long flatten(const std::vector<int>& t, int d) {
    long long idx = 0;
    for (int v : t) idx = idx * d + v;
    return idx;
}

// Place permutation on the right: (t . s)[k] = t[s(k)].
long long act(long long idx, const Permutation& s, int d, int p) {
    std::vector<int> t = unflatten(idx, d, p);
    std::vector<int> moved(t.size());
    for (int k = 0; k < p; ++k) moved[static_cast<std::size_t>(k)] = t[static_cast<std::size_t>(s(k))];
    return flatten(moved, d);
}

// Column of the right-multiplication matrix of c at basis tensor idx.
std::vector<mpq_class> symmetrizer_column(const GroupAlgebraElement& c, long long idx, int d, int p, long long dim) {
    std::vector<mpq_class> col(static_cast<std::size_t>(dim), mpq_class(0));
    for (const auto& [s, coeff] : c.terms())
        col[static_cast<std::size_t>(act(idx, s, d, p))] += to_mpq(coeff);
    return col;
}

// Incremental reduced echelon over columns; keeps the reduced pivot vectors
// so membership tests stay cheap.
struct EchelonAccumulator {
    struct PivotVec {
        std::size_t lead;
        std::vector<mpq_class> v;  // normalized: v[lead] == 1
    };
    std::vector<PivotVec> pivots;

    void reduce(std::vector<mpq_class>& x) const {
        for (const auto& pv : pivots) {
            if (x[pv.lead] == 0) continue;
            mpq_class f = x[pv.lead];
            for (std::size_t i = pv.lead; i < x.size(); ++i)
                if (pv.v[i] != 0) x[i] -= f * pv.v[i];
        }
    }

    // returns true if x was independent (and absorbs it)
    bool insert(std::vector<mpq_class> x) {
        reduce(x);
        std::size_t lead = x.size();
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0) {
                lead = i;
                break;
            }
        if (lead == x.size()) return false;
        mpq_class inv = 1 / x[lead];
        for (std::size_t i = lead; i < x.size(); ++i)
            if (x[i] != 0) x[i] *= inv;
        for (auto& pv : pivots) {
            if (pv.v[lead] == 0) continue;
            mpq_class f = pv.v[lead];
            for (std::size_t i = lead; i < x.size(); ++i)
                if (x[i] != 0) pv.v[i] -= f * x[i];
        }
        pivots.push_back({lead, std::move(x)});
        return true;
    }
};

// A^{tensor p} applied to a dense tensor, one slot at a time.
std::vector<mpq_class> apply_tensor_power(const RationalMatrix& a, std::vector<mpq_class> v, int p) {
    int d = a.rows();
    long long dim = static_cast<long long>(v.size());
    for (int slot = 0; slot < p; ++slot) {
        long long stride = 1;
        for (int k = slot + 1; k < p; ++k) stride *= d;
        std::vector<mpq_class> next(v.size(), mpq_class(0));
        // index = outer*stride*d + value*stride + inner
        long long outer_count = dim / (stride * d);
        for (long long outer = 0; outer < outer_count; ++outer)
            for (long long inner = 0; inner < stride; ++inner) {
                long long base = outer * stride * d + inner;
                for (int i = 0; i < d; ++i) {
                    mpq_class sum = 0;
                    for (int j = 0; j < d; ++j) {
                        const mpq_class& aij = a.at(i, j);
                        if (aij == 0) continue;
                        const mpq_class& vj = v[static_cast<std::size_t>(base + j * stride)];
                        if (vj == 0) continue;
                        sum += aij * vj;
                    }
                    next[static_cast<std::size_t>(base + i * stride)] = std::move(sum);
                }
            }
        v = std::move(next);
    }
    return v;
}

}  // namespace

RationalMatrix schur_module_basis(const Partition& la, int d, const Budget& budget) {
    if (d < 1) throw input_error("schur_module_basis needs d >= 1");
    if (la.empty()) return RationalMatrix::identity(1);  // trivial representation
    check_weight(la, budget);
    int p = la.weight();
    long long dim = tensor_dim(d, p, budget);
    GroupAlgebraElement c = young_symmetrizer(la, budget);

    EchelonAccumulator ech;
    std::vector<std::vector<mpq_class>> basis_cols;
    for (long long idx = 0; idx < dim; ++idx) {
        std::vector<mpq_class> col = symmetrizer_column(c, idx, d, p, dim);
        std::vector<mpq_class> copy = col;
        if (ech.insert(std::move(copy))) basis_cols.push_back(std::move(col));
    }
    RationalMatrix basis(static_cast<int>(dim), static_cast<int>(basis_cols.size()));
    for (std::size_t j = 0; j < basis_cols.size(); ++j)
        for (long long i = 0; i < dim; ++i) basis.at(static_cast<int>(i), static_cast<int>(j)) = basis_cols[j][static_cast<std::size_t>(i)];
    return basis;
}

RationalMatrix schur_matrix(const Partition& la, const RationalMatrix& a, const Budget& budget) {
    if (!a.is_square()) throw input_error("schur_matrix needs a square matrix");
    if (la.empty()) return RationalMatrix::identity(1);  // trivial representation
    check_weight(la, budget);
    int p = la.weight();
    int d = a.rows();
    if (d < 1) throw input_error("schur_matrix needs a nonempty matrix");
    long long dim = tensor_dim(d, p, budget);

    RationalMatrix basis = schur_module_basis(la, d, budget);
    int r = basis.cols();

    // coordinates of A^{tensor p} * basis_j in the basis: eliminate [B | W]
    RationalMatrix aug(static_cast<int>(dim), r + r);
    for (int j = 0; j < r; ++j) {
        std::vector<mpq_class> v(static_cast<std::size_t>(dim));
        for (long long i = 0; i < dim; ++i) v[static_cast<std::size_t>(i)] = basis.at(static_cast<int>(i), j);
        std::vector<mpq_class> w = apply_tensor_power(a, v, p);
        for (long long i = 0; i < dim; ++i) {
            aug.at(static_cast<int>(i), j) = basis.at(static_cast<int>(i), j);
            aug.at(static_cast<int>(i), r + j) = w[static_cast<std::size_t>(i)];
        }
    }
    RationalMatrix::Echelon e = aug.reduced_echelon();
    // the first r columns must be the pivots: the basis has full column rank
    for (int j = 0; j < r; ++j)
        if (j >= e.rank || e.pivot_columns[static_cast<std::size_t>(j)] != j)
            throw std::logic_error("schur module basis lost rank");
    if (e.rank != r) throw std::logic_error("A^{tensor p} left the schur module");
    RationalMatrix out(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) out.at(i, j) = e.rref.at(i, r + j);
    return out;
}

mpq_class schur_trace(const Partition& la, const RationalMatrix& a, const Budget& budget) {
    if (!a.is_square()) throw input_error("schur_trace needs a square matrix");
    if (la.weight() == 0) return 1;
    check_weight(la, budget);
    int p = la.weight();

    std::vector<mpq_class> power_trace(static_cast<std::size_t>(p) + 1);
    RationalMatrix pw = RationalMatrix::identity(a.rows());
    for (int j = 1; j <= p; ++j) {
        pw = pw * a;
        power_trace[static_cast<std::size_t>(j)] = pw.trace();
    }

    GroupAlgebraElement c = young_symmetrizer(la, budget);
    mpq_class sum = 0;
    for (const auto& [s, coeff] : c.terms()) {
        mpq_class prod = to_mpq(coeff);
        Partition type = s.cycle_type();
        for (int len : type.parts()) prod *= power_trace[static_cast<std::size_t>(len)];
        sum += prod;
    }
    return sum * to_mpq(standard_tableau_count(la), factorial(p));
}

namespace {

void subsets_rec(int n, int k, int start, std::vector<int>& acc, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(acc.size()) == k) {
        out.push_back(acc);
        return;
    }
    for (int i = start; i < n; ++i) {
        acc.push_back(i);
        subsets_rec(n, k, i + 1, acc, out);
        acc.pop_back();
    }
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    subsets_rec(n, k, 0, acc, out);
    return out;
}

}  // namespace

RationalMatrix exterior_matrix(int k, const RationalMatrix& a) {
    if (!a.is_square()) throw input_error("exterior_matrix needs a square matrix");
    int n = a.rows();
    if (k < 1 || k > n) throw input_error("exterior_matrix needs 1 <= k <= n");
    std::vector<std::vector<int>> subsets = k_subsets(n, k);
    int size = static_cast<int>(subsets.size());
    RationalMatrix out(size, size);
    for (int r = 0; r < size; ++r)
        for (int c = 0; c < size; ++c) {
            RationalMatrix minor(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    minor.at(i, j) = a.at(subsets[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)],
                                          subsets[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)]);
            out.at(r, c) = minor.determinant();
        }
    return out;
}

namespace {

std::vector<long long> small_primes(std::size_t count) {
    std::vector<long long> primes;
    long long candidate = 2;
    while (primes.size() < count) {
        bool prime = true;
        for (long long q : primes) {
            if (q * q > candidate) break;
            if (candidate % q == 0) {
                prime = false;
                break;
            }
        }
        if (prime) primes.push_back(candidate);
        ++candidate;
    }
    return primes;
}

}  // namespace

SchurCombination lr_oracle(const Partition& la, const Partition& mu, const Budget& budget, unsigned seed) {
    int p = la.weight() + mu.weight();
    if (p == 0) return SchurCombination::single(Partition{});
    if (p > budget.p_max)
        throw budget_error("lr_oracle weight " + std::to_string(p) + " exceeds p_max " + std::to_string(budget.p_max));
    int n = p;  // enough variables that no candidate evaluates to zero

    std::vector<Partition> candidates = partitions_of(p);
    int cols = static_cast<int>(candidates.size());
    int max_points = cols + 8;

    // deterministic prime windows, shifted by the seed
    std::size_t offset = static_cast<std::size_t>(seed % 64);
    std::vector<long long> primes = small_primes(offset + static_cast<std::size_t>((max_points + 1) * n));

    auto point = [&](int t) {
        std::vector<mpq_class> diag(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            diag[static_cast<std::size_t>(i)] = to_mpq(primes[offset + static_cast<std::size_t>(t * n + i)]);
        return RationalMatrix::diagonal(diag);
    };
    auto rhs_value = [&](const RationalMatrix& d) -> mpq_class {
        return schur_trace(la, d, budget) * schur_trace(mu, d, budget);
    };

    RationalMatrix system(max_points, cols);
    std::vector<mpq_class> rhs(static_cast<std::size_t>(max_points));
    EchelonAccumulator rank_probe;
    int used = 0;
    bool full_rank = false;
    for (int t = 0; t < max_points; ++t) {
        RationalMatrix d = point(t);
        std::vector<mpq_class> row(static_cast<std::size_t>(cols));
        for (int j = 0; j < cols; ++j) {
            row[static_cast<std::size_t>(j)] = schur_trace(candidates[static_cast<std::size_t>(j)], d, budget);
            system.at(t, j) = row[static_cast<std::size_t>(j)];
        }
        rhs[static_cast<std::size_t>(t)] = rhs_value(d);
        used = t + 1;
        rank_probe.insert(std::move(row));
        if (static_cast<int>(rank_probe.pivots.size()) == cols) {
            full_rank = true;
            break;
        }
    }
    if (!full_rank)
        throw std::logic_error("lr_oracle: evaluation system stayed singular after " + std::to_string(used) +
                               " points; reseed");

    RationalMatrix trimmed(used, cols);
    std::vector<mpq_class> trimmed_rhs(static_cast<std::size_t>(used));
    for (int t = 0; t < used; ++t) {
        for (int j = 0; j < cols; ++j) trimmed.at(t, j) = system.at(t, j);
        trimmed_rhs[static_cast<std::size_t>(t)] = rhs[static_cast<std::size_t>(t)];
    }
    auto solution = trimmed.solve(trimmed_rhs);
    if (!solution) throw std::logic_error("lr_oracle: inconsistent evaluation system");

    // held-out verification point
    {
        RationalMatrix d = point(used);
        mpq_class lhs = 0;
        for (int j = 0; j < cols; ++j)
            lhs += (*solution)[static_cast<std::size_t>(j)] * schur_trace(candidates[static_cast<std::size_t>(j)], d, budget);
        if (lhs != rhs_value(d)) throw std::logic_error("lr_oracle: held-out verification failed");
    }

    SchurCombination out;
    for (int j = 0; j < cols; ++j) {
        const mpq_class& x = (*solution)[static_cast<std::size_t>(j)];
        if (x == 0) continue;
        if (x.get_den() != 1 || x < 0)
            throw std::logic_error("lr_oracle: solution is not a nonnegative integer vector");
        out.add_term(candidates[static_cast<std::size_t>(j)], x.get_num().get_si());
    }
    return out;
}

}  // namespace schubert
