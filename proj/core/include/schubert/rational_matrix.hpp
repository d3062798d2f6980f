#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace schubert {

// Dense matrix over the exact rationals. No floating point anywhere.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);
    static RationalMatrix identity(int d);
    static RationalMatrix diagonal(const std::vector<mpq_class>& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    mpq_class& at(int i, int j) { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)]; }
    const mpq_class& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)]; }

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator+(const RationalMatrix& rhs) const;
    RationalMatrix operator-(const RationalMatrix& rhs) const;
    bool operator==(const RationalMatrix& rhs) const;

    mpq_class trace() const;
    mpq_class determinant() const;  // Gaussian elimination
    RationalMatrix power(int e) const;

    struct Echelon;
    Echelon reduced_echelon() const;

    // Exact solution of A x = b; nullopt when inconsistent. Requires full
    // column rank (unique solution) and throws otherwise.
    std::optional<std::vector<mpq_class>> solve(const std::vector<mpq_class>& b) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<mpq_class> a_;
};

struct RationalMatrix::Echelon {
    RationalMatrix rref;
    std::vector<int> pivot_columns;
    int rank = 0;
};

}  // namespace schubert
