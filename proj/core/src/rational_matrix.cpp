#include "schubert/rational_matrix.hpp"

#include <stdexcept>

#include "schubert/errors.hpp"

namespace schubert {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), mpq_class(0)) {
    if (rows < 0 || cols < 0) throw input_error("negative matrix dimension");
}

RationalMatrix RationalMatrix::identity(int d) {
    RationalMatrix out(d, d);
    for (int i = 0; i < d; ++i) out.at(i, i) = 1;
    return out;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<mpq_class>& entries) {
    RationalMatrix out(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) out.at(static_cast<int>(i), static_cast<int>(i)) = entries[i];
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw input_error("matrix shape mismatch in product");
    RationalMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpq_class& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                if (rhs.at(k, j) == 0) continue;
                out.at(i, j) += aik * rhs.at(k, j);
            }
        }
    return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw input_error("matrix shape mismatch in sum");
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw input_error("matrix shape mismatch in difference");
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
    return out;
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != rhs.a_[i]) return false;
    return true;
}

mpq_class RationalMatrix::trace() const {
    if (!is_square()) throw input_error("trace of a non-square matrix");
    mpq_class t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

mpq_class RationalMatrix::determinant() const {
    if (!is_square()) throw input_error("determinant of a non-square matrix");
    RationalMatrix work = *this;
    mpq_class det = 1;
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int r = col; r < rows_; ++r)
            if (work.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int j = 0; j < cols_; ++j) std::swap(work.at(pivot, j), work.at(col, j));
            det = -det;
        }
        det *= work.at(col, col);
        mpq_class inv = 1 / work.at(col, col);
        for (int r = col + 1; r < rows_; ++r) {
            if (work.at(r, col) == 0) continue;
            mpq_class factor = work.at(r, col) * inv;
            for (int j = col; j < cols_; ++j) work.at(r, j) -= factor * work.at(col, j);
        }
    }
    return det;
}

RationalMatrix RationalMatrix::power(int e) const {
    if (!is_square()) throw input_error("power of a non-square matrix");
    if (e < 0) throw input_error("negative matrix power");
    RationalMatrix out = identity(rows_);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

RationalMatrix::Echelon RationalMatrix::reduced_echelon() const {
    Echelon e;
    e.rref = *this;
    RationalMatrix& m = e.rref;
    int lead = 0;
    for (int col = 0; col < cols_ && lead < rows_; ++col) {
        int pivot = -1;
        for (int r = lead; r < rows_; ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != lead)
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(lead, j));
        mpq_class inv = 1 / m.at(lead, col);
        for (int j = col; j < cols_; ++j) m.at(lead, j) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == lead || m.at(r, col) == 0) continue;
            mpq_class factor = m.at(r, col);
            for (int j = col; j < cols_; ++j) m.at(r, j) -= factor * m.at(lead, j);
        }
        e.pivot_columns.push_back(col);
        ++lead;
    }
    e.rank = static_cast<int>(e.pivot_columns.size());
    return e;
}

std::optional<std::vector<mpq_class>> RationalMatrix::solve(const std::vector<mpq_class>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw input_error("rhs length mismatch");
    RationalMatrix aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[static_cast<std::size_t>(i)];
    }
    Echelon e = aug.reduced_echelon();
    // inconsistent if the augmented column is a pivot
    for (int p : e.pivot_columns)
        if (p == cols_) return std::nullopt;
    if (e.rank != cols_) throw std::logic_error("solve: system is underdetermined");
    std::vector<mpq_class> x(static_cast<std::size_t>(cols_));
    for (int r = 0; r < e.rank; ++r) x[static_cast<std::size_t>(e.pivot_columns[static_cast<std::size_t>(r)])] = e.rref.at(r, cols_);
    return x;
}

}  // namespace schubert
