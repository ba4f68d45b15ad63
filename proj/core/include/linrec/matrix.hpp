#pragma once

#include <cstdint>
#include <vector>

#include "linrec/bigint.hpp"
#include "linrec/recurrence.hpp"

namespace linrec {

/// Dense exact integer matrix, row-major.
class IntMatrix {
public:
    /// Zero matrix. Throws errc::shape_error if rows or cols is 0.
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Bigint> entries);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    // 0-based access
    Bigint& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Bigint& at(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    const std::vector<Bigint>& entries() const noexcept { return entries_; }

    bool operator==(const IntMatrix& other) const;

    /// Throws errc::shape_error on inner-dimension mismatch.
    IntMatrix operator*(const IntMatrix& other) const;

    /// A^e by repeated squaring; A^0 = I. Square matrices only.
    IntMatrix pow(std::uint64_t e) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Bigint> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws errc::shape_error for non-square input.
Bigint det(const IntMatrix& a);

/// y = A*x. Throws errc::shape_error unless x has cols(A) entries.
std::vector<Bigint> operator*(const IntMatrix& a, const std::vector<Bigint>& x);

/// The k x k matrix advancing the state column (a_n, ..., a_{n+k-1})^T by
/// one step: rows 1..k-1 shift, row k holds (f_1, ..., f_k).
IntMatrix companion_matrix(const Recurrence& r);

} // namespace linrec
