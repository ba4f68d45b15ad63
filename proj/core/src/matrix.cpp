#include "linrec/matrix.hpp"

#include <utility>

#include "linrec/errors.hpp"

namespace linrec {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Bigint(0)) {
    if (rows == 0 || cols == 0)
        throw error(errc::shape_error, "matrix dimensions must be >= 1");
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Bigint> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0)
        throw error(errc::shape_error, "matrix dimensions must be >= 1");
    if (entries_.size() != rows * cols)
        throw error(errc::shape_error, "entry count does not match shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != other.entries_[i])
            return false;
    return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_)
        throw error(errc::shape_error, "inner dimensions do not match");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t l = 0; l < cols_; ++l) {
            const Bigint& v = at(i, l);
            if (v == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                mpz_addmul(out.at(i, j).get_mpz_t(), v.get_mpz_t(),
                           other.at(l, j).get_mpz_t());
        }
    return out;
}

IntMatrix IntMatrix::pow(std::uint64_t e) const {
    if (rows_ != cols_)
        throw error(errc::shape_error, "matrix power needs a square matrix");
    IntMatrix acc = identity(rows_);
    IntMatrix base = *this;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Bigint det(const IntMatrix& a) {
    if (a.rows() != a.cols())
        throw error(errc::shape_error, "determinant needs a square matrix");
    IntMatrix m = a;
    const std::size_t n = m.rows();
    int sign = 1;
    Bigint prev(1);
    Bigint tmp;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m.at(pivot, c) == 0)
            ++pivot;
        if (pivot == n)
            return Bigint(0);
        if (pivot != c) {
            for (std::size_t j = c; j < n; ++j)
                m.at(c, j).swap(m.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                // Bareiss step: division by the previous pivot is exact.
                tmp = m.at(i, j) * m.at(c, c) - m.at(i, c) * m.at(c, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), tmp.get_mpz_t(),
                             prev.get_mpz_t());
            }
            m.at(i, c) = 0;
        }
        prev = m.at(c, c);
    }
    Bigint d = m.at(n - 1, n - 1);
    if (sign < 0)
        d = -d;
    return d;
}

std::vector<Bigint> operator*(const IntMatrix& a, const std::vector<Bigint>& x) {
    if (x.size() != a.cols())
        throw error(errc::shape_error, "vector length does not match columns");
    std::vector<Bigint> y(a.rows(), Bigint(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            mpz_addmul(y[i].get_mpz_t(), a.at(i, j).get_mpz_t(),
                       x[j].get_mpz_t());
    return y;
}

IntMatrix companion_matrix(const Recurrence& r) {
    const std::size_t k = r.order();
    IntMatrix c(k, k);
    for (std::size_t row = 0; row + 1 < k; ++row)
        c.at(row, row + 1) = 1;
    for (std::size_t j = 0; j < k; ++j)
        c.at(k - 1, j) = r.coeffs()[j];
    return c;
}

} // namespace linrec
