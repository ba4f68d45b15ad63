#pragma once

#include <cstdint>
#include <vector>

#include "linrec/matrix.hpp"
#include "linrec/recurrence.hpp"

namespace linrec::closedform {

/// Expansion coefficients C_1..C_k of order k, defined by
///   C_1 = 1,   C_n = sum_{j=1}^{n-1} f_{k-j+1} * C_{n-j}   for n in [2,k].
/// Only indices 1..k exist; the recurrence is never extrapolated past k.
struct CoeffTable {
    std::size_t order;
    std::vector<Bigint> values;

    /// C_n, 1-based.
    const Bigint& at(std::size_t n) const { return values.at(n - 1); }
};

CoeffTable coeff_table(const Recurrence& r);

/// a_{k+i} expanded over the initial block through the coefficient table:
///   a_{k+i} = sum_{m=1}^{i} C_{i-m+1} * sum_{j=m}^{k} f_{j-m+1} * a_j.
/// Valid for 1 <= i <= k; equals term(r, k+i). Throws errc::range_error.
Bigint expand_term(const Recurrence& r, std::size_t i);

/// The same value regrouped per initial value:
///   a_{k+i} = sum_{m=1}^{i} a_m sum_{j=1}^{m} f_j C_{i-m+j}
///           + sum_{m=i+1}^{k} a_m sum_{j=1}^{i} f_{m-i+j} C_j.
/// Valid for k >= 2 and 1 <= i < k. Throws errc::range_error.
Bigint expand_term_grouped(const Recurrence& r, std::size_t i);

/// The k x k matrix M with (a_{k+1}, ..., a_{2k})^T = M * (a_1, ..., a_k)^T.
/// Rows 1..k-1 come from the grouped expansion; row k from expand_term at
/// i = k. Depends only on the coefficients, never on the initial values,
/// and equals companion_matrix(r)^k. Throws errc::order_too_small for k < 2.
IntMatrix advance_matrix(const Recurrence& r);

/// For a strong divisibility sequence whose advance matrix M satisfies
/// det(M) = +-1 (or det(M) != 0 dividing every column-replaced determinant
/// against (a_{k+1}..a_{2k})), checks
///   gcd(a_{k+1},...,a_{2k}) = gcd(a_1,...,a_k) = a_1.
/// Verifies strong divisibility up to sd_bound (>= 2k) first and throws
/// errc::hypothesis_not_met when either hypothesis fails.
bool gcd_block_check(const Recurrence& r, std::size_t sd_bound);

} // namespace linrec::closedform
