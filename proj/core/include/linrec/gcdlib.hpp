#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linrec/bigint.hpp"
#include "linrec/matrix.hpp"
#include "linrec/recurrence.hpp"

namespace linrec::gcdlib {

/// Non-negative gcd; gcd(0,0) = 0 by convention.
Bigint gcd(const Bigint& a, const Bigint& b);

/// x*a + y*b = g = gcd(a,b) >= 0.
struct BezoutTriple {
    Bigint g;
    Bigint x;
    Bigint y;
};

/// The canonical solution produced by the schoolbook extended-Euclid
/// iteration, so outputs are deterministic: extended_gcd(a, 0) is
/// (|a|, sign(a), 0).
BezoutTriple extended_gcd(Bigint a, Bigint b);

/// Left fold of gcd; order-independent. Throws errc::arity_error on
/// empty input.
Bigint multi_gcd(const std::vector<Bigint>& xs);

/// True iff gcd(a_m, a_n) = a_{gcd(m,n)} for all 1 <= m, n <= bound,
/// in exact arithmetic. Requires bound >= 2.
bool is_strong_divisibility(const Recurrence& r, std::size_t bound);

/// For y = A*x with positive x and y and det(A) = +-1 (or det(A) != 0
/// dividing every Delta_i(A) built from y), returns whether
/// multi_gcd(y) = multi_gcd(x). Under these hypotheses the result is
/// guaranteed true; a false return signals a bug.
/// Throws errc::singular_matrix when det(A) = 0 and
/// errc::hypothesis_not_met on the positivity/divisibility preconditions.
bool unimodular_preserves_gcd(const IntMatrix& a,
                              const std::vector<Bigint>& xs);

/// Determinant of A with column i (1-based) replaced by y.
Bigint cramer_delta(const IntMatrix& a, const std::vector<Bigint>& y,
                    std::size_t i);

/// Certificate for a residue congruence between gcd-indexed terms.
/// The witness integer is period-specific, so the shift it was built at
/// is recorded alongside it.
struct Witness {
    Bigint w;
    std::uint32_t lhs_residue;
    std::uint32_t rhs_residue;
    std::uint64_t shift;
};

/// Witness construction for [a_{gcd(i+shift, j)}]_m = [w]_m * [a_{gcd(i,j)}]_m
/// on a strong divisibility sequence (caller-verified): from the Bezout pair
/// of (a_{i+shift}, a_j), w = (x*a_i + y*a_j) / gcd(a_i, a_j), an exact
/// division. Throws errc::invalid_period unless shift is a period of r mod m,
/// and errc::invariant_violation if the division is inexact or the residues
/// differ (either signals a bug or a false caller assertion).
Witness period_shift_witness(const Recurrence& r, std::uint64_t i,
                             std::uint64_t j, std::uint64_t m,
                             std::uint64_t shift);

struct ScalingWitness {
    /// z from the index decomposition x*i + y*j = z*gcd(i,j), where (x,y)
    /// is the Bezout pair of (i+shift, j).
    Bigint z;
    /// Present iff z > 0: certifies [a_{z*gcd(i,j)}]_m = [w]_m*[a_{gcd(i,j)}]_m.
    std::optional<Witness> witness;
};

/// Witness construction for scaled gcd indices. The z <= 0 case is
/// reported without a witness. Errors as period_shift_witness.
ScalingWitness index_scaling_witness(const Recurrence& r, std::uint64_t i,
                                     std::uint64_t j, std::uint64_t m,
                                     std::uint64_t shift);

} // namespace linrec::gcdlib
