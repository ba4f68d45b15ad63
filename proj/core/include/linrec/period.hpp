#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linrec/residue.hpp"

namespace linrec::period {

/// Shape of the orbit of the k-dimensional residue state vector
/// s_n = ([a_n]_m, ..., [a_{n+k-1}]_m): a tail of `preperiod` states
/// followed by a cycle of length `cycle_len`.
struct CycleStructure {
    std::uint64_t preperiod;
    std::uint64_t cycle_len;
};

struct PeriodReport {
    std::uint32_t modulus;
    CycleStructure cycle;
    /// Present iff preperiod = 0; then equal to cycle_len and minimal.
    std::optional<std::uint64_t> fundamental;
};

inline constexpr std::uint64_t kDefaultStateCap = 10'000'000;

/// Exact (preperiod, cycle length) found by recording visited states
/// until the first repeat; terminates within m^k + 1 steps. Throws
/// errc::state_cap_exceeded when m^k exceeds state_cap.
CycleStructure cycle_structure(const ResidueRecurrence& s,
                               std::uint64_t state_cap = kDefaultStateCap);

/// The minimal shift L with [a_{n+L}]_m = [a_n]_m for all n >= 1, when one
/// exists. Absent exactly when the orbit has a preperiod, in which case no
/// shift works for all n.
std::optional<std::uint64_t>
fundamental_period(const ResidueRecurrence& s,
                   std::uint64_t state_cap = kDefaultStateCap);

PeriodReport analyze(const ResidueRecurrence& s,
                     std::uint64_t state_cap = kDefaultStateCap);

/// True iff [a_{j+shift}]_m = [a_j]_m for j = 1..k. For a linear map this
/// first-k check is equivalent to the congruence holding for every n.
bool is_period(const ResidueRecurrence& s, std::uint64_t shift);

/// Sufficient condition for `shift` to be a period: for every i in [1,k],
///   [f_i] = [a_i],  [a_{2i+shift-k-1}] = [1],  and
///   sum_{j != i} [f_j]*[a_{i+shift-k+j-1}] = [0].
/// Requires shift > k-1 (errc::invalid_shift otherwise). One-way only:
/// true implies is_period, never the converse.
bool sufficient_condition_check(const ResidueRecurrence& s,
                                std::uint64_t shift);

/// Necessary condition satisfied by every period:
///   [a_k] = [f_1]*[a_shift] + sum_{i=2}^{k} [f_i]*[a_{i-1}].
/// Requires k >= 2 (errc::order_too_small).
bool necessary_condition_check(const ResidueRecurrence& s,
                               std::uint64_t shift);

/// All x in [0, m-1] with [f_1]*x = [a_k] - sum_{i=2}^{k} [f_i]*[a_{i-1}],
/// i.e. the residues [a_shift] can take at a period. Solved as a linear
/// congruence: solvable iff gcd(f_1, m) divides the right side, and then
/// there are exactly gcd(f_1, m) solutions. Empty result means unsolvable.
/// Requires k >= 2 (errc::order_too_small).
std::vector<std::uint32_t> solve_period_residue(const ResidueRecurrence& s);

/// Every shift L <= bound whose residue [a_L] solves the period-residue
/// congruence AND which passes is_period, in increasing order. The
/// fundamental period appears whenever it is <= bound.
std::vector<std::uint64_t>
candidate_periods_via_residue(const ResidueRecurrence& s, std::uint64_t bound);

struct SdCandidate {
    std::uint64_t t;
    bool verified;
};

/// Candidate period t = g*h - i with g = gcd(i,j), for a strong
/// divisibility sequence (caller-asserted). Requires gcd(h,j) = 1
/// (errc::coprimality_violation) and g*h > i (errc::nonpositive_t).
/// `verified` reports whether [a_{gcd(i+t,j)}]_m = [a_g]_m.
SdCandidate sd_candidate(const Recurrence& r, std::uint64_t i, std::uint64_t j,
                         std::uint64_t h, std::uint64_t m);

struct FamilyPeriod {
    std::uint32_t modulus; // 5q+2
    std::uint64_t shift;   // 2(5q+3), a period of Fibonacci mod 5q+2
};

/// The Fibonacci family: for odd q with 5q+2 prime (checked by trial
/// division), 2(5q+3) is a period of the Fibonacci sequence modulo 5q+2.
/// Throws errc::parity_error for even q and errc::non_prime_modulus when
/// 5q+2 is composite.
FamilyPeriod fibonacci_family_period(std::uint32_t q);

} // namespace linrec::period
