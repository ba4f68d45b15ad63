#pragma once

#include <cstdint>
#include <vector>

#include "linrec/bigint.hpp"

namespace linrec {

/// A k-th order linear recurrence over the integers:
///   a_{i+k} = f_1*a_i + f_2*a_{i+1} + ... + f_k*a_{i+k-1}   for i >= 1,
/// determined by coefficients f_1..f_k and initial values a_1..a_k.
/// Indices are 1-based throughout; a_0 does not exist.
///
/// Immutable after construction; safe to share across threads.
class Recurrence {
public:
    /// Throws errc::bad_input unless coeffs and init are non-empty and of
    /// equal length.
    Recurrence(std::vector<Bigint> coeffs, std::vector<Bigint> init);

    std::size_t order() const noexcept { return coeffs_.size(); }
    const std::vector<Bigint>& coeffs() const noexcept { return coeffs_; }
    const std::vector<Bigint>& init() const noexcept { return init_; }

    /// f_j, 1-based.
    const Bigint& coeff(std::size_t j) const { return coeffs_.at(j - 1); }
    /// a_i, 1-based.
    const Bigint& initial(std::size_t i) const { return init_.at(i - 1); }

    /// k=2, f=(1,1), init=(F_1,F_2)=(1,1), so term(n) = F_n for n >= 1.
    static Recurrence fibonacci();

private:
    std::vector<Bigint> coeffs_;
    std::vector<Bigint> init_;
};

/// a_n, exact. Throws errc::index_out_of_domain for n = 0.
Bigint term(const Recurrence& r, std::uint64_t n);

/// (a_start, ..., a_{start+count-1}); empty when count = 0.
std::vector<Bigint> term_block(const Recurrence& r, std::uint64_t start,
                               std::size_t count);

/// F_n with F_0 = 0, F_1 = F_2 = 1.
Bigint fibonacci_number(std::uint64_t n);

/// Checks F_{n+m} = F_m*F_{n+1} + F_{m-1}*F_n in exact arithmetic.
/// Here m is an index, not a modulus; requires m >= 1.
bool fib_identity_check(std::uint64_t n, std::uint64_t m);

} // namespace linrec
