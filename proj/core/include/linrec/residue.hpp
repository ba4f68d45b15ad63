#pragma once

#include <cstdint>
#include <vector>

#include "linrec/recurrence.hpp"

namespace linrec {

/// Largest supported modulus. Residue products are computed in 64-bit
/// double width, so moduli up to 2^31 - 1 never overflow.
inline constexpr std::uint32_t kMaxModulus = 0x7fffffff;

/// A Recurrence reduced modulo m: coefficients and initial values as
/// canonical residues in [0, m-1]. Immutable; safe to share.
class ResidueRecurrence {
public:
    /// Throws errc::bad_input unless both vectors have equal non-zero
    /// length and every stored residue is < modulus.
    ResidueRecurrence(std::uint32_t modulus, std::vector<std::uint32_t> coeffs,
                      std::vector<std::uint32_t> init);

    std::uint32_t modulus() const noexcept { return modulus_; }
    std::size_t order() const noexcept { return coeffs_.size(); }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }
    const std::vector<std::uint32_t>& init() const noexcept { return init_; }

private:
    std::uint32_t modulus_;
    std::vector<std::uint32_t> coeffs_;
    std::vector<std::uint32_t> init_;
};

/// Reduction homomorphism: maps coefficients and initial values to
/// canonical residues. Throws errc::invalid_modulus for m = 0 and
/// errc::modulus_too_large for m > kMaxModulus.
ResidueRecurrence reduce(const Recurrence& r, std::uint64_t m);

/// [a_n]_m by window iteration, O(k*n).
std::uint32_t residue_term(const ResidueRecurrence& s, std::uint64_t n);

/// [a_n]_m by companion-matrix exponentiation, O(k^3 log n) residue
/// multiplications. Agrees with residue_term for every n.
std::uint32_t residue_term_fast(const ResidueRecurrence& s, std::uint64_t n);

/// State vector ([a_n]_m, ..., [a_{n+k-1}]_m), computed by matrix power.
std::vector<std::uint32_t> residue_state(const ResidueRecurrence& s,
                                         std::uint64_t n);

/// Commuting-square check at position i: applies the recurrence map
/// exactly and then reduces, versus applying the residue map to the
/// reduced window. True for every (r, m, i) since reduction mod m is a
/// ring morphism.
bool commutation_check(const Recurrence& r, std::uint64_t m, std::uint64_t i);

/// (a*b) mod m in double width; a, b need not be reduced.
inline std::uint32_t mulmod(std::uint64_t a, std::uint64_t b, std::uint32_t m) {
    return static_cast<std::uint32_t>((a % m) * (b % m) % m);
}

} // namespace linrec
