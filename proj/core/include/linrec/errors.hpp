#pragma once

#include <stdexcept>
#include <string>

namespace linrec {

enum class errc {
    index_out_of_domain,   // sequence index n = 0 (sequences start at a_1)
    range_error,           // expansion index i outside its stated range
    invalid_modulus,       // m = 0
    modulus_too_large,     // m > 2^31 - 1
    state_cap_exceeded,    // m^k beyond the configured state-count budget
    invalid_shift,         // shift too small for the sufficient-condition check
    order_too_small,       // operation needs k >= 2
    invalid_period,        // shift is not a period of the reduced sequence
    coprimality_violation, // gcd(h, j) != 1
    nonpositive_t,         // g*h <= i, candidate shift would not be positive
    parity_error,          // family parameter q must be odd
    non_prime_modulus,     // 5q+2 is composite
    arity_error,           // empty input where at least one element is needed
    shape_error,           // matrix/vector dimension mismatch
    singular_matrix,       // det(A) = 0
    hypothesis_not_met,    // a stated precondition on the inputs fails
    invariant_violation,   // an identity the construction guarantees failed
    bad_input,             // malformed value (parse error, size mismatch, ...)
};

const char* errc_name(errc c) noexcept;

class error : public std::runtime_error {
public:
    error(errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace linrec
