#include "linrec/bigint.hpp"

#include <cctype>

#include "linrec/errors.hpp"

namespace linrec {

const char* errc_name(errc c) noexcept {
    switch (c) {
    case errc::index_out_of_domain: return "index out of domain";
    case errc::range_error: return "range error";
    case errc::invalid_modulus: return "invalid modulus";
    case errc::modulus_too_large: return "modulus too large";
    case errc::state_cap_exceeded: return "state cap exceeded";
    case errc::invalid_shift: return "invalid shift";
    case errc::order_too_small: return "order too small";
    case errc::invalid_period: return "invalid period";
    case errc::coprimality_violation: return "coprimality violation";
    case errc::nonpositive_t: return "nonpositive t";
    case errc::parity_error: return "parity error";
    case errc::non_prime_modulus: return "non-prime modulus";
    case errc::arity_error: return "arity error";
    case errc::shape_error: return "shape error";
    case errc::singular_matrix: return "singular matrix";
    case errc::hypothesis_not_met: return "hypothesis not met";
    case errc::invariant_violation: return "invariant violation";
    case errc::bad_input: return "bad input";
    }
    return "unknown error";
}

std::uint32_t mod_u32(const Bigint& x, std::uint32_t m) {
    // mpz_fdiv_ui uses floor division: remainder is always in [0, m-1].
    return static_cast<std::uint32_t>(mpz_fdiv_ui(x.get_mpz_t(), m));
}

bool fits_int64(const Bigint& x) {
    static_assert(sizeof(long) == 8, "LP64 expected");
    return mpz_fits_slong_p(x.get_mpz_t()) != 0;
}

std::int64_t to_int64(const Bigint& x) { return mpz_get_si(x.get_mpz_t()); }

std::string to_decimal(const Bigint& x) { return x.get_str(10); }

Bigint parse_decimal(const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start)
        throw error(errc::bad_input, "empty integer literal");
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw error(errc::bad_input, "not a decimal integer: '" + s + "'");
    return Bigint(s, 10);
}

} // namespace linrec
