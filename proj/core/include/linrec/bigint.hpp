#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace linrec {

/// Exact signed integer. Sequence terms grow exponentially, so every
/// integer-valued quantity outside the residue layer uses this type.
using Bigint = mpz_class;

/// Canonical residue of x in [0, m-1], m >= 1. Negative x normalize
/// into the range.
std::uint32_t mod_u32(const Bigint& x, std::uint32_t m);

bool fits_int64(const Bigint& x);
std::int64_t to_int64(const Bigint& x);

std::string to_decimal(const Bigint& x);

/// Parses an optionally signed decimal string. Throws errc::bad_input.
Bigint parse_decimal(const std::string& s);

} // namespace linrec
