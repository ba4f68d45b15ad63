#include "linrec/residue.hpp"

#include <algorithm>

#include "linrec/errors.hpp"

namespace linrec {

ResidueRecurrence::ResidueRecurrence(std::uint32_t modulus,
                                     std::vector<std::uint32_t> coeffs,
                                     std::vector<std::uint32_t> init)
    : modulus_(modulus), coeffs_(std::move(coeffs)), init_(std::move(init)) {
    if (modulus_ == 0)
        throw error(errc::invalid_modulus, "modulus must be >= 1");
    if (modulus_ > kMaxModulus)
        throw error(errc::modulus_too_large, "modulus exceeds 2^31 - 1");
    if (coeffs_.empty() || coeffs_.size() != init_.size())
        throw error(errc::bad_input, "coeffs and init must have equal non-zero length");
    for (std::uint32_t v : coeffs_)
        if (v >= modulus_)
            throw error(errc::bad_input, "coefficient residue out of range");
    for (std::uint32_t v : init_)
        if (v >= modulus_)
            throw error(errc::bad_input, "initial residue out of range");
}

ResidueRecurrence reduce(const Recurrence& r, std::uint64_t m) {
    if (m == 0)
        throw error(errc::invalid_modulus, "modulus must be >= 1");
    if (m > kMaxModulus)
        throw error(errc::modulus_too_large, "modulus exceeds 2^31 - 1");
    const auto mm = static_cast<std::uint32_t>(m);
    std::vector<std::uint32_t> coeffs, init;
    coeffs.reserve(r.order());
    init.reserve(r.order());
    for (const Bigint& c : r.coeffs())
        coeffs.push_back(mod_u32(c, mm));
    for (const Bigint& a : r.init())
        init.push_back(mod_u32(a, mm));
    return ResidueRecurrence(mm, std::move(coeffs), std::move(init));
}

namespace {

// Next window value: sum of coeff[j]*window[j] mod m. Each product fits
// 64 bits for m <= 2^31 - 1 and the accumulator is reduced per addition.
std::uint32_t step(const std::vector<std::uint32_t>& coeffs,
                   const std::vector<std::uint32_t>& window, std::uint32_t m) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        acc = (acc + static_cast<std::uint64_t>(coeffs[j]) * window[j]) % m;
    return static_cast<std::uint32_t>(acc);
}

// Row-major k x k residue matrix.
struct RMat {
    std::size_t k;
    std::vector<std::uint64_t> e;

    RMat(std::size_t k_) : k(k_), e(k_ * k_, 0) {}

    static RMat identity(std::size_t k) {
        RMat m(k);
        for (std::size_t i = 0; i < k; ++i)
            m.e[i * k + i] = 1;
        return m;
    }

    RMat mul(const RMat& o, std::uint32_t m) const {
        RMat out(k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t l = 0; l < k; ++l) {
                const std::uint64_t v = e[i * k + l];
                if (v == 0)
                    continue;
                for (std::size_t j = 0; j < k; ++j)
                    out.e[i * k + j] =
                        (out.e[i * k + j] + v * o.e[l * k + j]) % m;
            }
        return out;
    }
};

RMat companion_pow(const ResidueRecurrence& s, std::uint64_t e) {
    const std::size_t k = s.order();
    const std::uint32_t m = s.modulus();
    RMat base(k);
    for (std::size_t r = 0; r + 1 < k; ++r)
        base.e[r * k + r + 1] = 1;
    for (std::size_t j = 0; j < k; ++j)
        base.e[(k - 1) * k + j] = s.coeffs()[j] % m;
    RMat acc = RMat::identity(k);
    while (e > 0) {
        if (e & 1)
            acc = acc.mul(base, m);
        base = base.mul(base, m);
        e >>= 1;
    }
    return acc;
}

} // namespace

std::uint32_t residue_term(const ResidueRecurrence& s, std::uint64_t n) {
    if (n == 0)
        throw error(errc::index_out_of_domain, "sequence indices start at 1");
    const std::size_t k = s.order();
    if (n <= k)
        return s.init()[n - 1];
    std::vector<std::uint32_t> window = s.init();
    for (std::uint64_t idx = k + 1; idx <= n; ++idx) {
        const std::uint32_t next = step(s.coeffs(), window, s.modulus());
        std::rotate(window.begin(), window.begin() + 1, window.end());
        window.back() = next;
    }
    return window.back();
}

std::vector<std::uint32_t> residue_state(const ResidueRecurrence& s,
                                         std::uint64_t n) {
    if (n == 0)
        throw error(errc::index_out_of_domain, "sequence indices start at 1");
    const std::size_t k = s.order();
    const std::uint32_t m = s.modulus();
    const RMat p = companion_pow(s, n - 1);
    std::vector<std::uint32_t> out(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < k; ++j)
            acc = (acc + p.e[i * k + j] * s.init()[j]) % m;
        out[i] = static_cast<std::uint32_t>(acc);
    }
    return out;
}

std::uint32_t residue_term_fast(const ResidueRecurrence& s, std::uint64_t n) {
    if (n == 0)
        throw error(errc::index_out_of_domain, "sequence indices start at 1");
    if (n <= s.order())
        return s.init()[n - 1];
    return residue_state(s, n)[0];
}

bool commutation_check(const Recurrence& r, std::uint64_t m, std::uint64_t i) {
    if (i == 0)
        throw error(errc::index_out_of_domain, "positions start at 1");
    const ResidueRecurrence s = reduce(r, m);
    const std::size_t k = r.order();

    // Left side: apply the exact map to (a_i, ..., a_{i+k-1}), then reduce.
    const std::vector<Bigint> window = term_block(r, i, k);
    Bigint exact(0);
    for (std::size_t j = 0; j < k; ++j)
        exact += r.coeffs()[j] * window[j];
    const std::uint32_t lhs = mod_u32(exact, s.modulus());

    // Right side: entirely in residues.
    std::vector<std::uint32_t> rwindow(k);
    for (std::size_t j = 0; j < k; ++j)
        rwindow[j] = residue_term(s, i + j);
    const std::uint32_t rhs = step(s.coeffs(), rwindow, s.modulus());

    return lhs == rhs;
}

} // namespace linrec
