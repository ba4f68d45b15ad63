#include "linrec/closedform.hpp"

#include "linrec/errors.hpp"
#include "linrec/gcdlib.hpp"

namespace linrec::closedform {

CoeffTable coeff_table(const Recurrence& r) {
    const std::size_t k = r.order();
    std::vector<Bigint> c(k);
    c[0] = 1;
    for (std::size_t n = 2; n <= k; ++n) {
        Bigint acc(0);
        for (std::size_t j = 1; j <= n - 1; ++j)
            acc += r.coeff(k - j + 1) * c[n - j - 1];
        c[n - 1] = acc;
    }
    return CoeffTable{k, std::move(c)};
}

Bigint expand_term(const Recurrence& r, std::size_t i) {
    const std::size_t k = r.order();
    if (i < 1 || i > k)
        throw error(errc::range_error, "expansion index must be in [1, k]");
    const CoeffTable c = coeff_table(r);
    Bigint total(0);
    for (std::size_t m = 1; m <= i; ++m) {
        Bigint inner(0);
        for (std::size_t j = m; j <= k; ++j)
            inner += r.coeff(j - m + 1) * r.initial(j);
        total += c.at(i - m + 1) * inner;
    }
    return total;
}

Bigint expand_term_grouped(const Recurrence& r, std::size_t i) {
    const std::size_t k = r.order();
    if (k < 2 || i < 1 || i >= k)
        throw error(errc::range_error,
                    "grouped expansion needs k >= 2 and 1 <= i < k");
    const CoeffTable c = coeff_table(r);
    Bigint total(0);
    for (std::size_t m = 1; m <= i; ++m) {
        Bigint inner(0);
        for (std::size_t j = 1; j <= m; ++j)
            inner += r.coeff(j) * c.at(i - m + j);
        total += r.initial(m) * inner;
    }
    for (std::size_t m = i + 1; m <= k; ++m) {
        Bigint inner(0);
        for (std::size_t j = 1; j <= i; ++j)
            inner += r.coeff(m - i + j) * c.at(j);
        total += r.initial(m) * inner;
    }
    return total;
}

IntMatrix advance_matrix(const Recurrence& r) {
    const std::size_t k = r.order();
    if (k < 2)
        throw error(errc::order_too_small, "advance matrix needs k >= 2");
    const CoeffTable c = coeff_table(r);
    IntMatrix mk(k, k);
    // Rows 1..k-1: the grouped expansion coefficients of a_{k+i} in a_m.
    for (std::size_t i = 1; i < k; ++i)
        for (std::size_t m = 1; m <= k; ++m) {
            Bigint acc(0);
            if (m <= i) {
                for (std::size_t j = 1; j <= m; ++j)
                    acc += r.coeff(j) * c.at(i - m + j);
            } else {
                for (std::size_t j = 1; j <= i; ++j)
                    acc += r.coeff(m - i + j) * c.at(j);
            }
            mk.at(i - 1, m - 1) = acc;
        }
    // Row k: coefficient of a_m in the i = k expansion.
    for (std::size_t m = 1; m <= k; ++m) {
        Bigint acc(0);
        for (std::size_t l = 1; l <= m; ++l)
            acc += c.at(k - l + 1) * r.coeff(m - l + 1);
        mk.at(k - 1, m - 1) = acc;
    }
    return mk;
}

bool gcd_block_check(const Recurrence& r, std::size_t sd_bound) {
    const std::size_t k = r.order();
    if (k < 2)
        throw error(errc::order_too_small, "gcd block check needs k >= 2");
    if (sd_bound < 2 * k)
        throw error(errc::bad_input, "sd_bound must be >= 2k");
    if (!gcdlib::is_strong_divisibility(r, sd_bound))
        throw error(errc::hypothesis_not_met,
                    "sequence is not strong divisibility up to the bound");

    const IntMatrix mk = advance_matrix(r);
    const Bigint d = det(mk);
    const std::vector<Bigint> block = term_block(r, k + 1, k);
    const bool unimodular = (d == 1 || d == -1);
    if (!unimodular) {
        if (d == 0)
            throw error(errc::hypothesis_not_met,
                        "advance matrix is singular");
        for (std::size_t i = 1; i <= k; ++i)
            if (!mpz_divisible_p(gcdlib::cramer_delta(mk, block, i).get_mpz_t(),
                                 d.get_mpz_t()))
                throw error(errc::hypothesis_not_met,
                            "det does not divide every replaced determinant");
    }

    const Bigint g_block = gcdlib::multi_gcd(block);
    const Bigint g_init = gcdlib::multi_gcd(r.init());
    return g_block == g_init && g_init == r.initial(1);
}

} // namespace linrec::closedform
