#include "linrec/recurrence.hpp"

#include <algorithm>

#include "linrec/errors.hpp"

namespace linrec {

Recurrence::Recurrence(std::vector<Bigint> coeffs, std::vector<Bigint> init)
    : coeffs_(std::move(coeffs)), init_(std::move(init)) {
    if (coeffs_.empty())
        throw error(errc::bad_input, "order must be >= 1");
    if (coeffs_.size() != init_.size())
        throw error(errc::bad_input, "coeffs and init must have equal length");
}

Recurrence Recurrence::fibonacci() {
    return Recurrence({Bigint(1), Bigint(1)}, {Bigint(1), Bigint(1)});
}

namespace {

// One recurrence step on a window of the last k terms.
void advance(std::vector<Bigint>& window, const std::vector<Bigint>& coeffs,
             Bigint& next) {
    next = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        mpz_addmul(next.get_mpz_t(), coeffs[j].get_mpz_t(),
                   window[j].get_mpz_t());
    std::rotate(window.begin(), window.begin() + 1, window.end());
    window.back().swap(next);
}

} // namespace

Bigint term(const Recurrence& r, std::uint64_t n) {
    if (n == 0)
        throw error(errc::index_out_of_domain, "sequence indices start at 1");
    const std::size_t k = r.order();
    if (n <= k)
        return r.init()[n - 1];
    std::vector<Bigint> window = r.init();
    Bigint next;
    for (std::uint64_t idx = k + 1; idx <= n; ++idx)
        advance(window, r.coeffs(), next);
    return window.back();
}

std::vector<Bigint> term_block(const Recurrence& r, std::uint64_t start,
                               std::size_t count) {
    if (start == 0)
        throw error(errc::index_out_of_domain, "sequence indices start at 1");
    std::vector<Bigint> out;
    out.reserve(count);
    if (count == 0)
        return out;

    const std::size_t k = r.order();
    std::vector<Bigint> window = r.init();
    Bigint next;
    const std::uint64_t last = start + count - 1;
    for (std::uint64_t idx = 1; idx <= last; ++idx) {
        if (idx > k)
            advance(window, r.coeffs(), next);
        if (idx >= start)
            out.push_back(idx <= k ? r.init()[idx - 1] : window.back());
    }
    return out;
}

Bigint fibonacci_number(std::uint64_t n) {
    if (n == 0)
        return Bigint(0);
    return term(Recurrence::fibonacci(), n);
}

bool fib_identity_check(std::uint64_t n, std::uint64_t m) {
    if (m == 0)
        throw error(errc::index_out_of_domain, "identity index m must be >= 1");
    const Bigint lhs = fibonacci_number(n + m);
    const Bigint rhs = fibonacci_number(m) * fibonacci_number(n + 1) +
                       fibonacci_number(m - 1) * fibonacci_number(n);
    return lhs == rhs;
}

} // namespace linrec
