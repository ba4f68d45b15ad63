#include "linrec/period.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "linrec/errors.hpp"

namespace linrec::period {

namespace {

// Shifts below this are evaluated by plain iteration; larger ones go
// through the companion-matrix power.
constexpr std::uint64_t kLinearShiftLimit = 1u << 16;

std::uint32_t step(const ResidueRecurrence& s,
                   const std::vector<std::uint32_t>& window) {
    const std::uint32_t m = s.modulus();
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < window.size(); ++j)
        acc = (acc + static_cast<std::uint64_t>(s.coeffs()[j]) * window[j]) % m;
    return static_cast<std::uint32_t>(acc);
}

void shift_in(std::vector<std::uint32_t>& window, std::uint32_t next) {
    std::rotate(window.begin(), window.begin() + 1, window.end());
    window.back() = next;
}

// m^k, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> state_count(std::uint64_t m, std::size_t k) {
    std::uint64_t acc = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (m != 0 && acc > UINT64_MAX / m)
            return std::nullopt;
        acc *= m;
    }
    return acc;
}

// Residues (a_n, ..., a_{n+len-1}).
std::vector<std::uint32_t> residue_window(const ResidueRecurrence& s,
                                          std::uint64_t n, std::size_t len) {
    const std::size_t k = s.order();
    std::vector<std::uint32_t> out;
    out.reserve(len);
    if (n <= kLinearShiftLimit) {
        std::vector<std::uint32_t> window = s.init();
        for (std::uint64_t pos = 1; pos < n; ++pos)
            shift_in(window, step(s, window));
        // window now holds a_n..a_{n+k-1}
        out.assign(window.begin(),
                   window.begin() +
                       static_cast<std::ptrdiff_t>(std::min(len, k)));
        while (out.size() < len) {
            shift_in(window, step(s, window));
            out.push_back(window.back());
        }
        return out;
    }
    std::vector<std::uint32_t> window = residue_state(s, n);
    out.assign(window.begin(),
               window.begin() + static_cast<std::ptrdiff_t>(std::min(len, k)));
    while (out.size() < len) {
        shift_in(window, step(s, window));
        out.push_back(window.back());
    }
    return out;
}

} // namespace

CycleStructure cycle_structure(const ResidueRecurrence& s,
                               std::uint64_t state_cap) {
    const std::size_t k = s.order();
    const std::uint64_t m = s.modulus();
    const std::optional<std::uint64_t> total = state_count(m, k);
    if (!total || *total > state_cap)
        throw error(errc::state_cap_exceeded,
                    "m^k exceeds the configured state cap");

    std::vector<std::uint32_t> st = s.init();
    auto pack = [&]() {
        std::uint64_t code = 0;
        for (std::size_t i = k; i-- > 0;)
            code = code * m + st[i];
        return code;
    };

    std::unordered_map<std::uint64_t, std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(*total, 4096)));
    for (std::uint64_t n = 1;; ++n) {
        const auto [it, inserted] = seen.emplace(pack(), n);
        if (!inserted) {
            const std::uint64_t first = it->second;
            return CycleStructure{first - 1, n - first};
        }
        shift_in(st, step(s, st));
    }
}

std::optional<std::uint64_t> fundamental_period(const ResidueRecurrence& s,
                                                std::uint64_t state_cap) {
    const CycleStructure c = cycle_structure(s, state_cap);
    if (c.preperiod != 0)
        return std::nullopt;
    return c.cycle_len;
}

PeriodReport analyze(const ResidueRecurrence& s, std::uint64_t state_cap) {
    const CycleStructure c = cycle_structure(s, state_cap);
    PeriodReport report{s.modulus(), c, std::nullopt};
    if (c.preperiod == 0)
        report.fundamental = c.cycle_len;
    return report;
}

bool is_period(const ResidueRecurrence& s, std::uint64_t shift) {
    if (shift == 0)
        throw error(errc::bad_input, "shift must be >= 1");
    const std::size_t k = s.order();
    if (shift > UINT64_MAX - k - 1)
        throw error(errc::bad_input, "shift too large");
    const std::vector<std::uint32_t> shifted =
        residue_window(s, shift + 1, k);
    return shifted == s.init();
}

bool sufficient_condition_check(const ResidueRecurrence& s,
                                std::uint64_t shift) {
    const std::size_t k = s.order();
    if (shift + 1 <= k)
        throw error(errc::invalid_shift, "shift must exceed k - 1");
    if (shift > UINT64_MAX - 2 * k)
        throw error(errc::bad_input, "shift too large");
    const std::uint32_t m = s.modulus();
    const std::uint32_t one = 1 % m;

    // Every index touched lies in [shift-k+1, shift+k-1].
    const std::uint64_t base = shift - k + 1;
    const std::vector<std::uint32_t> win =
        residue_window(s, base, 2 * k - 1);
    auto at = [&](std::uint64_t idx) { return win[idx - base]; };

    for (std::size_t i = 1; i <= k; ++i) {
        if (s.coeffs()[i - 1] != s.init()[i - 1])
            return false;
        if (at(2 * i + shift - k - 1) != one)
            return false;
        std::uint64_t acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (j == i)
                continue;
            acc = (acc + static_cast<std::uint64_t>(s.coeffs()[j - 1]) *
                             at(i + shift - k + j - 1)) %
                  m;
        }
        if (acc != 0)
            return false;
    }
    return true;
}

bool necessary_condition_check(const ResidueRecurrence& s,
                               std::uint64_t shift) {
    if (s.order() < 2)
        throw error(errc::order_too_small, "check needs k >= 2");
    if (shift == 0)
        throw error(errc::bad_input, "shift must be >= 1");
    const std::uint32_t m = s.modulus();
    std::uint64_t rhs = static_cast<std::uint64_t>(s.coeffs()[0]) *
                        residue_term_fast(s, shift) % m;
    for (std::size_t i = 2; i <= s.order(); ++i)
        rhs = (rhs + static_cast<std::uint64_t>(s.coeffs()[i - 1]) *
                         s.init()[i - 2]) %
              m;
    return s.init()[s.order() - 1] == rhs;
}

namespace {

// Inverse of a modulo m for coprime a, m (m >= 1).
std::uint64_t modinv_u64(std::uint64_t a, std::uint64_t m) {
    std::int64_t r0 = static_cast<std::int64_t>(m),
                 r1 = static_cast<std::int64_t>(a % m);
    std::int64_t x0 = 0, x1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    if (m == 1)
        return 0;
    return static_cast<std::uint64_t>(x0 < 0 ? x0 + static_cast<std::int64_t>(m)
                                             : x0);
}

} // namespace

std::vector<std::uint32_t> solve_period_residue(const ResidueRecurrence& s) {
    const std::size_t k = s.order();
    if (k < 2)
        throw error(errc::order_too_small, "solver needs k >= 2");
    const std::uint32_t m = s.modulus();

    std::uint64_t sum = 0;
    for (std::size_t i = 2; i <= k; ++i)
        sum = (sum + static_cast<std::uint64_t>(s.coeffs()[i - 1]) *
                         s.init()[i - 2]) %
              m;
    const std::uint32_t b = static_cast<std::uint32_t>(
        (s.init()[k - 1] + static_cast<std::uint64_t>(m) - sum) % m);
    const std::uint32_t a = s.coeffs()[0];

    // a*x = b (mod m): solvable iff gcd(a, m) | b, then gcd(a, m) solutions.
    const std::uint64_t g = std::gcd<std::uint64_t>(a, m);
    if (b % g != 0)
        return {};
    const std::uint64_t m1 = m / g;
    const std::uint64_t x0 =
        (b / g) % m1 * modinv_u64(a / g % m1, m1) % m1;
    std::vector<std::uint32_t> out;
    out.reserve(static_cast<std::size_t>(g));
    for (std::uint64_t t = 0; t < g; ++t)
        out.push_back(static_cast<std::uint32_t>(x0 + t * m1));
    return out;
}

std::vector<std::uint64_t>
candidate_periods_via_residue(const ResidueRecurrence& s,
                              std::uint64_t bound) {
    const std::size_t k = s.order();
    const std::uint32_t m = s.modulus();
    std::vector<bool> in_solution(m, false);
    for (std::uint32_t v : solve_period_residue(s))
        in_solution[v] = true;

    std::vector<std::uint64_t> out;
    if (bound == 0)
        return out;
    if (bound > UINT64_MAX - k - 1)
        throw error(errc::bad_input, "bound too large");

    // Ring of the most recent k+1 residues, indexed by absolute position.
    std::vector<std::uint32_t> recent(k + 1);
    auto slot = [&](std::uint64_t pos) -> std::uint32_t& {
        return recent[pos % (k + 1)];
    };
    std::vector<std::uint32_t> window = s.init();
    for (std::size_t j = 0; j < k; ++j)
        slot(j + 1) = s.init()[j];
    for (std::uint64_t pos = k + 1; pos <= bound + k; ++pos) {
        const std::uint32_t next = step(s, window);
        shift_in(window, next);
        slot(pos) = next;

        const std::uint64_t ell = pos - k;
        if (!in_solution[slot(ell)])
            continue;
        bool period = true;
        for (std::size_t j = 1; j <= k && period; ++j)
            period = slot(ell + j) == s.init()[j - 1];
        if (period)
            out.push_back(ell);
    }
    return out;
}

SdCandidate sd_candidate(const Recurrence& r, std::uint64_t i, std::uint64_t j,
                         std::uint64_t h, std::uint64_t m) {
    if (i == 0 || j == 0 || h == 0)
        throw error(errc::index_out_of_domain, "indices start at 1");
    const std::uint64_t g = std::gcd(i, j);
    if (std::gcd(h, j) != 1)
        throw error(errc::coprimality_violation, "gcd(h, j) must be 1");
    const auto product = static_cast<unsigned __int128>(g) * h;
    if (product <= i)
        throw error(errc::nonpositive_t, "g*h must exceed i");
    if (product - i > UINT64_MAX)
        throw error(errc::bad_input, "candidate shift overflows");
    const std::uint64_t t = static_cast<std::uint64_t>(product - i);

    const ResidueRecurrence s = reduce(r, m);
    const bool verified = residue_term_fast(s, std::gcd(i + t, j)) ==
                          residue_term_fast(s, g);
    return SdCandidate{t, verified};
}

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

} // namespace

FamilyPeriod fibonacci_family_period(std::uint32_t q) {
    if (q % 2 == 0)
        throw error(errc::parity_error, "q must be odd");
    const std::uint64_t m = 5ull * q + 2;
    if (m > kMaxModulus)
        throw error(errc::modulus_too_large, "5q+2 exceeds 2^31 - 1");
    if (!is_prime_u64(m))
        throw error(errc::non_prime_modulus, "5q+2 must be prime");
    return FamilyPeriod{static_cast<std::uint32_t>(m), 2 * (5ull * q + 3)};
}

} // namespace linrec::period
