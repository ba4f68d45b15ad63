#include "linrec/gcdlib.hpp"

#include <numeric>

#include "linrec/errors.hpp"
#include "linrec/period.hpp"
#include "linrec/residue.hpp"

namespace linrec::gcdlib {

Bigint gcd(const Bigint& a, const Bigint& b) {
    Bigint g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

BezoutTriple extended_gcd(Bigint a, Bigint b) {
    Bigint r0 = std::move(a), r1 = std::move(b);
    Bigint x0(1), x1(0), y0(0), y1(1);
    Bigint q, t;
    while (r1 != 0) {
        q = r0 / r1; // truncated division, as in the schoolbook iteration
        t = r0 - q * r1; r0.swap(r1); r1.swap(t);
        t = x0 - q * x1; x0.swap(x1); x1.swap(t);
        t = y0 - q * y1; y0.swap(y1); y1.swap(t);
    }
    if (r0 < 0) {
        r0 = -r0;
        x0 = -x0;
        y0 = -y0;
    }
    return BezoutTriple{std::move(r0), std::move(x0), std::move(y0)};
}

Bigint multi_gcd(const std::vector<Bigint>& xs) {
    if (xs.empty())
        throw error(errc::arity_error, "multi_gcd needs at least one element");
    Bigint g = abs(xs.front());
    for (std::size_t i = 1; i < xs.size(); ++i)
        g = gcd(g, xs[i]);
    return g;
}

bool is_strong_divisibility(const Recurrence& r, std::size_t bound) {
    if (bound < 2)
        throw error(errc::bad_input, "bound must be >= 2");
    const std::vector<Bigint> terms = term_block(r, 1, bound);
    for (std::size_t m = 1; m <= bound; ++m)
        for (std::size_t n = m; n <= bound; ++n)
            if (gcd(terms[m - 1], terms[n - 1]) !=
                terms[std::gcd(m, n) - 1])
                return false;
    return true;
}

Bigint cramer_delta(const IntMatrix& a, const std::vector<Bigint>& y,
                    std::size_t i) {
    if (a.rows() != a.cols())
        throw error(errc::shape_error, "matrix must be square");
    if (y.size() != a.rows())
        throw error(errc::shape_error, "vector length does not match");
    if (i < 1 || i > a.cols())
        throw error(errc::shape_error, "column index out of range");
    IntMatrix replaced = a;
    for (std::size_t row = 0; row < a.rows(); ++row)
        replaced.at(row, i - 1) = y[row];
    return det(replaced);
}

bool unimodular_preserves_gcd(const IntMatrix& a,
                              const std::vector<Bigint>& xs) {
    const std::size_t n = a.rows();
    if (a.cols() != n || n < 2)
        throw error(errc::shape_error, "matrix must be square with n >= 2");
    if (xs.size() != n)
        throw error(errc::shape_error, "input length does not match");
    for (const Bigint& x : xs)
        if (x <= 0)
            throw error(errc::hypothesis_not_met, "inputs must be positive");

    const std::vector<Bigint> y = a * xs;
    for (const Bigint& v : y)
        if (v <= 0)
            throw error(errc::hypothesis_not_met,
                        "transformed values must be positive");

    const Bigint d = det(a);
    if (d == 0)
        throw error(errc::singular_matrix, "determinant is zero");
    if (d != 1 && d != -1) {
        for (std::size_t i = 1; i <= n; ++i)
            if (!mpz_divisible_p(cramer_delta(a, y, i).get_mpz_t(),
                                 d.get_mpz_t()))
                throw error(errc::hypothesis_not_met,
                            "det does not divide every replaced determinant");
    }

    return multi_gcd(y) == multi_gcd(xs);
}

namespace {

// w with x*a_i + y*a_j = w*gcd(a_i, a_j), where (x, y) is the Bezout pair
// of (a_{i+shift}, a_j). Exact by the divisibility of linear combinations.
Bigint witness_value(const Recurrence& r, std::uint64_t i, std::uint64_t j,
                     std::uint64_t shift) {
    const Bigint a_shifted = term(r, i + shift);
    const Bigint a_i = term(r, i);
    const Bigint a_j = term(r, j);
    const BezoutTriple bz = extended_gcd(a_shifted, a_j);
    const Bigint g = gcd(a_i, a_j);
    if (g == 0)
        throw error(errc::invariant_violation,
                    "gcd of terms is zero; witness undefined");
    const Bigint num = bz.x * a_i + bz.y * a_j;
    if (!mpz_divisible_p(num.get_mpz_t(), g.get_mpz_t()))
        throw error(errc::invariant_violation,
                    "witness division is inexact");
    Bigint w;
    mpz_divexact(w.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
    return w;
}

void require_period(const ResidueRecurrence& s, std::uint64_t shift) {
    if (shift == 0 || !period::is_period(s, shift))
        throw error(errc::invalid_period,
                    "shift is not a period of the reduced sequence");
}

} // namespace

Witness period_shift_witness(const Recurrence& r, std::uint64_t i,
                             std::uint64_t j, std::uint64_t m,
                             std::uint64_t shift) {
    if (i == 0 || j == 0)
        throw error(errc::index_out_of_domain, "indices start at 1");
    const ResidueRecurrence s = reduce(r, m);
    require_period(s, shift);

    const Bigint w = witness_value(r, i, j, shift);
    const std::uint32_t lhs = residue_term_fast(s, std::gcd(i + shift, j));
    const std::uint32_t rhs =
        mulmod(mod_u32(w, s.modulus()),
               residue_term_fast(s, std::gcd(i, j)), s.modulus());
    if (lhs != rhs)
        throw error(errc::invariant_violation,
                    "witness residues differ");
    return Witness{w, lhs, rhs, shift};
}

ScalingWitness index_scaling_witness(const Recurrence& r, std::uint64_t i,
                                     std::uint64_t j, std::uint64_t m,
                                     std::uint64_t shift) {
    if (i == 0 || j == 0)
        throw error(errc::index_out_of_domain, "indices start at 1");
    const ResidueRecurrence s = reduce(r, m);
    require_period(s, shift);

    // Decompose: (i+shift, j) = x(i+shift) + yj and x*i + y*j = z*(i, j).
    const BezoutTriple bz =
        extended_gcd(Bigint(i) + Bigint(shift), Bigint(j));
    const std::uint64_t g0 = std::gcd(i, j);
    const Bigint num = bz.x * Bigint(i) + bz.y * Bigint(j);
    Bigint z;
    mpz_divexact_ui(z.get_mpz_t(), num.get_mpz_t(), g0);
    if (z <= 0)
        return ScalingWitness{std::move(z), std::nullopt};

    const Bigint w = witness_value(r, i, j, shift);
    const Bigint scaled_index = z * g0;
    if (!fits_int64(scaled_index))
        throw error(errc::invariant_violation, "scaled index overflows");
    const std::uint32_t lhs =
        residue_term_fast(s, static_cast<std::uint64_t>(to_int64(scaled_index)));
    const std::uint32_t rhs =
        mulmod(mod_u32(w, s.modulus()), residue_term_fast(s, g0), s.modulus());
    if (lhs != rhs)
        throw error(errc::invariant_violation, "witness residues differ");
    return ScalingWitness{std::move(z), Witness{w, lhs, rhs, shift}};
}

} // namespace linrec::gcdlib
