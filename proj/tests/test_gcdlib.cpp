#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "linrec/errors.hpp"
#include "linrec/gcdlib.hpp"
#include "linrec/period.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace linrec;
using namespace linrec::gcdlib;
using testutil::error_code;

TEST_CASE("gcd") {
    CHECK(gcd(Bigint(144), Bigint(2584)) == 8); // gcd(F_12, F_18) = F_6
    CHECK(gcd(Bigint(0), Bigint(7)) == 7);
    CHECK(gcd(Bigint(-6), Bigint(4)) == 2);
    CHECK(gcd(Bigint(0), Bigint(0)) == 0);
}

TEST_CASE("extended_gcd: canonical Bezout pairs") {
    const BezoutTriple t = extended_gcd(Bigint(23), Bigint(8));
    CHECK(t.g == 1);
    CHECK(t.x == -1);
    CHECK(t.y == 3);

    const BezoutTriple za = extended_gcd(Bigint(-5), Bigint(0));
    CHECK(za.g == 5);
    CHECK(za.x == -1);
    CHECK(za.y == 0);

    // the family pair h = 15q+8, j = 5q+3 at q = 1: 3j - h = 1
    const BezoutTriple fam = extended_gcd(Bigint(23), Bigint(8));
    CHECK(fam.g == 1);

    std::mt19937_64 rng(321);
    for (int trial = 0; trial < 10000; ++trial) {
        const Bigint a(testutil::rand_in(rng, -1000000000L, 1000000000L));
        const Bigint b(testutil::rand_in(rng, -1000000000L, 1000000000L));
        const BezoutTriple bz = extended_gcd(a, b);
        CHECK(bz.x * a + bz.y * b == bz.g);
        CHECK(bz.g == gcd(a, b));
        if (bz.g != 0) {
            CHECK(a % bz.g == 0);
            CHECK(b % bz.g == 0);
        }
    }
}

TEST_CASE("multi_gcd") {
    CHECK(multi_gcd({Bigint(8), Bigint(34), Bigint(144)}) == 2);
    CHECK(multi_gcd({Bigint(-9)}) == 9);
    CHECK(multi_gcd({Bigint(0), Bigint(0), Bigint(5)}) == 5);
    CHECK(error_code([] { multi_gcd({}); }) == errc::arity_error);

    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Bigint> xs;
        const int n = 2 + static_cast<int>(rng() % 5);
        for (int i = 0; i < n; ++i)
            xs.emplace_back(testutil::rand_in(rng, -5000, 5000));
        std::vector<Bigint> shuffled = xs;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(multi_gcd(xs) == multi_gcd(shuffled));
    }
}

TEST_CASE("strong divisibility") {
    CHECK(is_strong_divisibility(Recurrence::fibonacci(), 60));
    CHECK_FALSE(
        is_strong_divisibility(Recurrence({Bigint(2)}, {Bigint(1)}), 6));
    // all-ones sequence: a_{n+2} = a_{n+1}
    CHECK(is_strong_divisibility(
        Recurrence({Bigint(0), Bigint(1)}, {Bigint(1), Bigint(1)}), 12));
    CHECK(error_code([] {
              is_strong_divisibility(Recurrence::fibonacci(), 1);
          }) == errc::bad_input);
}

TEST_CASE("gcd(F_m, F_n) = F_gcd(m,n) for m, n <= 60") {
    const std::vector<Bigint> fibs = term_block(Recurrence::fibonacci(), 1, 60);
    for (std::size_t m = 1; m <= 60; ++m)
        for (std::size_t n = m; n <= 60; ++n)
            CHECK(gcd(fibs[m - 1], fibs[n - 1]) == fibs[std::gcd(m, n) - 1]);
}

TEST_CASE("cramer_delta") {
    CHECK(cramer_delta(IntMatrix::identity(2), {Bigint(3), Bigint(5)}, 1) == 3);

    const IntMatrix a(2, 2, {Bigint(2), Bigint(1), Bigint(1), Bigint(1)});
    const std::vector<Bigint> y = a * std::vector<Bigint>{Bigint(4), Bigint(6)};
    CHECK(y == std::vector<Bigint>{14, 10});
    CHECK(cramer_delta(a, y, 1) == 4); // det(A) * x_1

    CHECK(error_code([&] { cramer_delta(a, y, 3); }) == errc::shape_error);
    CHECK(error_code([&] { cramer_delta(a, {Bigint(1)}, 1); }) ==
          errc::shape_error);
}

TEST_CASE("unimodular maps preserve the gcd") {
    const IntMatrix a(2, 2, {Bigint(2), Bigint(1), Bigint(1), Bigint(1)});
    CHECK(unimodular_preserves_gcd(a, {Bigint(4), Bigint(6)}));
    CHECK(unimodular_preserves_gcd(IntMatrix::identity(3),
                                   {Bigint(6), Bigint(10), Bigint(15)}));

    std::mt19937_64 rng(90210);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        const IntMatrix u = testutil::random_unimodular(
            rng, n, static_cast<int>(1 + rng() % 20));
        const Bigint d = det(u);
        CHECK((d == 1 || d == -1));
        const std::vector<Bigint> xs =
            testutil::random_positive_vector(rng, n, 50);
        CHECK(unimodular_preserves_gcd(u, xs));

        // Cramer consistency: det(A) * x_i = Delta_i(A)
        const std::vector<Bigint> y = u * xs;
        for (std::size_t i = 1; i <= n; ++i)
            CHECK(d * xs[i - 1] == cramer_delta(u, y, i));
    }
}

TEST_CASE("unimodular_preserves_gcd: error channels") {
    const IntMatrix singular(2, 2, {Bigint(1), Bigint(2), Bigint(2), Bigint(4)});
    CHECK(error_code([&] {
              unimodular_preserves_gcd(singular, {Bigint(1), Bigint(1)});
          }) == errc::singular_matrix);

    const IntMatrix id = IntMatrix::identity(2);
    CHECK(error_code([&] {
              unimodular_preserves_gcd(id, {Bigint(0), Bigint(1)});
          }) == errc::hypothesis_not_met);
    CHECK(error_code([&] {
              unimodular_preserves_gcd(id, {Bigint(1)});
          }) == errc::shape_error);
    const IntMatrix neg(2, 2, {Bigint(1), Bigint(0), Bigint(0), Bigint(-1)});
    CHECK(error_code([&] {
              unimodular_preserves_gcd(neg, {Bigint(1), Bigint(1)});
          }) == errc::hypothesis_not_met); // y_2 < 0

    // det = 2 with the divisibility extension satisfied: accepted, no throw
    const IntMatrix diag(2, 2, {Bigint(2), Bigint(0), Bigint(0), Bigint(1)});
    CHECK_NOTHROW(unimodular_preserves_gcd(diag, {Bigint(1), Bigint(1)}));
}

TEST_CASE("period shift witness on Fibonacci") {
    const Recurrence fib = Recurrence::fibonacci();

    const Witness w = period_shift_witness(fib, 3, 4, 7, 16);
    CHECK(w.lhs_residue == w.rhs_residue);
    CHECK(w.shift == 16);

    const Witness diag = period_shift_witness(fib, 5, 5, 7, 16);
    CHECK(diag.lhs_residue == diag.rhs_residue);

    const Witness ones = period_shift_witness(fib, 1, 1, 7, 16);
    CHECK(ones.lhs_residue == ones.rhs_residue);

    CHECK(error_code([&] { period_shift_witness(fib, 3, 4, 7, 5); }) ==
          errc::invalid_period);
    CHECK(error_code([&] { period_shift_witness(fib, 0, 4, 7, 16); }) ==
          errc::index_out_of_domain);
}

TEST_CASE("index scaling witness on Fibonacci") {
    const Recurrence fib = Recurrence::fibonacci();

    const ScalingWitness sw = index_scaling_witness(fib, 3, 4, 7, 16);
    CHECK(sw.z == 17); // Bezout pair of (19, 4) is (-1, 5)
    REQUIRE(sw.witness.has_value());
    CHECK(sw.witness->lhs_residue == sw.witness->rhs_residue);

    // Bezout pair of (18, 17) is (1, -1): z = (2 - 17)/1 = -15, deferred
    const ScalingWitness neg = index_scaling_witness(fib, 2, 17, 7, 16);
    CHECK(neg.z == -15);
    CHECK_FALSE(neg.witness.has_value());

    const ScalingWitness triv = index_scaling_witness(fib, 1, 1, 7, 16);
    CHECK(triv.z > 0);
    REQUIRE(triv.witness.has_value());
    CHECK(triv.witness->lhs_residue == triv.witness->rhs_residue);

    CHECK(error_code([&] { index_scaling_witness(fib, 3, 4, 7, 10); }) ==
          errc::invalid_period);
}

TEST_CASE("witnesses verify across small indices and moduli") {
    const Recurrence fib = Recurrence::fibonacci();
    for (std::uint64_t m : {2, 5, 11, 30}) {
        const auto fund =
            period::fundamental_period(reduce(fib, m));
        REQUIRE(fund.has_value());
        for (std::uint64_t i = 1; i <= 6; ++i)
            for (std::uint64_t j = 1; j <= 6; ++j) {
                const Witness w = period_shift_witness(fib, i, j, m, *fund);
                CHECK(w.lhs_residue == w.rhs_residue);
                const ScalingWitness sw =
                    index_scaling_witness(fib, i, j, m, *fund);
                if (sw.z > 0) {
                    REQUIRE(sw.witness.has_value());
                    CHECK(sw.witness->lhs_residue == sw.witness->rhs_residue);
                }
            }
    }
}
