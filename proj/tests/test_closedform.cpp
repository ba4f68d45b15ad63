#include <doctest.h>

#include <random>

#include "linrec/closedform.hpp"
#include "linrec/errors.hpp"
#include "linrec/gcdlib.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace linrec;
using namespace linrec::closedform;
using testutil::error_code;

TEST_CASE("coeff_table") {
    const CoeffTable fib = coeff_table(Recurrence::fibonacci());
    CHECK(fib.values == std::vector<Bigint>{1, 1});

    const CoeffTable k3 = coeff_table(Recurrence(
        {Bigint(1), Bigint(2), Bigint(3)}, {Bigint(1), Bigint(1), Bigint(1)}));
    CHECK(k3.values == std::vector<Bigint>{1, 3, 11});

    const CoeffTable k1 = coeff_table(Recurrence({Bigint(5)}, {Bigint(2)}));
    CHECK(k1.values == std::vector<Bigint>{1});
}

TEST_CASE("expand_term: worked examples") {
    const Recurrence fib = Recurrence::fibonacci();
    CHECK(expand_term(fib, 1) == 2);
    CHECK(expand_term(fib, 2) == 3);

    const Recurrence r({Bigint(1), Bigint(0), Bigint(1)},
                       {Bigint(1), Bigint(2), Bigint(3)});
    CHECK(expand_term(r, 3) == term(r, 6));

    CHECK(error_code([&] { expand_term(fib, 0); }) == errc::range_error);
    CHECK(error_code([&] { expand_term(fib, 3); }) == errc::range_error);
}

TEST_CASE("expand_term_grouped: worked examples") {
    const Recurrence fib = Recurrence::fibonacci();
    CHECK(expand_term_grouped(fib, 1) == 2);

    const Recurrence zero({Bigint(1), Bigint(1)}, {Bigint(0), Bigint(0)});
    CHECK(expand_term_grouped(zero, 1) == 0);

    CHECK(error_code([&] { expand_term_grouped(fib, 2); }) ==
          errc::range_error);
    CHECK(error_code([] {
              expand_term_grouped(Recurrence({Bigint(3)}, {Bigint(1)}), 1);
          }) == errc::range_error);
}

TEST_CASE("both expansions equal direct iteration") {
    std::mt19937_64 rng(60601);
    for (int trial = 0; trial < 60; ++trial) {
        const Recurrence r = testutil::random_recurrence(rng, 2, 5, 3, 5);
        const std::size_t k = r.order();
        for (std::size_t i = 1; i <= k; ++i) {
            const Bigint direct = term(r, k + i);
            CHECK(expand_term(r, i) == direct);
            if (i < k)
                CHECK(expand_term_grouped(r, i) == direct);
        }
    }
}

TEST_CASE("advance_matrix: Fibonacci") {
    const IntMatrix m2 = advance_matrix(Recurrence::fibonacci());
    CHECK(m2 == IntMatrix(2, 2, {Bigint(1), Bigint(1), Bigint(1), Bigint(2)}));
    CHECK(det(m2) == 1);
    CHECK(error_code([] {
              advance_matrix(Recurrence({Bigint(2)}, {Bigint(1)}));
          }) == errc::order_too_small);
}

TEST_CASE("advance_matrix equals the companion power and advances blocks") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        const Recurrence r = testutil::random_recurrence(rng, 2, 5, 3, 5);
        const std::size_t k = r.order();
        const IntMatrix mk = advance_matrix(r);
        CHECK(mk == companion_matrix(r).pow(k));

        // (a_{k+1}, ..., a_{2k}) = M * (a_1, ..., a_k), and again for
        // re-initializations of the same coefficients
        for (int reinit = 0; reinit < 20; ++reinit) {
            std::vector<Bigint> init;
            for (std::size_t i = 0; i < k; ++i)
                init.emplace_back(testutil::rand_in(rng, -5, 5));
            const Recurrence rr(r.coeffs(), init);
            CHECK(mk * init == term_block(rr, k + 1, k));
            // depends only on the coefficients
            CHECK(advance_matrix(rr) == mk);
        }
    }
}

TEST_CASE("det: worked examples and oracle agreement") {
    CHECK(det(IntMatrix::identity(3)) == 1);
    CHECK(det(IntMatrix(2, 2, {Bigint(1), Bigint(1), Bigint(1), Bigint(2)})) ==
          1);
    const IntMatrix repeated(
        2, 2, {Bigint(3), Bigint(-4), Bigint(3), Bigint(-4)});
    CHECK(det(repeated) == 0);
    CHECK(error_code([] { det(IntMatrix(2, 3)); }) == errc::shape_error);

    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        IntMatrix a(n, n);
        std::vector<std::vector<mpz_class>> rows(n,
                                                 std::vector<mpz_class>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const long v = testutil::rand_in(rng, -9, 9);
                a.at(i, j) = v;
                rows[i][j] = v;
            }
        CHECK(det(a) == oracles::det(rows));
    }
}

TEST_CASE("det of matrix powers is the power of det") {
    const IntMatrix m2 = advance_matrix(Recurrence::fibonacci());
    Bigint expected(1);
    for (std::uint64_t n = 1; n <= 6; ++n) {
        expected *= det(m2);
        CHECK(det(m2.pow(n)) == expected);
    }
}

TEST_CASE("gcd_block_check") {
    CHECK(gcd_block_check(Recurrence::fibonacci(), 8));

    // gcd(a_1, a_2) = 1 != 2 = a_1, so not strong divisibility
    const Recurrence not_sd({Bigint(1), Bigint(1)}, {Bigint(2), Bigint(3)});
    CHECK(error_code([&] { gcd_block_check(not_sd, 8); }) ==
          errc::hypothesis_not_met);

    CHECK(error_code([] {
              gcd_block_check(Recurrence::fibonacci(), 3);
          }) == errc::bad_input); // bound below 2k
    CHECK(error_code([] {
              gcd_block_check(Recurrence({Bigint(2)}, {Bigint(1)}), 8);
          }) == errc::order_too_small);
}
