#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsc/prng.hpp"
#include "qsc/qobjects.hpp"
#include "qsc/ratfunc.hpp"
#include "qsc/statements.hpp"

using namespace qsc;

namespace {

Poly from_ints(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("q_integer") {
    CHECK(q_integer(1) == Poly(Rational(1)));
    CHECK(q_integer(3) == from_ints({1, 1, 1}));
    CHECK(q_integer(5) == from_ints({1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(q_integer(0), std::domain_error);
}

TEST_CASE("mobius") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(30) == -1);
    CHECK(mobius(12) == 0);
}

TEST_CASE("cyclotomic basics") {
    CHECK(cyclotomic(1) == from_ints({-1, 1}));
    CHECK(cyclotomic(2) == from_ints({1, 1}));
    CHECK(cyclotomic(3) == from_ints({1, 1, 1}));
    // Phi_6 by dividing q^6-1 by Phi_1 Phi_2 Phi_3
    Poly q6m1 = from_ints({-1, 0, 0, 0, 0, 0, 1});
    Poly expected = poly_div_exact(q6m1, cyclotomic(1) * cyclotomic(2) * cyclotomic(3));
    CHECK(expected == from_ints({1, -1, 1}));
    CHECK(cyclotomic(6) == expected);
}

TEST_CASE("cyclotomic product law up to 60") {
    for (int n = 1; n <= 60; ++n) {
        Poly prod{Rational(1)};
        for (int d : divisors_of(n)) prod *= cyclotomic(d);
        std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
        c[0] = Rational(-1);
        c.back() = Rational(1);
        CHECK(prod == Poly(std::move(c)));
    }
}

TEST_CASE("q_integer as cyclotomic product for odd n") {
    for (int n = 1; n <= 45; n += 2) {
        Poly prod{Rational(1)};
        for (int d : divisors_of(n)) {
            if (d > 1) prod *= cyclotomic(d);
        }
        CHECK(prod == q_integer(n));
    }
}

TEST_CASE("cyclotomics pairwise coprime") {
    for (int m = 1; m <= 30; ++m) {
        for (int n = m + 1; n <= 30; ++n) {
            CHECK(poly_gcd(cyclotomic(m), cyclotomic(n)).is_constant());
        }
    }
}

TEST_CASE("q_shifted_factorial") {
    QMonomial any{make_rational(7, 3), 5};
    CHECK(q_shifted_factorial(any, 2, 0) == LaurentPoly(1L));

    // (q;q^2)_2 = (1-q)(1-q^3)
    LaurentPoly got = q_shifted_factorial(qpow(1), 2, 2);
    CHECK(got == LaurentPoly(from_ints({1, -1}) * from_ints({1, 0, 0, -1})));

    // (q^(-1);q^2)_2 = (1-q^(-1))(1-q)
    LaurentPoly laurent = q_shifted_factorial(qpow(-1), 2, 2);
    LaurentPoly expected = (LaurentPoly(1L) - LaurentPoly::monomial(Rational(1), -1)) *
                           LaurentPoly(from_ints({1, -1}));
    CHECK(laurent == expected);
    CHECK(laurent.offset() == -1);

    // zero coefficient encodes a vanished parameter: empty product
    CHECK(q_shifted_factorial(QMonomial{Rational(0), 3}, 2, 5) == LaurentPoly(1L));
}

TEST_CASE("q_shifted_factorial recurrence randomized") {
    SplitMix64 rng(31337);
    const auto& pool = sample_pool();
    for (int iter = 0; iter < 25; ++iter) {
        QMonomial x{pool[static_cast<size_t>(rng.below(pool.size()))],
                    static_cast<long long>(rng.below(7)) - 3};
        int step = 1 + static_cast<int>(rng.below(3));
        int k = static_cast<int>(rng.below(21));
        LaurentPoly lhs = q_shifted_factorial(x, step, k + 1);
        LaurentPoly rhs = q_shifted_factorial(x, step, k) *
                          (LaurentPoly(1L) -
                           LaurentPoly::monomial(x.coef, x.qexp + static_cast<long long>(step) * k));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("q_binomial") {
    CHECK(q_binomial(2, 1) == from_ints({1, 1}));
    CHECK(q_binomial(7, 0) == Poly(Rational(1)));
    CHECK(q_binomial(4, 2) == from_ints({1, 1, 2, 1, 1}));
    CHECK_THROWS_AS(q_binomial(2, 3), std::domain_error);

    // Pascal-type recurrence binq(t,s) = binq(t-1,s-1) + q^s binq(t-1,s)
    for (int t = 1; t <= 12; ++t) {
        for (int s = 1; s < t; ++s) {
            CHECK(q_binomial(t, s) ==
                  q_binomial(t - 1, s - 1) + Poly::monomial(Rational(1), s) * q_binomial(t - 1, s));
        }
    }
}

TEST_CASE("(q;q^2)_t/(q^2;q^2)_t = binq(2t,t)/(-q;q)_t^2 up to 30") {
    for (int t = 0; t <= 30; ++t) {
        RatFunc lhs = ratfunc_reduce(q_shifted_factorial(qpow(1), 2, t),
                                     q_shifted_factorial(qpow(2), 2, t));
        LaurentPoly den = q_shifted_factorial(qmon(Rational(-1), 1), 1, t);
        den *= den;
        RatFunc rhs = ratfunc_reduce(LaurentPoly(q_binomial(2 * t, t)), den);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("assemble_modulus layouts") {
    FactoredModulus m3 = assemble_modulus(3, 3);
    REQUIRE(m3.cyclotomic_factors.size() == 1);
    CHECK(m3.cyclotomic_factors[0] == std::make_pair(3, 4));
    CHECK(m3.extra_factors.empty());

    FactoredModulus m9 = assemble_modulus(9, 3);
    REQUIRE(m9.cyclotomic_factors.size() == 2);
    CHECK(m9.cyclotomic_factors[0] == std::make_pair(3, 1));
    CHECK(m9.cyclotomic_factors[1] == std::make_pair(9, 4));

    FactoredModulus m15 = assemble_modulus(15, 3);
    REQUIRE(m15.cyclotomic_factors.size() == 3);
    CHECK(m15.cyclotomic_factors[0] == std::make_pair(3, 1));
    CHECK(m15.cyclotomic_factors[1] == std::make_pair(5, 1));
    CHECK(m15.cyclotomic_factors[2] == std::make_pair(15, 4));

    // Phi_1 never appears, n = 1 gives the empty modulus
    CHECK(assemble_modulus(1, 3).empty());
    CHECK_THROWS_AS(assemble_modulus(4, 3), std::domain_error);

    FactoredModulus with_extra =
        assemble_modulus(3, 1, {Poly(Rational(1)) - Poly::monomial(Rational(2), 3)});
    CHECK(with_extra.extra_factors.size() == 1);

    // an extra factor sharing a root with a cyclotomic factor is a degeneracy
    CHECK_THROWS_AS(assemble_modulus(3, 1, {cyclotomic(3)}), degeneracy_error);
    CHECK_THROWS_AS(
        make_modulus({}, {Poly(Rational(2)) - Poly::monomial(Rational(1), 3),
                          Poly(Rational(2)) - Poly::monomial(Rational(1), 3)}),
        degeneracy_error);
}

TEST_CASE("modulus product and str") {
    FactoredModulus m = assemble_modulus(9, 1);
    CHECK(m.product() == cyclotomic(3) * cyclotomic(9) * cyclotomic(9));
    CHECK(m.str() == "Phi_3 * Phi_9^2");
    CHECK(modulus_q_integer(15).product() == q_integer(15));
}
