#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsc/prng.hpp"
#include "qsc/series.hpp"
#include "qsc/statements.hpp"

using namespace qsc;

namespace {

Rational draw(SplitMix64& rng) {
    const auto& pool = sample_pool();
    return pool[static_cast<size_t>(rng.below(pool.size()))];
}

}  // namespace

TEST_CASE("phi_series truncation 0 is 1") {
    SeriesSpec spec;
    spec.upper_params = {qmon(make_rational(7, 3), 2)};
    spec.lower_params = {qmon(Rational(5), 0)};
    spec.base_step = 2;
    spec.argument = qpow(1);
    spec.truncation = 0;
    CHECK(phi_series(spec).is_one());
}

TEST_CASE("2phi1 with q^(-2) upper terminates against Pochhammer ratio") {
    // 2phi1[q^(-2), b; c; q, cq^2/b] = (c/b;q)_2/(c;q)_2 with b = 3, c = 5
    Rational b(3), c(5);
    SeriesSpec spec;
    spec.upper_params = {qpow(-2), qmon(b)};
    spec.lower_params = {qmon(c)};
    spec.base_step = 1;
    spec.argument = qmon(c / b, 2);
    spec.truncation = 2;
    RatFunc direct = ratfunc_reduce(q_shifted_factorial(qmon(c / b), 1, 2),
                                    q_shifted_factorial(qmon(c), 1, 2));
    CHECK(phi_series(spec) == direct);
}

TEST_CASE("degeneracy: vanishing lower-parameter factor") {
    SeriesSpec spec;
    spec.upper_params = {qmon(Rational(2), 0)};
    spec.lower_params = {qpow(-2)};  // (q^(-2); q)_k vanishes at j = 2
    spec.base_step = 1;
    spec.argument = qpow(1);
    spec.truncation = 4;
    CHECK_THROWS_AS(phi_series(spec), degeneracy_error);
}

TEST_CASE("compensating factor enters for r <= s") {
    // 1phi1[b; c; q, z]: term k carries (-1)^k q^binom(k,2); truncation 1: 1 + (1-b)/((1-q)(1-c)) * (-z)
    Rational b(2), c(3), z(5);
    SeriesSpec spec;
    spec.upper_params = {qmon(b)};
    spec.lower_params = {qmon(c)};
    spec.base_step = 1;
    spec.argument = qmon(z);
    spec.truncation = 1;
    RatFunc got = phi_series(spec);
    Poly den = (Poly(Rational(1)) - Poly::variable()) * Poly(Rational(1) - c);
    RatFunc expected = RatFunc(1L) + RatFunc(Poly(Rational(-z) * (Rational(1) - b)), den);
    CHECK(got == expected);
}

TEST_CASE("q-Chu-Vandermonde oracle") {
    SplitMix64 rng(2024);
    for (int n = 1; n <= 6; ++n) {
        for (int t = 0; t < 10; ++t) {
            Rational b = draw(rng), c = draw(rng);
            CAPTURE(n);
            CAPTURE(b.get_str());
            CAPTURE(c.get_str());
            CHECK(chu_vandermonde_lhs(n, b, c) == chu_vandermonde_rhs(n, b, c));
        }
    }
}

TEST_CASE("Whipple 4phi3 oracle") {
    SplitMix64 rng(2025);
    for (int n = 1; n <= 6; ++n) {
        for (int t = 0; t < 10; ++t) {
            Rational b = draw(rng), c = draw(rng);
            CAPTURE(n);
            CAPTURE(b.get_str());
            CAPTURE(c.get_str());
            CHECK(whipple_lhs(n, b, c) == whipple_rhs(n, b, c));
        }
    }
}

TEST_CASE("Watson 8phi7 transformation oracle") {
    SplitMix64 rng(2026);
    for (int n = 1; n <= 4; ++n) {
        for (int t = 0; t < 6; ++t) {
            Rational g = draw(rng), b = draw(rng), c = draw(rng), d = draw(rng), e = draw(rng);
            CAPTURE(n);
            CHECK(watson_lhs(n, g, b, c, d, e) == watson_rhs(n, g, b, c, d, e));
        }
    }
}

TEST_CASE("Watson at n = 2 with pinned rational parameters") {
    // a = 4 (g = 2), b = 3, c = 5, d = 1/2, e = 7/3
    Rational g(2), b(3), c(5);
    Rational d = make_rational(1, 2), e = make_rational(7, 3);
    CHECK(watson_lhs(2, g, b, c, d, e) == watson_rhs(2, g, b, c, d, e));
}

TEST_CASE("q_hyper_sum matches a literal term loop") {
    // sum_{k=0}^{3} [4k+1] (q;q^2)_k^2 / (q^2;q^2)_k^2 * (1/2)^k q^(2k)
    SumSpec spec;
    spec.upper = {{qpow(1), 2}, {qpow(1), 2}};
    spec.lower = {{qpow(2), 2}, {qpow(2), 2}};
    spec.arg_coef = make_rational(1, 2);
    spec.arg_lin = 2;
    spec.bracket_4k1 = true;
    RatFunc got = q_hyper_sum(spec, 3);

    RatFunc expected;
    for (int k = 0; k <= 3; ++k) {
        LaurentPoly num = q_shifted_factorial(qpow(1), 2, k);
        num *= num;
        num *= LaurentPoly(q_integer(4 * k + 1));
        num *= LaurentPoly::monomial(rational_pow(make_rational(1, 2), k), 2 * k);
        LaurentPoly den = q_shifted_factorial(qpow(2), 2, k);
        den *= den;
        expected += ratfunc_reduce(num, den);
    }
    CHECK(got == expected);
}

TEST_CASE("q_hyper_sum quadratic argument exponents") {
    // sum q^(-k^2) (q;q^2)_k / (q^2;q^2)_k, M = 4, against the literal loop
    SumSpec spec;
    spec.upper = {{qpow(1), 2}};
    spec.lower = {{qpow(2), 2}};
    spec.arg_quad = -1;
    RatFunc got = q_hyper_sum(spec, 4);

    RatFunc expected;
    for (int k = 0; k <= 4; ++k) {
        LaurentPoly num = q_shifted_factorial(qpow(1), 2, k);
        num *= LaurentPoly::monomial(Rational(1), -static_cast<long long>(k) * k);
        expected += ratfunc_reduce(num, q_shifted_factorial(qpow(2), 2, k));
    }
    CHECK(got == expected);
}

TEST_CASE("q_hyper_sum rejects vanishing lower factors") {
    SumSpec spec;
    spec.upper = {{qpow(1), 2}};
    spec.lower = {{qmon(Rational(1), 0), 2}};  // (1;q^2)_k = 0 for k >= 1
    CHECK_THROWS_AS(q_hyper_sum(spec, 2), degeneracy_error);
}
