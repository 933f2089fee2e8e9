#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsc/congruence.hpp"
#include "qsc/prng.hpp"

using namespace qsc;

namespace {

Poly from_ints(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

// Brute-force construction of both sides of the fourth-power congruence at
// n = 3, straight from the definitions (independent of the statement builders).
RatFunc brute_force_guo_c_lhs(int M) {
    RatFunc acc;
    for (int k = 0; k <= M; ++k) {
        LaurentPoly num(q_integer(4 * k + 1));
        LaurentPoly den(1L);
        for (int j = 0; j < k; ++j) {
            Poly top = Poly(Rational(1)) - Poly::monomial(Rational(1), 2 * j + 1);
            Poly bottom = Poly(Rational(1)) - Poly::monomial(Rational(1), 2 * j + 2);
            for (int rep = 0; rep < 4; ++rep) {
                num *= LaurentPoly(top);
                den *= LaurentPoly(bottom);
            }
        }
        acc += ratfunc_reduce(num, den);
    }
    return acc;
}

RatFunc brute_force_guo_c_rhs(int n) {
    // [n] q^((1-n)/2) + [n]^3 q^((1-n)/2) (n^2-1)(1-q)^2/24
    Poly nn = q_integer(n);
    Rational scal = make_rational(static_cast<long>(n) * n - 1, 24);
    Poly body = nn + scal * (nn * nn * nn * (Poly(Rational(1)) - Poly::variable()) *
                             (Poly(Rational(1)) - Poly::variable()));
    return ratfunc_reduce(LaurentPoly(body, (1 - n) / 2), LaurentPoly(1L));
}

}  // namespace

TEST_CASE("check_congruence explicit factor") {
    // D = Phi_3^4 / (1+q) passes mod [3]Phi_3^3
    RatFunc d1(poly_pow(cyclotomic(3), 4), from_ints({1, 1}));
    CongruenceReport r1 = check_congruence(d1, assemble_modulus(3, 3));
    CHECK(r1.pass);
    CHECK(r1.denominator_coprime);
    REQUIRE(r1.per_factor.size() == 1);
    CHECK(r1.per_factor[0].required == 4);
    CHECK(r1.per_factor[0].achieved == 4);

    // D = Phi_3^3 fails: achieved 3 < required 4
    RatFunc d2(poly_pow(cyclotomic(3), 3), Poly(Rational(1)));
    CongruenceReport r2 = check_congruence(d2, assemble_modulus(3, 3));
    CHECK_FALSE(r2.pass);
    CHECK(r2.per_factor[0].achieved == 3);

    // denominator sharing a factor is reported, not raised
    RatFunc d3(Poly(Rational(1)), cyclotomic(3));
    CongruenceReport r3 = check_congruence(d3, assemble_modulus(3, 3));
    CHECK_FALSE(r3.pass);
    CHECK_FALSE(r3.denominator_coprime);
    CHECK(r3.per_factor[0].den_valuation == 1);
}

TEST_CASE("check_congruence zero difference passes any modulus") {
    CHECK(check_congruence(RatFunc(), assemble_modulus(15, 3)).pass);
    CHECK(check_congruence(RatFunc(), modulus_q_integer(9)).pass);
    CHECK(check_congruence(RatFunc(), FactoredModulus{}).pass);
}

TEST_CASE("check_congruence full-product multiples pass randomized") {
    SplitMix64 rng(777);
    FactoredModulus mod = assemble_modulus(9, 2, {from_ints({3, 0, 0, -1})});  // extra factor 3 - q^3
    Poly full = mod.product();
    for (int iter = 0; iter < 10; ++iter) {
        std::vector<Rational> c;
        int deg = 1 + static_cast<int>(rng.below(6));
        for (int i = 0; i <= deg; ++i) c.push_back(Rational(static_cast<long>(rng.below(9)) + 1));
        Poly g(std::move(c));
        RatFunc d(full * g, from_ints({5, 7}));  // denominator 5+7q coprime to everything
        CHECK(check_congruence(d, mod).pass);
    }
}

TEST_CASE("valuation additivity under products") {
    SplitMix64 rng(4242);
    Poly f = cyclotomic(5);
    for (int iter = 0; iter < 10; ++iter) {
        int v1 = static_cast<int>(rng.below(3));
        int v2 = static_cast<int>(rng.below(3));
        Poly a = poly_pow(f, static_cast<unsigned>(v1)) * from_ints({1, 2, 1});
        Poly b = poly_pow(f, static_cast<unsigned>(v2)) * from_ints({3, 1});
        CHECK(poly_valuation(a * b, f) == v1 + v2);
    }
}

TEST_CASE("poly_crt examples") {
    // q = 1 (mod q-1)
    CHECK(poly_crt({{Poly::variable(), from_ints({-1, 1})}}) == Poly(Rational(1)));

    // residues 1 mod (q-1) and 0 mod (q+1): (q+1)/2, verified by divrem
    Poly r = poly_crt({{Poly(Rational(1)), from_ints({-1, 1})}, {Poly(), from_ints({1, 1})}});
    CHECK(r == make_rational(1, 2) * from_ints({1, 1}));
    CHECK(poly_mod(r, from_ints({-1, 1})) == Poly(Rational(1)));
    CHECK(poly_mod(r, from_ints({1, 1})).is_zero());

    CHECK(poly_crt({{Poly(), cyclotomic(3)}, {Poly(), cyclotomic(5)}}).is_zero());

    CHECK_THROWS_AS(poly_crt({{Poly(Rational(1)), from_ints({-1, 1})},
                              {Poly(), from_ints({-1, 1})}}),
                    std::domain_error);
    CHECK_THROWS_AS(poly_crt({{Poly(Rational(1)), Poly(Rational(2))}}), std::domain_error);
}

TEST_CASE("poly_crt round trip randomized") {
    SplitMix64 rng(31415);
    std::vector<Poly> moduli = {cyclotomic(3), cyclotomic(4), cyclotomic(5), from_ints({-2, 1})};
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<std::pair<Poly, Poly>> pairs;
        int total_deg = 0;
        for (const auto& m : moduli) {
            std::vector<Rational> c;
            for (int i = 0; i < m.degree(); ++i) {
                c.push_back(make_rational(static_cast<long>(rng.below(11)) - 5,
                                          1 + static_cast<long>(rng.below(3))));
            }
            pairs.emplace_back(Poly(std::move(c)), m);
            total_deg += m.degree();
        }
        Poly r = poly_crt(pairs);
        CHECK(r.degree() < total_deg);
        for (const auto& [residue, modulus] : pairs) {
            CHECK(poly_mod(r, modulus) == poly_mod(residue, modulus));
        }
    }
}

TEST_CASE("crt weight congruences") {
    auto [r1, r2] = check_crt_weights(Rational(2), Rational(3), 3);
    CHECK(r1.pass);
    CHECK(r2.pass);

    auto [r3, r4] = check_crt_weights(make_rational(1, 2), Rational(5), 5);
    CHECK(r3.pass);
    CHECK(r4.pass);

    CHECK_THROWS_AS(check_crt_weights(Rational(2), make_rational(1, 2), 3), degeneracy_error);
    CHECK_THROWS_AS(check_crt_weights(Rational(2), Rational(2), 3), degeneracy_error);
}

TEST_CASE("guo_c at n = 3 against brute force, both truncations") {
    for (int M : {1, 2}) {
        RatFunc lhs = brute_force_guo_c_lhs(M);
        RatFunc rhs = brute_force_guo_c_rhs(3);
        CongruenceReport rep = check_congruence(lhs - rhs, assemble_modulus(3, 3));
        CHECK(rep.pass);
    }
}
