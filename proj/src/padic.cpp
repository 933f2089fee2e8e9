#include "qsc/padic.hpp"

#include <algorithm>

namespace qsc {

Rational rising_factorial(const Rational& x, unsigned k) {
    Rational acc(1);
    Rational term(x);
    for (unsigned j = 0; j < k; ++j) {
        acc *= term;
        term += 1;
    }
    return acc;
}

namespace {

bool is_small_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

void require_odd_prime(unsigned p) {
    if (p < 3 || !is_small_prime(p)) {
        throw applicability_error("p must be an odd prime (got " + std::to_string(p) + ")");
    }
}

uint64_t pow_u64_checked(unsigned p, unsigned r) {
    uint64_t out = 1;
    for (unsigned i = 0; i < r; ++i) {
        if (out > (1ull << 40)) throw std::domain_error("p^r too large");
        out *= p;
    }
    return out;
}

unsigned truncation(unsigned p, unsigned r) {
    return static_cast<unsigned>((pow_u64_checked(p, r) - 1) / 2);
}

Rational factorial(unsigned k) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(f);
}

const Rational kHalf = make_rational(1, 2);
const Rational kMinusHalf = make_rational(-1, 2);

Rational lhs_term(const std::string& id, unsigned k) {
    Rational half = rising_factorial(kHalf, k);
    Rational fact = factorial(k);
    long sign4k1 = 4L * k + 1;
    if (id == "hamme_b" || id == "swisher" || id == "liu" || id == "conj_4_1_classical") {
        Rational t = Rational(sign4k1) * rational_pow(half, 5) / rational_pow(fact, 5);
        return (k % 2 == 0) ? t : Rational(-t);
    }
    if (id == "kilbourn") return rational_pow(half, 4) / rational_pow(fact, 4);
    if (id == "long_a") return Rational(sign4k1) * rational_pow(half, 4) / rational_pow(fact, 4);
    if (id == "long_c") return Rational(sign4k1) * rational_pow(half, 6) / rational_pow(fact, 6);
    if (id == "cor_2_8_classical") {
        return Rational(sign4k1) * rational_pow(half, 4) * rational_pow(rising_factorial(kMinusHalf, k), 2) /
               (rational_pow(fact, 4) * rational_pow(factorial(k + 1), 2));
    }
    if (id == "cor_2_9_classical") {
        return Rational(sign4k1) * rational_pow(half, 5) * rising_factorial(kMinusHalf, k) /
               (rational_pow(fact, 5) * factorial(k + 1));
    }
    throw std::invalid_argument("unknown classical statement id: " + id);
}

Rational second_term(const std::string& id, unsigned k) {
    Rational half = rising_factorial(kHalf, k);
    Rational fact = factorial(k);
    if (id == "long_c") return rational_pow(half, 4) / rational_pow(fact, 4);
    if (id == "cor_2_8_classical") {
        return rational_pow(half, 3) * rising_factorial(make_rational(5, 2), k) /
               (rational_pow(fact, 2) * rational_pow(factorial(k + 1), 2));
    }
    if (id == "cor_2_9_classical") {
        return rational_pow(half, 3) * rising_factorial(make_rational(3, 2), k) /
               (rational_pow(fact, 3) * factorial(k + 1));
    }
    throw std::invalid_argument("statement has no second sum: " + id);
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t inv_mod_u64(uint64_t a, uint64_t m) {
    // extended Euclid; a must be a unit mod m
    int64_t t = 0, newt = 1;
    int64_t r = static_cast<int64_t>(m), newr = static_cast<int64_t>(a % m);
    while (newr != 0) {
        int64_t qq = r / newr;
        int64_t tmp = t - qq * newt;
        t = newt;
        newt = tmp;
        tmp = r - qq * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::domain_error("inv_mod: not a unit");
    return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(m) : t);
}

uint64_t rational_residue(const Rational& x, uint64_t m) {
    uint64_t num = mpz_fdiv_ui(x.get_num_mpz_t(), m);
    uint64_t den = mpz_fdiv_ui(x.get_den_mpz_t(), m);
    return mulmod(num, inv_mod_u64(den, m), m);
}

}  // namespace

std::vector<std::string> classical_ids() {
    return {"hamme_b",  "liu",    "kilbourn", "long_a", "long_c", "cor_2_8_classical",
            "cor_2_9_classical", "conj_4_1_classical", "swisher"};
}

Rational classical_sum(const std::string& id, unsigned p, unsigned r) {
    require_odd_prime(p);
    if (r < 1) throw std::domain_error("r must be >= 1");
    unsigned T = truncation(p, r);
    Rational acc(0);
    for (unsigned k = 0; k <= T; ++k) acc += lhs_term(id, k);
    return acc;
}

Rational classical_second_sum(const std::string& id, unsigned p, unsigned r) {
    require_odd_prime(p);
    unsigned T = truncation(p, r);
    Rational acc(0);
    for (unsigned k = 0; k <= T; ++k) acc += second_term(id, k);
    return acc;
}

long padic_valuation(const Rational& x, unsigned p) {
    if (x == 0) throw std::domain_error("valuation of zero");
    BigInt tmp;
    long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_num_mpz_t(), BigInt(p).get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_den_mpz_t(), BigInt(p).get_mpz_t()));
    return vn - vd;
}

bool padic_valuation_check(const Rational& lhs, const Rational& rhs, unsigned p, unsigned k) {
    require_odd_prime(p);
    Rational d = lhs - rhs;
    if (d == 0) return true;
    if (mpz_divisible_ui_p(d.get_den_mpz_t(), p)) {
        throw std::domain_error("p divides the denominator of the difference");
    }
    return padic_valuation(d, p) >= static_cast<long>(k);
}

PadicResidue padic_gamma(const Rational& x, unsigned p, unsigned k) {
    require_odd_prime(p);
    if (k < 1) throw std::domain_error("padic_gamma: k must be >= 1");
    if (mpz_divisible_ui_p(x.get_den_mpz_t(), p)) {
        throw std::domain_error("padic_gamma: p divides den(x)");
    }
    uint64_t pk = pow_u64_checked(p, k);
    if (pk >= (1ull << 32)) throw std::domain_error("padic_gamma: p^k too large");
    uint64_t m = rational_residue(x, pk);
    uint64_t acc = 1 % pk;
    for (uint64_t j = 1; j < m; ++j) {
        if (j % p == 0) continue;
        acc = mulmod(acc, j, pk);
    }
    if (m % 2 == 1) acc = (pk - acc) % pk;
    return PadicResidue{p, k, pk, acc};
}

std::vector<BigInt> eta_coefficients(unsigned N) {
    if (N < 1) throw std::domain_error("eta_coefficients: N must be >= 1");
    // q * prod (1 - q^(2n))^4 (1 - q^(4n))^4, truncated at degree N.
    std::vector<BigInt> series(N + 1, BigInt(0));
    series[1] = 1;
    const long binom[5] = {1, -4, 6, -4, 1};
    auto mul_factor = [&](unsigned m) {
        // multiply by (1 - q^m)^4
        std::vector<BigInt> next(N + 1, BigInt(0));
        for (unsigned i = 0; i <= N; ++i) {
            if (series[i] == 0) continue;
            for (int t = 0; t < 5; ++t) {
                unsigned deg = i + static_cast<unsigned>(t) * m;
                if (deg > N) break;
                next[deg] += binom[t] * series[i];
            }
        }
        series = std::move(next);
    };
    for (unsigned n = 1; 2 * n <= N; ++n) mul_factor(2 * n);
    for (unsigned n = 1; 4 * n <= N; ++n) mul_factor(4 * n);
    return std::vector<BigInt>(series.begin() + 1, series.end());
}

namespace {

void require_classical_applicable(const std::string& id, unsigned p, unsigned r) {
    require_odd_prime(p);
    if (r < 1) throw std::domain_error("r must be >= 1");
    const bool gamma_based = (id == "hamme_b" || id == "swisher" || id == "liu");
    if (gamma_based || id == "kilbourn") {
        if (r != 1) throw applicability_error(id + ": stated for r = 1 only");
    }
    if (id == "long_a" || id == "long_c" || id == "liu" || id == "cor_2_8_classical" ||
        id == "cor_2_9_classical") {
        if (p <= 3) throw applicability_error(id + ": requires p > 3");
    }
    if (id == "liu" && p % 4 != 3) throw applicability_error("liu: requires p == 3 (mod 4)");
    if (id == "conj_4_1_classical" && p % 4 != 3) {
        throw applicability_error("conj_4_1_classical: requires p == 3 (mod 4)");
    }
    if (id == "swisher" && (p % 4 != 1 || p <= 5)) {
        throw applicability_error("swisher: requires p == 1 (mod 4) and p > 5");
    }
}

}  // namespace

bool classical_applicable(const std::string& id, unsigned p, unsigned r) {
    try {
        require_classical_applicable(id, p, r);
        return true;
    } catch (const applicability_error&) {
        return false;
    } catch (const std::domain_error&) {
        return false;
    }
}

ClassicalResult check_classical_detail(const std::string& id, unsigned p, unsigned r) {
    require_classical_applicable(id, p, r);

    ClassicalResult out;
    out.id = id;
    out.p = p;
    out.r = r;

    unsigned k;
    if (id == "hamme_b" || id == "kilbourn") {
        k = 3;
    } else if (id == "long_a" || id == "long_c" || id == "liu") {
        k = 4;
    } else if (id == "cor_2_8_classical" || id == "cor_2_9_classical") {
        k = r + 3;
    } else if (id == "conj_4_1_classical") {
        k = r + 4;
    } else if (id == "swisher") {
        k = 5;
    } else {
        throw std::invalid_argument("unknown classical statement id: " + id);
    }
    out.modulus_exponent = k;

    Rational lhs = classical_sum(id, p, r);
    Rational pr = rational_pow(Rational(static_cast<long>(p)), static_cast<long>(r));

    Rational rhs(0);
    if (id == "long_a") {
        rhs = pr;
    } else if (id == "long_c" || id == "cor_2_8_classical" || id == "cor_2_9_classical") {
        rhs = pr * classical_second_sum(id, p, r);
    } else if (id == "conj_4_1_classical") {
        unsigned T = truncation(p, r);
        rhs = pr * pr * rising_factorial(make_rational(3, 4), T) /
              rising_factorial(make_rational(5, 4), T);
    } else if (id == "kilbourn") {
        rhs = Rational(eta_coefficients(p).at(p - 1));
    } else if (id == "hamme_b" && p % 4 == 3) {
        rhs = 0;
    } else if (id == "hamme_b" || id == "swisher") {
        // -p / Gamma_p(3/4)^4 as a residue mod p^k
        uint64_t pk = pow_u64_checked(p, k);
        uint64_t g = padic_gamma(make_rational(3, 4), p, k).value;
        uint64_t g4 = mulmod(mulmod(g, g, pk), mulmod(g, g, pk), pk);
        uint64_t res = (pk - mulmod(p, inv_mod_u64(g4, pk), pk)) % pk;
        rhs = Rational(static_cast<unsigned long>(res));
    } else if (id == "liu") {
        // -(p^3/16) Gamma_p(1/4)^4 as a residue mod p^4
        uint64_t pk = pow_u64_checked(p, k);
        uint64_t g = padic_gamma(make_rational(1, 4), p, k).value;
        uint64_t g4 = mulmod(mulmod(g, g, pk), mulmod(g, g, pk), pk);
        uint64_t p3 = mulmod(mulmod(p, p, pk), p, pk);
        uint64_t res = mulmod(p3, inv_mod_u64(16 % pk, pk), pk);
        res = mulmod(res, g4, pk);
        res = (pk - res) % pk;
        rhs = Rational(static_cast<unsigned long>(res));
    }

    out.lhs = lhs.get_str();
    out.rhs = rhs.get_str();
    Rational d = lhs - rhs;
    if (d == 0) {
        out.achieved = 64;
        out.pass = true;
        return out;
    }
    if (mpz_divisible_ui_p(d.get_den_mpz_t(), p)) {
        throw std::domain_error(id + ": p divides the denominator of the difference");
    }
    out.achieved = padic_valuation(d, p);
    out.pass = out.achieved >= static_cast<long>(k);
    return out;
}

bool check_classical(const std::string& id, unsigned p, unsigned r) {
    return check_classical_detail(id, p, r).pass;
}

}  // namespace qsc
