#include "qsc/qobjects.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace qsc {

std::string QMonomial::str() const {
    std::ostringstream os;
    if (qexp == 0) return coef.get_str();
    if (coef != 1) os << coef.get_str() << "*";
    os << "q";
    if (qexp != 1) os << "^(" << qexp << ")";
    return os.str();
}

QMonomial qmon(const Rational& coef, long long qexp) { return {coef, qexp}; }

QMonomial operator*(const QMonomial& a, const QMonomial& b) {
    return {a.coef * b.coef, a.qexp + b.qexp};
}

QMonomial operator/(const QMonomial& a, const QMonomial& b) {
    if (b.coef == 0) throw std::domain_error("division by zero monomial");
    return {a.coef / b.coef, a.qexp - b.qexp};
}

QMonomial qmon_inv(const QMonomial& a) {
    if (a.coef == 0) throw std::domain_error("inverse of zero monomial");
    return {Rational(1) / a.coef, -a.qexp};
}

Poly q_integer(int n) {
    if (n < 1) throw std::domain_error("q_integer requires n >= 1");
    return Poly(std::vector<Rational>(static_cast<size_t>(n), Rational(1)));
}

int mobius(int n) {
    if (n < 1) throw std::domain_error("mobius requires n >= 1");
    int out = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            out = -out;
        }
    }
    if (n > 1) out = -out;
    return out;
}

std::vector<int> divisors_of(int n) {
    std::vector<int> out;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Poly q_pow_minus_one(int m) {
    // q^m - 1
    std::vector<Rational> c(static_cast<size_t>(m) + 1, Rational(0));
    c[0] = Rational(-1);
    c.back() = Rational(1);
    return Poly(std::move(c));
}

Poly compute_cyclotomic(int n) {
    Poly num{Rational(1)};
    Poly den{Rational(1)};
    for (int d : divisors_of(n)) {
        int mu = mobius(d);
        if (mu == 1) {
            num *= q_pow_minus_one(n / d);
        } else if (mu == -1) {
            den *= q_pow_minus_one(n / d);
        }
    }
    return poly_div_exact(num, den);
}

}  // namespace

const Poly& cyclotomic(int n) {
    if (n < 1) throw std::domain_error("cyclotomic requires n >= 1");
    static std::map<int, Poly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_cyclotomic(n)).first;
    return it->second;
}

LaurentPoly q_shifted_factorial(const QMonomial& x, int step, int k) {
    if (step < 1) throw std::domain_error("q_shifted_factorial requires step >= 1");
    if (k < 0) throw std::domain_error("q_shifted_factorial requires k >= 0");
    LaurentPoly out(1L);
    if (x.is_zero()) return out;
    for (int j = 0; j < k; ++j) {
        LaurentPoly factor =
            LaurentPoly(1L) - LaurentPoly::monomial(x.coef, x.qexp + static_cast<long long>(step) * j);
        out *= factor;
    }
    return out;
}

Poly q_binomial(int t, int s) {
    if (s < 0 || t < 0 || s > t) throw std::domain_error("q_binomial requires 0 <= s <= t");
    // (q;q)_t / ((q;q)_s (q;q)_{t-s}), an exact division.
    auto poch = [](int m) {
        LaurentPoly p = q_shifted_factorial(qpow(1), 1, m);
        return p.body().shifted(static_cast<int>(p.offset()));
    };
    return poly_div_exact(poch(t), poch(s) * poch(t - s));
}

Poly FactoredModulus::product() const {
    Poly out{Rational(1)};
    for (const auto& [d, e] : cyclotomic_factors) out *= poly_pow(cyclotomic(d), static_cast<unsigned>(e));
    for (const auto& f : extra_factors) out *= f;
    return out;
}

std::string FactoredModulus::str() const {
    if (empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, e] : cyclotomic_factors) {
        if (!first) os << " * ";
        first = false;
        os << "Phi_" << d;
        if (e > 1) os << "^" << e;
    }
    for (const auto& f : extra_factors) {
        if (!first) os << " * ";
        first = false;
        os << "(" << f.str() << ")";
    }
    return os.str();
}

FactoredModulus make_modulus(std::vector<std::pair<int, int>> cyclos, std::vector<Poly> extras) {
    std::sort(cyclos.begin(), cyclos.end());
    for (size_t i = 0; i < cyclos.size(); ++i) {
        auto [d, e] = cyclos[i];
        if (d < 2) throw std::domain_error("modulus: cyclotomic index must be >= 2");
        if (e < 1) throw std::domain_error("modulus: exponent must be >= 1");
        if (i > 0 && cyclos[i - 1].first == d) throw std::domain_error("modulus: duplicate cyclotomic index");
    }
    for (size_t i = 0; i < extras.size(); ++i) {
        if (extras[i].is_zero()) throw degeneracy_error("modulus: zero extra factor");
        if (extras[i].is_constant()) throw degeneracy_error("modulus: constant extra factor");
        for (const auto& [d, e] : cyclos) {
            if (!poly_gcd(extras[i], cyclotomic(d)).is_constant()) {
                throw degeneracy_error("modulus: extra factor shares a root with Phi_" + std::to_string(d));
            }
        }
        for (size_t j = i + 1; j < extras.size(); ++j) {
            if (!poly_gcd(extras[i], extras[j]).is_constant()) {
                throw degeneracy_error("modulus: extra factors are not coprime");
            }
        }
    }
    return FactoredModulus{std::move(cyclos), std::move(extras)};
}

FactoredModulus assemble_modulus(int n, int phi_exponent, std::vector<Poly> extras) {
    if (n < 1 || n % 2 == 0) throw std::domain_error("assemble_modulus requires odd n >= 1");
    if (phi_exponent < 1) throw std::domain_error("assemble_modulus requires exponent >= 1");
    std::vector<std::pair<int, int>> cyclos;
    for (int d : divisors_of(n)) {
        if (d == 1) continue;
        cyclos.emplace_back(d, d == n ? phi_exponent + 1 : 1);
    }
    return make_modulus(std::move(cyclos), std::move(extras));
}

FactoredModulus modulus_q_integer(int n, std::vector<Poly> extras) {
    if (n < 1 || n % 2 == 0) throw std::domain_error("modulus_q_integer requires odd n >= 1");
    std::vector<std::pair<int, int>> cyclos;
    for (int d : divisors_of(n)) {
        if (d > 1) cyclos.emplace_back(d, 1);
    }
    return make_modulus(std::move(cyclos), std::move(extras));
}

FactoredModulus modulus_phi(int n, int e, std::vector<Poly> extras) {
    if (n < 1 || n % 2 == 0) throw std::domain_error("modulus_phi requires odd n >= 1");
    std::vector<std::pair<int, int>> cyclos;
    if (n > 1 && e > 0) cyclos.emplace_back(n, e);
    return make_modulus(std::move(cyclos), std::move(extras));
}

}  // namespace qsc
