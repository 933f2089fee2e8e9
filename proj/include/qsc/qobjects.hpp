#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qsc/laurent.hpp"
#include "qsc/poly.hpp"

namespace qsc {

/// coef * q^qexp. Every series parameter in the workbench is of this shape;
/// coef = 0 encodes a parameter that was sent to 0 in a limit.
struct QMonomial {
    Rational coef;
    long long qexp = 0;

    QMonomial() : coef(0) {}
    QMonomial(Rational c, long long e) : coef(std::move(c)), qexp(e) {}
    QMonomial(long c, long long e = 0) : coef(c), qexp(e) {}

    bool is_zero() const { return coef == 0; }
    bool operator==(const QMonomial& o) const = default;
    std::string str() const;
};

QMonomial qmon(const Rational& coef, long long qexp = 0);
inline QMonomial qpow(long long e) { return QMonomial(Rational(1), e); }  // q^e

QMonomial operator*(const QMonomial& a, const QMonomial& b);
QMonomial operator/(const QMonomial& a, const QMonomial& b);
QMonomial qmon_inv(const QMonomial& a);

/// [n] = 1 + q + ... + q^(n-1); n >= 1.
Poly q_integer(int n);

/// Moebius function; n >= 1.
int mobius(int n);

/// n-th cyclotomic polynomial, computed by Moebius inversion of q^n - 1 and
/// cached per process. Safe for concurrent callers.
const Poly& cyclotomic(int n);

/// (x; q^step)_k = prod_{j=0}^{k-1} (1 - x q^(step*j)); k = 0 gives 1.
LaurentPoly q_shifted_factorial(const QMonomial& x, int step, int k);

/// Gaussian binomial coefficient; requires 0 <= s <= t.
Poly q_binomial(int t, int s);

/// Product of cyclotomic powers plus extra polynomial factors; the right-hand
/// side of every congruence check.
struct FactoredModulus {
    std::vector<std::pair<int, int>> cyclotomic_factors;  // (index d, exponent e)
    std::vector<Poly> extra_factors;

    Poly product() const;
    bool empty() const { return cyclotomic_factors.empty() && extra_factors.empty(); }
    std::string str() const;
};

/// Validates index distinctness, exponent positivity, and coprimality of the
/// extras against every cyclotomic factor and each other.
FactoredModulus make_modulus(std::vector<std::pair<int, int>> cyclos, std::vector<Poly> extras);

/// Modulus of the shape [n] * Phi_n(q)^phi_exponent (times extras):
/// Phi_n carries phi_exponent + 1, every other divisor d | n with 1 < d < n
/// carries 1, and Phi_1 is never included. n odd.
FactoredModulus assemble_modulus(int n, int phi_exponent, std::vector<Poly> extras = {});

/// Plain [n]: every divisor d | n with d > 1 at exponent 1.
FactoredModulus modulus_q_integer(int n, std::vector<Poly> extras = {});

/// Phi_n(q)^e (times extras); no other divisors.
FactoredModulus modulus_phi(int n, int e, std::vector<Poly> extras = {});

std::vector<int> divisors_of(int n);

}  // namespace qsc
