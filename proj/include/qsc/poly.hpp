#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qsc/rational.hpp"

namespace qsc {

/// Dense univariate polynomial over Q. Coefficients are stored ascending by
/// exponent; the zero polynomial is the empty vector and every nonzero value
/// has a nonzero leading coefficient.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& constant);  // NOLINT: implicit by design
    Poly(long constant) : Poly(Rational(constant)) {}
    explicit Poly(std::vector<Rational> coeffs);

    static Poly variable();  // q
    static Poly monomial(const Rational& coef, int exp);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;
    bool is_constant() const { return c_.size() <= 1; }

    // Number of zero coefficients below the lowest nonzero one (0 for zero poly).
    int low_order() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& s);

    Poly shifted(int k) const;        // multiply by q^k, k >= 0
    Poly shifted_down(int k) const;   // divide by q^k; requires low_order() >= k

    Rational eval(const Rational& x) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    std::string str(const std::string& var = "q") const;

private:
    std::vector<Rational> c_;
    void normalize();
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rational& s, Poly p);

/// Exact Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);

/// Remainder only.
Poly poly_mod(const Poly& a, const Poly& m);

/// Quotient of an exact division; throws std::domain_error if b does not divide a.
Poly poly_div_exact(const Poly& a, const Poly& b);

bool poly_divides(const Poly& divisor, const Poly& a);

/// Largest v with f^v | a. Requires a != 0 and deg f >= 1.
int poly_valuation(const Poly& a, const Poly& f);

/// Monic greatest common divisor. gcd(p, 0) = monic(p); gcd(0, 0) throws.
Poly poly_gcd(const Poly& a, const Poly& b);

Poly poly_pow(const Poly& base, unsigned e);

/// Content/primitive split: returns (scale, prim) with a = scale * prim,
/// prim a primitive integer polynomial with positive leading coefficient.
/// The zero polynomial maps to (0, 0).
std::pair<Rational, Poly> poly_primitive(const Poly& a);

Poly poly_monic(const Poly& a);

struct PolyExtGcd {
    Poly g;  // monic gcd
    Poly s;
    Poly t;  // g = s*a + t*b
};
PolyExtGcd poly_ext_gcd(const Poly& a, const Poly& b);

/// Inverse of a modulo m; throws std::domain_error if gcd(a, m) is nonconstant.
Poly poly_invmod(const Poly& a, const Poly& m);

}  // namespace qsc
