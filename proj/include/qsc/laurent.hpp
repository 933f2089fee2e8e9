#pragma once

#include <string>

#include "qsc/poly.hpp"

namespace qsc {

/// Polynomial with a (possibly negative) exponent offset: q^offset * body.
/// Invariant: body has a nonzero constant coefficient unless the value is zero,
/// in which case offset is 0.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Poly& body);  // NOLINT: implicit by design
    LaurentPoly(Poly body, long long offset);
    LaurentPoly(const Rational& constant) : LaurentPoly(Poly(constant)) {}
    LaurentPoly(long constant) : LaurentPoly(Poly(constant)) {}

    static LaurentPoly monomial(const Rational& coef, long long exp);

    bool is_zero() const { return body_.is_zero(); }
    long long offset() const { return off_; }
    const Poly& body() const { return body_; }

    // Degree of the highest term (offset + deg body); only for nonzero values.
    long long top_degree() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& s);

    /// Exact value at a nonzero rational point.
    Rational eval(const Rational& x) const;

    bool operator==(const LaurentPoly& o) const = default;

    std::string str(const std::string& var = "q") const;

private:
    long long off_ = 0;
    Poly body_;
    void normalize();
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b);

}  // namespace qsc
