#pragma once

#include <string>

#include "qsc/laurent.hpp"
#include "qsc/poly.hpp"

namespace qsc {

/// Reduced rational function num/den in q.
/// Invariants: den != 0; gcd(num, den) is constant; den has primitive integer
/// coefficients with a positive leading coefficient; zero is 0/1.
class RatFunc {
public:
    RatFunc() : den_(Rational(1)) {}
    RatFunc(const Rational& constant) : num_(constant), den_(Rational(1)) {}  // NOLINT
    RatFunc(long constant) : num_(Rational(constant)), den_(Rational(1)) {}   // NOLINT
    RatFunc(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    RatFunc reciprocal() const;

    /// Exact value at x; evaluates through removable singularities and throws
    /// std::domain_error on a genuine pole.
    Rational eval(const Rational& x) const;

    bool operator==(const RatFunc& o) const = default;

    std::string str(const std::string& var = "q") const;

private:
    Poly num_;
    Poly den_;
    void reduce();
};

RatFunc operator+(RatFunc a, const RatFunc& b);
RatFunc operator-(RatFunc a, const RatFunc& b);
RatFunc operator*(RatFunc a, const RatFunc& b);
RatFunc operator/(RatFunc a, const RatFunc& b);

/// Clears the Laurent offsets by a common power of q (a unit modulo every
/// cyclotomic factor) and reduces. Throws std::domain_error on a zero denominator.
RatFunc ratfunc_reduce(const LaurentPoly& num, const LaurentPoly& den);

inline RatFunc ratfunc_from(const LaurentPoly& num) { return ratfunc_reduce(num, LaurentPoly(1L)); }

}  // namespace qsc
