#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qsc {

// Coefficient field for the whole workbench. GMP keeps the canonical-form
// invariants (gcd(|num|, den) = 1, den >= 1, zero = 0/1) across arithmetic.
using BigInt = mpz_class;
using Rational = mpq_class;

// Raised when a parameter choice collapses a denominator or a modulus factor;
// callers may resample and retry.
class degeneracy_error : public std::runtime_error {
public:
    explicit degeneracy_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a statement is evaluated outside its declared domain
// (e.g. n not congruent to 3 mod 4).
class applicability_error : public std::runtime_error {
public:
    explicit applicability_error(const std::string& what) : std::runtime_error(what) {}
};

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "7/3", "-2", "0".
inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("cannot parse rational: " + text);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline BigInt bigint_pow(const BigInt& base, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("0 raised to a negative power");
        return Rational(0);
    }
    unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
    BigInt num = bigint_pow(base.get_num(), ue);
    BigInt den = bigint_pow(base.get_den(), ue);
    return (e > 0) ? make_rational(num, den) : make_rational(den, num);
}

}  // namespace qsc
