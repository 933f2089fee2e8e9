#include "qsc/ratfunc.hpp"

#include <sstream>

namespace qsc {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = poly_div_exact(num_, g);
        den_ = poly_div_exact(den_, g);
    }
    auto [scale, prim] = poly_primitive(den_);
    den_ = std::move(prim);
    num_ *= Rational(1) / scale;
}

bool RatFunc::is_one() const {
    return den_.is_constant() && den_.coeff(0) == 1 && num_.is_constant() && num_.coeff(0) == 1;
}

RatFunc RatFunc::operator-() const {
    RatFunc out(*this);
    out.num_ = -out.num_;
    return out;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    Poly g = poly_gcd(den_, o.den_);
    if (g.is_constant()) {
        *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    } else {
        Poly fb = poly_div_exact(o.den_, g);
        *this = RatFunc(num_ * fb + o.num_ * poly_div_exact(den_, g), den_ * fb);
    }
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    *this += -o;
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero() || o.is_zero()) {
        *this = RatFunc();
        return *this;
    }
    // Cross-cancel first so the constructor's gcd only mops up constants.
    Poly g1 = poly_gcd(num_, o.den_);
    Poly g2 = poly_gcd(o.num_, den_);
    Poly n1 = g1.is_constant() ? num_ : poly_div_exact(num_, g1);
    Poly d2 = g1.is_constant() ? o.den_ : poly_div_exact(o.den_, g1);
    Poly n2 = g2.is_constant() ? o.num_ : poly_div_exact(o.num_, g2);
    Poly d1 = g2.is_constant() ? den_ : poly_div_exact(den_, g2);
    *this = RatFunc(n1 * n2, d1 * d2);
    return *this;
}

RatFunc RatFunc::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    *this *= o.reciprocal();
    return *this;
}

Rational RatFunc::eval(const Rational& x) const {
    Poly n = num_, d = den_;
    Rational dv = d.eval(x);
    if (dv == 0) {
        // A reduced fraction cannot vanish at x in both parts; this strip only
        // fires for values constructed outside the reducing constructor.
        Poly lin(std::vector<Rational>{-x, Rational(1)});
        while (d.eval(x) == 0 && n.eval(x) == 0) {
            n = poly_div_exact(n, lin);
            d = poly_div_exact(d, lin);
        }
        dv = d.eval(x);
        if (dv == 0) throw std::domain_error("pole at evaluation point");
    }
    return n.eval(x) / dv;
}

std::string RatFunc::str(const std::string& var) const {
    if (den_.is_constant() && den_.coeff(0) == 1) return num_.str(var);
    std::ostringstream os;
    os << "(" << num_.str(var) << ") / (" << den_.str(var) << ")";
    return os.str();
}

RatFunc operator+(RatFunc a, const RatFunc& b) {
    a += b;
    return a;
}

RatFunc operator-(RatFunc a, const RatFunc& b) {
    a -= b;
    return a;
}

RatFunc operator*(RatFunc a, const RatFunc& b) {
    a *= b;
    return a;
}

RatFunc operator/(RatFunc a, const RatFunc& b) {
    a /= b;
    return a;
}

RatFunc ratfunc_reduce(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) return RatFunc();
    long long shift = std::min(num.offset(), den.offset());
    Poly n = num.body().shifted(static_cast<int>(num.offset() - shift));
    Poly d = den.body().shifted(static_cast<int>(den.offset() - shift));
    return RatFunc(std::move(n), std::move(d));
}

}  // namespace qsc
