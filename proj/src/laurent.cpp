#include "qsc/laurent.hpp"

#include <sstream>

namespace qsc {

namespace {
constexpr long long kExpCap = 1 << 26;  // guards against runaway exponent arithmetic
}

LaurentPoly::LaurentPoly(const Poly& body) : body_(body) { normalize(); }

LaurentPoly::LaurentPoly(Poly body, long long offset) : off_(offset), body_(std::move(body)) {
    normalize();
}

LaurentPoly LaurentPoly::monomial(const Rational& coef, long long exp) {
    LaurentPoly out;
    if (coef == 0) return out;
    out.body_ = Poly(coef);
    out.off_ = exp;
    return out;
}

void LaurentPoly::normalize() {
    if (body_.is_zero()) {
        off_ = 0;
        return;
    }
    int low = body_.low_order();
    if (low > 0) {
        body_ = body_.shifted_down(low);
        off_ += low;
    }
    if (off_ > kExpCap || off_ < -kExpCap || body_.degree() > kExpCap) {
        throw std::overflow_error("Laurent exponent out of supported range");
    }
}

long long LaurentPoly::top_degree() const {
    if (is_zero()) throw std::domain_error("top_degree of zero");
    return off_ + body_.degree();
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(*this);
    out.body_ = -out.body_;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    long long lo = std::min(off_, o.off_);
    Poly a = body_.shifted(static_cast<int>(off_ - lo));
    Poly b = o.body_.shifted(static_cast<int>(o.off_ - lo));
    body_ = a + b;
    off_ = lo;
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    *this += -o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    if (is_zero() || o.is_zero()) {
        *this = LaurentPoly();
        return *this;
    }
    body_ *= o.body_;
    off_ += o.off_;
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
    if (s == 0) {
        *this = LaurentPoly();
        return *this;
    }
    body_ *= s;
    return *this;
}

Rational LaurentPoly::eval(const Rational& x) const {
    if (is_zero()) return Rational(0);
    if (x == 0) throw std::domain_error("Laurent eval at 0");
    return body_.eval(x) * rational_pow(x, off_);
}

std::string LaurentPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    if (off_ == 0) return body_.str(var);
    std::ostringstream os;
    os << var << "^(" << off_ << ") * (" << body_.str(var) << ")";
    return os.str();
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
}

LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
}

LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) {
    a *= b;
    return a;
}

}  // namespace qsc
