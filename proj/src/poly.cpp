#include "qsc/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace qsc {

namespace {

const Rational kZero(0);

}  // namespace

Poly::Poly(const Rational& constant) {
    if (constant != 0) c_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly Poly::variable() { return monomial(Rational(1), 1); }

Poly Poly::monomial(const Rational& coef, int exp) {
    if (exp < 0) throw std::domain_error("Poly::monomial: negative exponent");
    if (coef == 0) return Poly();
    std::vector<Rational> c(static_cast<size_t>(exp) + 1, Rational(0));
    c.back() = coef;
    Poly p;
    p.c_ = std::move(c);
    return p;
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const Rational& Poly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

int Poly::low_order() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return 0;
}

Poly Poly::operator-() const {
    Poly out(*this);
    for (auto& c : out.c_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

// Multiplication clears denominators once per operand and convolves integers;
// one canonicalization per output coefficient instead of one per product.
Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();

    BigInt da(1), db(1);
    for (const auto& c : ac) mpz_lcm(da.get_mpz_t(), da.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& c : bc) mpz_lcm(db.get_mpz_t(), db.get_mpz_t(), c.get_den_mpz_t());

    std::vector<BigInt> ia(ac.size()), ib(bc.size());
    BigInt tmp;
    for (size_t i = 0; i < ac.size(); ++i) {
        mpz_divexact(tmp.get_mpz_t(), da.get_mpz_t(), ac[i].get_den_mpz_t());
        ia[i] = tmp * ac[i].get_num();
    }
    for (size_t i = 0; i < bc.size(); ++i) {
        mpz_divexact(tmp.get_mpz_t(), db.get_mpz_t(), bc[i].get_den_mpz_t());
        ib[i] = tmp * bc[i].get_num();
    }

    std::vector<BigInt> conv(ac.size() + bc.size() - 1, BigInt(0));
    for (size_t i = 0; i < ia.size(); ++i) {
        if (ia[i] == 0) continue;
        for (size_t j = 0; j < ib.size(); ++j) {
            if (ib[j] == 0) continue;
            mpz_addmul(conv[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
        }
    }

    BigInt den = da * db;
    std::vector<Rational> out(conv.size());
    if (den == 1) {
        for (size_t k = 0; k < conv.size(); ++k) out[k] = Rational(conv[k]);
    } else {
        for (size_t k = 0; k < conv.size(); ++k) out[k] = make_rational(conv[k], den);
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly operator+(Poly a, const Poly& b) {
    a += b;
    return a;
}

Poly operator-(Poly a, const Poly& b) {
    a -= b;
    return a;
}

Poly operator*(const Rational& s, Poly p) {
    p *= s;
    return p;
}

Poly Poly::shifted(int k) const {
    if (k < 0) throw std::domain_error("Poly::shifted: negative shift");
    if (is_zero() || k == 0) return *this;
    Poly out;
    out.c_.assign(static_cast<size_t>(k), Rational(0));
    out.c_.insert(out.c_.end(), c_.begin(), c_.end());
    return out;
}

Poly Poly::shifted_down(int k) const {
    if (k == 0) return *this;
    if (low_order() < k) throw std::domain_error("Poly::shifted_down: not divisible by q^k");
    Poly out;
    out.c_.assign(c_.begin() + k, c_.end());
    return out;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<size_t>(i)];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (!unit) os << mag.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rational> rem(a.coeffs());
    int db = b.degree();
    const Rational& lead = b.leading();
    std::vector<Rational> quo(static_cast<size_t>(a.degree() - db) + 1, Rational(0));
    for (int i = a.degree(); i >= db; --i) {
        Rational c = rem[static_cast<size_t>(i)];
        if (c == 0) continue;
        Rational f = c / lead;
        quo[static_cast<size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<size_t>(i - db + j)] -= f * b.coeff(j);
        }
    }
    rem.resize(static_cast<size_t>(std::max(db, 0)));
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& m) { return poly_divrem(a, m).second; }

std::pair<Rational, Poly> poly_primitive(const Poly& a) {
    if (a.is_zero()) return {Rational(0), Poly()};
    BigInt den(1);
    for (const auto& c : a.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    BigInt content(0);
    std::vector<BigInt> ints(a.coeffs().size());
    BigInt tmp;
    for (size_t i = 0; i < ints.size(); ++i) {
        const Rational& c = a.coeffs()[i];
        mpz_divexact(tmp.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        ints[i] = tmp * c.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints[i].get_mpz_t());
    }
    if (ints.back() < 0) content = -content;
    std::vector<Rational> prim(ints.size());
    for (size_t i = 0; i < ints.size(); ++i) {
        mpz_divexact(tmp.get_mpz_t(), ints[i].get_mpz_t(), content.get_mpz_t());
        prim[i] = Rational(tmp);
    }
    return {make_rational(content, den), Poly(std::move(prim))};
}

Poly poly_monic(const Poly& a) {
    if (a.is_zero()) throw std::domain_error("monic of zero polynomial");
    Rational inv = Rational(1) / a.leading();
    Poly out(a);
    out *= inv;
    return out;
}

// ---------------------------------------------------------------------------
// Integer-coefficient layer used by gcd, exact division and valuations.
// ---------------------------------------------------------------------------

namespace {

using ZVec = std::vector<BigInt>;  // ascending, no trailing zeros

ZVec zvec_of(const Poly& prim) {
    ZVec z(prim.coeffs().size());
    for (size_t i = 0; i < z.size(); ++i) z[i] = prim.coeffs()[i].get_num();
    return z;
}

Poly poly_of(const ZVec& z) {
    std::vector<Rational> c(z.size());
    for (size_t i = 0; i < z.size(); ++i) c[i] = Rational(z[i]);
    return Poly(std::move(c));
}

void zvec_trim(ZVec& z) {
    while (!z.empty() && z.back() == 0) z.pop_back();
}

// Exact division in Z[x]; returns false if b does not divide a there.
bool zvec_div_exact(const ZVec& a, const ZVec& b, ZVec* quo) {
    if (b.empty()) return false;
    if (a.empty()) {
        quo->clear();
        return true;
    }
    if (a.size() < b.size()) return false;
    ZVec rem(a);
    size_t db = b.size() - 1;
    ZVec q(a.size() - b.size() + 1, BigInt(0));
    BigInt f;
    for (size_t i = a.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        if (!mpz_divisible_p(rem[i].get_mpz_t(), b[db].get_mpz_t())) return false;
        mpz_divexact(f.get_mpz_t(), rem[i].get_mpz_t(), b[db].get_mpz_t());
        q[i - db] = f;
        for (size_t j = 0; j <= db; ++j) {
            mpz_submul(rem[i - db + j].get_mpz_t(), f.get_mpz_t(), b[j].get_mpz_t());
        }
    }
    for (const auto& c : rem)
        if (c != 0) return false;
    *quo = std::move(q);
    return true;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod_u64(uint64_t base, uint64_t e, uint64_t p) {
    uint64_t acc = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) acc = mulmod_u64(acc, base, p);
        base = mulmod_u64(base, base, p);
        e >>= 1;
    }
    return acc;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % sp == 0) return n == sp;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic Miller-Rabin base set for 64-bit inputs.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

const std::vector<uint64_t>& prime_table() {
    static std::vector<uint64_t> primes = [] {
        std::vector<uint64_t> out;
        uint64_t candidate = (1ull << 62) - 1;
        while (out.size() < 96) {
            if (is_prime_u64(candidate)) out.push_back(candidate);
            candidate -= 2;
        }
        return out;
    }();
    return primes;
}

uint64_t invmod_u64(uint64_t a, uint64_t p) { return powmod_u64(a % p, p - 2, p); }

using MVec = std::vector<uint64_t>;  // ascending mod-p image, no trailing zeros

MVec reduce_mod(const ZVec& z, uint64_t p) {
    MVec out(z.size());
    for (size_t i = 0; i < z.size(); ++i) out[i] = mpz_fdiv_ui(z[i].get_mpz_t(), p);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

void make_monic_mod(MVec& a, uint64_t p) {
    if (a.empty()) return;
    uint64_t inv = invmod_u64(a.back(), p);
    for (auto& c : a) c = mulmod_u64(c, inv, p);
}

// In-place a mod b (b monic), standard schoolbook.
void rem_mod(MVec& a, const MVec& b, uint64_t p) {
    size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        uint64_t f = a.back();
        size_t shift = a.size() - b.size();
        if (f != 0) {
            for (size_t j = 0; j < db; ++j) {
                uint64_t sub = mulmod_u64(f, b[j], p);
                uint64_t& slot = a[shift + j];
                slot = (slot >= sub) ? slot - sub : slot + p - sub;
            }
        }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
}

MVec gcd_mod_p(MVec a, MVec b, uint64_t p) {
    while (!b.empty()) {
        make_monic_mod(b, p);
        rem_mod(a, b, p);
        std::swap(a, b);
    }
    make_monic_mod(a, p);
    return a;
}

// Rational monic-Euclid fallback; safe for small degrees.
Poly gcd_rational_euclid(Poly a, Poly b) {
    while (!b.is_zero()) {
        b = poly_monic(b);
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

}  // namespace

Poly poly_div_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("exact division by zero polynomial");
    if (a.is_zero()) return Poly();
    auto [sa, pa] = poly_primitive(a);
    auto [sb, pb] = poly_primitive(b);
    ZVec quo;
    if (!zvec_div_exact(zvec_of(pa), zvec_of(pb), &quo)) {
        throw std::domain_error("polynomial division is not exact");
    }
    Poly q = poly_of(quo);
    q *= sa / sb;
    return q;
}

bool poly_divides(const Poly& divisor, const Poly& a) {
    if (divisor.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    if (divisor.is_constant()) return true;
    ZVec quo;
    return zvec_div_exact(zvec_of(poly_primitive(a).second), zvec_of(poly_primitive(divisor).second), &quo);
}

int poly_valuation(const Poly& a, const Poly& f) {
    if (a.is_zero()) throw std::domain_error("valuation of zero polynomial");
    if (f.is_zero() || f.is_constant()) throw std::domain_error("valuation at a constant");
    ZVec cur = zvec_of(poly_primitive(a).second);
    ZVec div = zvec_of(poly_primitive(f).second);
    int v = 0;
    ZVec quo;
    while (zvec_div_exact(cur, div, &quo)) {
        ++v;
        cur = quo;
        zvec_trim(cur);
        if (cur.empty()) break;  // unreachable: a != 0
    }
    return v;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0)");
    if (a.is_zero()) return poly_monic(b);
    if (b.is_zero()) return poly_monic(a);
    if (a.is_constant() || b.is_constant()) return Poly(Rational(1));
    if (std::min(a.degree(), b.degree()) <= 16) {
        // Degree drops to the small operand after one remainder; Euclid is fine.
        return gcd_rational_euclid(a, b);
    }

    ZVec za = zvec_of(poly_primitive(a).second);
    ZVec zb = zvec_of(poly_primitive(b).second);
    BigInt gamma;
    mpz_gcd(gamma.get_mpz_t(), za.back().get_mpz_t(), zb.back().get_mpz_t());

    size_t best_deg = SIZE_MAX;
    std::vector<BigInt> crt;       // residues in [0, crt_mod)
    BigInt crt_mod(1);
    std::vector<BigInt> last_lift;
    bool have_last = false;

    for (uint64_t p : prime_table()) {
        if (mpz_fdiv_ui(za.back().get_mpz_t(), p) == 0) continue;
        if (mpz_fdiv_ui(zb.back().get_mpz_t(), p) == 0) continue;
        MVec img = gcd_mod_p(reduce_mod(za, p), reduce_mod(zb, p), p);
        if (img.size() == 1) return Poly(Rational(1));
        if (img.size() > best_deg) continue;  // unlucky prime
        uint64_t gmod = mpz_fdiv_ui(gamma.get_mpz_t(), p);
        for (auto& c : img) c = mulmod_u64(c, gmod, p);
        if (img.size() < best_deg) {
            best_deg = img.size();
            crt.assign(img.size(), BigInt(0));
            crt_mod = 1;
            have_last = false;
        }
        // CRT-combine this image into the accumulated residues.
        uint64_t minv = invmod_u64(mpz_fdiv_ui(crt_mod.get_mpz_t(), p), p);
        for (size_t i = 0; i < crt.size(); ++i) {
            uint64_t xi = mpz_fdiv_ui(crt[i].get_mpz_t(), p);
            uint64_t ri = img[i];
            uint64_t t = mulmod_u64((ri >= xi) ? ri - xi : ri + p - xi, minv, p);
            crt[i] += crt_mod * t;
        }
        crt_mod *= p;

        std::vector<BigInt> lift(crt.size());
        BigInt half = crt_mod / 2;
        for (size_t i = 0; i < crt.size(); ++i) lift[i] = (crt[i] > half) ? BigInt(crt[i] - crt_mod) : crt[i];
        bool stable = have_last && lift == last_lift;
        last_lift = lift;
        have_last = true;
        if (!stable && crt_mod > (BigInt(1) << 62)) {
            // From the second prime on, attempt division even before the lift
            // stabilizes; a wrong candidate fails at the first non-divisible
            // coefficient.
            stable = true;
        }
        if (stable) {
            Poly cand = poly_primitive(poly_of(lift)).second;
            if (cand.is_zero()) continue;
            ZVec zc = zvec_of(cand);
            ZVec q;
            if (zvec_div_exact(za, zc, &q) && zvec_div_exact(zb, zc, &q)) {
                return poly_monic(cand);
            }
        }
    }
    // Plenty of 62-bit primes above; reaching this means pathological inputs.
    return gcd_rational_euclid(a, b);
}

Poly poly_pow(const Poly& base, unsigned e) {
    Poly acc{Rational(1)};
    Poly sq = base;
    while (e) {
        if (e & 1) acc *= sq;
        e >>= 1;
        if (e) sq *= sq;
    }
    return acc;
}

PolyExtGcd poly_ext_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0)");
    Poly r0 = a, r1 = b;
    Poly s0{Rational(1)}, s1{};
    Poly t0{}, t1{Rational(1)};
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divrem(r0, r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Rational inv = Rational(1) / r0.leading();
    r0 *= inv;
    s0 *= inv;
    t0 *= inv;
    return {std::move(r0), std::move(s0), std::move(t0)};
}

Poly poly_invmod(const Poly& a, const Poly& m) {
    if (m.is_zero() || m.is_constant()) throw std::domain_error("invmod: modulus must be nonconstant");
    Poly ar = poly_mod(a, m);
    if (ar.is_zero()) throw std::domain_error("invmod: not invertible");
    PolyExtGcd e = poly_ext_gcd(ar, m);
    if (!e.g.is_constant()) throw std::domain_error("invmod: not invertible (gcd nonconstant)");
    return poly_mod(e.s, m);
}

}  // namespace qsc
