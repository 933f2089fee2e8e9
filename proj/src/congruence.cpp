#include "qsc/congruence.hpp"

#include <sstream>

namespace qsc {

namespace {

FactorCheck check_factor(const RatFunc& D, const Poly& f, const std::string& label, int required) {
    FactorCheck out;
    out.factor = label;
    out.required = required;
    if (!poly_gcd(D.den(), f).is_constant()) {
        out.den_coprime = false;
        out.den_valuation = poly_valuation(D.den(), f);
        return out;
    }
    out.achieved = D.is_zero() ? required : poly_valuation(D.num(), f);
    return out;
}

}  // namespace

CongruenceReport check_congruence(const RatFunc& D, const FactoredModulus& M) {
    CongruenceReport report;
    if (D.is_zero()) report.notes = "difference is identically zero";
    bool all_ok = true;
    for (const auto& [d, e] : M.cyclotomic_factors) {
        FactorCheck fc = check_factor(D, cyclotomic(d), "Phi_" + std::to_string(d), e);
        all_ok = all_ok && fc.ok();
        report.denominator_coprime = report.denominator_coprime && fc.den_coprime;
        report.per_factor.push_back(std::move(fc));
    }
    for (const auto& f : M.extra_factors) {
        FactorCheck fc = check_factor(D, f, f.str(), 1);
        all_ok = all_ok && fc.ok();
        report.denominator_coprime = report.denominator_coprime && fc.den_coprime;
        report.per_factor.push_back(std::move(fc));
    }
    report.pass = all_ok;
    return report;
}

Poly poly_crt(const std::vector<std::pair<Poly, Poly>>& residue_modulus) {
    if (residue_modulus.empty()) throw std::domain_error("poly_crt: empty input");
    for (const auto& [r, m] : residue_modulus) {
        if (m.is_zero() || m.is_constant()) throw std::domain_error("poly_crt: modulus must be nonconstant");
    }
    Poly result = poly_mod(residue_modulus[0].first, residue_modulus[0].second);
    Poly modulus = residue_modulus[0].second;
    for (size_t i = 1; i < residue_modulus.size(); ++i) {
        const auto& [ri, mi] = residue_modulus[i];
        PolyExtGcd e = poly_ext_gcd(modulus, mi);
        if (!e.g.is_constant()) throw std::domain_error("poly_crt: moduli are not coprime");
        // result + modulus * s * (ri - result) = ri (mod mi), unchanged mod modulus.
        Poly correction = poly_mod(e.s * (ri - result), mi);
        result += modulus * correction;
        modulus *= mi;
        result = poly_mod(result, modulus);
    }
    return result;
}

Poly poly_one_minus_aqn(const Rational& a, int n) {
    return Poly(Rational(1)) - Poly::monomial(a, n);
}

Poly poly_a_minus_qn(const Rational& a, int n) {
    return Poly(a) - Poly::monomial(Rational(1), n);
}

std::pair<CongruenceReport, CongruenceReport> check_crt_weights(const Rational& a, const Rational& b,
                                                                int n) {
    Rational denom = (a - b) * (Rational(1) - a * b);
    if (denom == 0) throw degeneracy_error("crt weights: (a - b)(1 - ab) = 0");
    if (a == 0 || b == 0 || a == 1 || a == -1 || b == 1 || b == -1) {
        throw degeneracy_error("crt weights: parameters must avoid {0, 1, -1}");
    }
    Poly one_minus_aqn = poly_one_minus_aqn(a, n);
    Poly a_minus_qn = poly_a_minus_qn(a, n);
    Poly b_minus_qn = Poly(b) - Poly::monomial(Rational(1), n);

    // (ab - 1 - a^2 + a q^n)
    Poly bracket = Poly(a * b - 1 - a * a) + Poly::monomial(a, n);

    Rational inv = Rational(1) / denom;
    RatFunc w1(inv * (b_minus_qn * bracket), Poly(Rational(1)));
    RatFunc w2(inv * (one_minus_aqn * a_minus_qn), Poly(Rational(1)));

    FactoredModulus m1 = make_modulus({}, {one_minus_aqn, a_minus_qn});
    FactoredModulus m2 = make_modulus({}, {b_minus_qn});

    return {check_congruence(w1 - RatFunc(1L), m1), check_congruence(w2 - RatFunc(1L), m2)};
}

}  // namespace qsc
