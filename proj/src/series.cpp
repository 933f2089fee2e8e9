#include "qsc/series.hpp"

namespace qsc {

namespace {

// 1 - x q^e as a Laurent value; zero exactly when x = q^(-e) formally, i.e.
// coef 1 and exponent 0 after shifting.
LaurentPoly one_minus(const QMonomial& x, long long extra_exp) {
    if (x.is_zero()) return LaurentPoly(1L);
    return LaurentPoly(1L) - LaurentPoly::monomial(x.coef, x.qexp + extra_exp);
}

/// Accumulates sum n_k / d_k where the denominators are nested:
/// d_k = d_{k-1} * (new factors). No gcd work until the final reduction.
class NestedSum {
public:
    void push(const LaurentPoly& term_num, const LaurentPoly& new_den_factor) {
        if (new_den_factor.is_zero()) throw degeneracy_error("vanishing denominator factor in sum");
        if (!first_ && !(new_den_factor == LaurentPoly(1L))) {
            num_ *= new_den_factor;
            den_ *= new_den_factor;
        }
        num_ += term_num;
        first_ = false;
    }

    RatFunc finish() const { return ratfunc_reduce(num_, den_); }

private:
    LaurentPoly num_{Poly()};
    LaurentPoly den_{1L};
    bool first_ = true;
};

}  // namespace

RatFunc q_hyper_sum(const SumSpec& spec, int M) {
    if (M < 0) throw std::domain_error("q_hyper_sum: negative truncation");
    NestedSum acc;
    LaurentPoly poch(1L);  // running numerator Pochhammers times argument power
    for (int k = 0; k <= M; ++k) {
        LaurentPoly den_step(1L);
        if (k > 0) {
            long long j = k - 1;
            for (const auto& [x, step] : spec.upper) {
                poch *= one_minus(x, static_cast<long long>(step) * j);
                if (poch.is_zero()) break;
            }
            // argument ratio z_k / z_{k-1} = arg_coef * q^(arg_lin + arg_quad*(2k-1))
            if (spec.arg_coef == 0) throw degeneracy_error("q_hyper_sum: zero argument coefficient");
            poch *= LaurentPoly::monomial(spec.arg_coef, spec.arg_lin + spec.arg_quad * (2 * k - 1));
            for (const auto& [y, step] : spec.lower) {
                LaurentPoly f = one_minus(y, static_cast<long long>(step) * j);
                if (f.is_zero()) throw degeneracy_error("q_hyper_sum: vanishing lower factor");
                den_step *= f;
            }
        }
        LaurentPoly term = poch;
        if (spec.bracket_4k1) term *= LaurentPoly(q_integer(4 * k + 1));
        acc.push(term, den_step);
        if (poch.is_zero() && k < M) {
            // Remaining terms vanish (a terminating upper parameter); the
            // denominator factors stay nonzero, so the sum is already complete.
            break;
        }
    }
    return acc.finish();
}

RatFunc phi_series(const SeriesSpec& spec) {
    if (spec.truncation < 0) throw std::domain_error("phi_series: negative truncation");
    if (spec.base_step < 1) throw std::domain_error("phi_series: base step must be >= 1");
    const int s = spec.base_step;
    const long long comp =
        1 + static_cast<long long>(spec.lower_params.size()) - static_cast<long long>(spec.upper_params.size());

    NestedSum acc;
    LaurentPoly poch(1L);
    for (int k = 0; k <= spec.truncation; ++k) {
        LaurentPoly den_step(1L);
        if (k > 0) {
            long long j = k - 1;
            for (const auto& x : spec.upper_params) {
                poch *= one_minus(x, static_cast<long long>(s) * j);
                if (poch.is_zero()) break;
            }
            if (spec.argument.is_zero()) throw degeneracy_error("phi_series: zero argument");
            poch *= LaurentPoly::monomial(spec.argument.coef, spec.argument.qexp);
            // {(-1)^k Q^binom(k,2)}^comp gains ((-1) Q^(k-1))^comp per step.
            if (comp != 0) {
                Rational sign = (comp % 2 == 0) ? Rational(1) : Rational(-1);
                poch *= LaurentPoly::monomial(sign, comp * static_cast<long long>(s) * j);
            }
            // implicit (Q; Q)_k factor
            den_step *= one_minus(qpow(s), static_cast<long long>(s) * j);
            for (const auto& y : spec.lower_params) {
                LaurentPoly f = one_minus(y, static_cast<long long>(s) * j);
                if (f.is_zero()) throw degeneracy_error("phi_series: vanishing lower-parameter factor");
                den_step *= f;
            }
        }
        // No early exit on a terminating upper parameter: the remaining lower
        // factors are still validated term-by-term.
        acc.push(poch, den_step);
    }
    return acc.finish();
}

// ---------------------------------------------------------------------------
// Identity oracles
// ---------------------------------------------------------------------------

RatFunc chu_vandermonde_lhs(int n, const Rational& b, const Rational& c) {
    SeriesSpec spec;
    spec.upper_params = {qpow(-n), qmon(b)};
    spec.lower_params = {qmon(c)};
    spec.base_step = 1;
    spec.argument = qmon(c / b, n);
    spec.truncation = n;
    return phi_series(spec);
}

RatFunc chu_vandermonde_rhs(int n, const Rational& b, const Rational& c) {
    return ratfunc_reduce(q_shifted_factorial(qmon(c / b), 1, n), q_shifted_factorial(qmon(c), 1, n));
}

RatFunc whipple_lhs(int n, const Rational& b, const Rational& c) {
    SeriesSpec spec;
    spec.upper_params = {qpow(-n), qpow(1 + n), qmon(b), qmon(Rational(-b))};
    spec.lower_params = {qmon(c), qmon(b * b / c, 1), qmon(Rational(-1), 1)};
    spec.base_step = 1;
    spec.argument = qpow(1);
    spec.truncation = n;
    return phi_series(spec);
}

RatFunc whipple_rhs(int n, const Rational& b, const Rational& c) {
    LaurentPoly num = LaurentPoly::monomial(Rational(1), static_cast<long long>(n) * (n + 1) / 2);
    num *= q_shifted_factorial(qmon(b * b / c, 1 - n), 2, n);
    num *= q_shifted_factorial(qmon(c, -n), 2, n);
    LaurentPoly den =
        q_shifted_factorial(qmon(b * b / c, 1), 1, n) * q_shifted_factorial(qmon(c), 1, n);
    return ratfunc_reduce(num, den);
}

RatFunc watson_lhs(int n, const Rational& g, const Rational& b, const Rational& c,
                   const Rational& d, const Rational& e) {
    Rational a = g * g;
    SeriesSpec spec;
    spec.upper_params = {qmon(a),          qmon(g, 1), qmon(Rational(-g), 1), qmon(b),
                         qmon(c),          qmon(d),    qmon(e),               qpow(-n)};
    spec.lower_params = {qmon(g),     qmon(Rational(-g)), qmon(a / b, 1), qmon(a / c, 1),
                         qmon(a / d, 1), qmon(a / e, 1),  qmon(a, n + 1)};
    spec.base_step = 1;
    spec.argument = qmon(a * a / (b * c * d * e), n + 2);
    spec.truncation = n;
    return phi_series(spec);
}

RatFunc watson_rhs(int n, const Rational& g, const Rational& b, const Rational& c,
                   const Rational& d, const Rational& e) {
    Rational a = g * g;
    RatFunc prefactor =
        ratfunc_reduce(q_shifted_factorial(qmon(a, 1), 1, n) *
                           q_shifted_factorial(qmon(a / (d * e), 1), 1, n),
                       q_shifted_factorial(qmon(a / d, 1), 1, n) *
                           q_shifted_factorial(qmon(a / e, 1), 1, n));
    SeriesSpec spec;
    spec.upper_params = {qmon(a / (b * c), 1), qmon(d), qmon(e), qpow(-n)};
    spec.lower_params = {qmon(a / b, 1), qmon(a / c, 1), qmon(d * e / a, -n)};
    spec.base_step = 1;
    spec.argument = qpow(1);
    spec.truncation = n;
    return prefactor * phi_series(spec);
}

}  // namespace qsc
