#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qsc/qobjects.hpp"
#include "qsc/ratfunc.hpp"

namespace qsc {

struct FactorCheck {
    std::string factor;
    int required = 0;
    int achieved = 0;       // valuation of the reduced numerator at this factor
    int den_valuation = 0;  // valuation of the reduced denominator (0 when coprime)
    bool den_coprime = true;

    bool ok() const { return den_coprime && achieved >= required; }
};

struct CongruenceReport {
    bool pass = false;
    std::vector<FactorCheck> per_factor;
    bool denominator_coprime = true;
    std::string notes;
};

/// Decides whether D vanishes modulo M: the denominator must be coprime to
/// every factor, and the numerator must carry at least the required power of
/// each factor. A congruence A = B (mod M) is checked as check_congruence(A - B, M).
CongruenceReport check_congruence(const RatFunc& D, const FactoredModulus& M);

/// Unique r with deg r < sum deg(m_i) and r = r_i (mod m_i); moduli must be
/// pairwise coprime and nonconstant.
Poly poly_crt(const std::vector<std::pair<Poly, Poly>>& residue_modulus);

/// The two weight congruences used by the polynomial Chinese remainder step:
///   (b - q^n)(ab - 1 - a^2 + aq^n) / ((a - b)(1 - ab)) = 1  (mod (1 - aq^n)(a - q^n))
///   (1 - aq^n)(a - q^n) / ((a - b)(1 - ab))            = 1  (mod (b - q^n))
/// Throws degeneracy_error when (a - b)(1 - ab) = 0.
std::pair<CongruenceReport, CongruenceReport> check_crt_weights(const Rational& a, const Rational& b,
                                                                int n);

// Shared helpers for building the weight polynomials.
Poly poly_one_minus_aqn(const Rational& a, int n);  // 1 - a*q^n
Poly poly_a_minus_qn(const Rational& a, int n);     // a - q^n

}  // namespace qsc
