#pragma once

#include <vector>

#include "narayana/ball.hpp"
#include "narayana/narayana_core.hpp"

namespace narayana {

// Upper bound on a logarithmic height h(psi); tracked as a ball >= 0.
struct HeightBound {
    Ball value;
};

// h(p/q) = log max(|p|, q) for the reduced fraction.
HeightBound height_rational(const mpz_class& p, const mpz_class& q,
                            mpfr_prec_t prec = kDefaultPrecision);

enum class HeightCombine { sum, product, power };

// sum: h1 + h2 + log 2; product/quotient: h1 + h2; power s: |s| h.
HeightBound combine_heights(HeightCombine kind, const HeightBound& h1,
                            const HeightBound& h2);
HeightBound combine_heights_power(const HeightBound& h, long s);

// Height bound for psi_3 = c_alpha (b-1)^2 / (a1 a2) used by the first
// factor chain: log(31)/3 + 2 log(b-1), certified < 3 log b.
HeightBound height_psi3_eq3_l1(int b, int a1, int a2,
                               mpfr_prec_t prec = kDefaultPrecision);

// One linear form Lambda = psi_1^{r_1} ... psi_t^{r_t} - 1 fed to the
// Matveev bound.  A_j >= max(D h(psi_j), |log psi_j|, 0.16),
// B >= max |r_j|.
struct LinearFormInstance {
    int t;
    int D;
    std::vector<Ball> A;
    Ball B;
    int label;  // which Lambda (1..4)
};

// Validates the instance invariants (t >= 2, D >= 1, A_j >= 0.16, B >= 1).
void validate_linear_form(const LinearFormInstance& inst);

// log |Lambda| > -1.4 * 30^{t+3} * t^{4.5} * D^2 (1 + log D)(1 + log B)
//                * A_1 ... A_t   (for Lambda != 0).
// Returns the right-hand side (a negative ball).
Ball matveev_log_lower_bound(const LinearFormInstance& inst);

// The constant part -1.4 * 30^{t+3} * t^{4.5} * D^2 (1 + log D) for t = D = 3,
// shared by all four chains (positive magnitude, ~2.7044e12).
Ball matveev_c3d3_magnitude(mpfr_prec_t prec);

// Builders for the four instances used by the solvers.  b is the base; the
// remaining arguments mirror the chains that produce each A_3 and B.
LinearFormInstance lambda3_instance(int b, long l2_for_B, const AlgebraicConstants& c);
LinearFormInstance lambda4_instance(int b, long l1, long l2_for_B,
                                    const AlgebraicConstants& c);
LinearFormInstance lambda1_instance(int b, long n_for_B, const AlgebraicConstants& c);
LinearFormInstance lambda2_instance(int b, long m, long n_for_B,
                                    const AlgebraicConstants& c);

}  // namespace narayana
