#pragma once

#include <map>

#include "narayana/ball.hpp"
#include "narayana/heights.hpp"
#include "narayana/narayana_core.hpp"

namespace narayana {

// Relative bounds between the exponents of one solution, as published,
// certified against the growth chains before being returned.
//   l  <= 2n - 2      (from N_n N_m <= alpha^{2n-2} < 1.5^{2n-2})
//   n  <= 11 l + 1    (from alpha^{n-3} <= N_n < 50^l)
//   l1 <= k - 1       (from b^{l1-1} < N_k <= alpha^{k-1})
//   k  <= 22 l2 + 1   (from alpha^{k-3} < N_k < 50^{2 l2})
long relative_l_max_eq2(long n);
long relative_n_max_eq2(long l, mpfr_prec_t prec = kDefaultPrecision);
long relative_l1_max_eq3(long k);
long relative_k_max_eq3(long l2, mpfr_prec_t prec = kDefaultPrecision);
// Per-base refinement of the k bound: k < 2 l2 log b / log alpha + 3.
long k_cap_for_base(int b, long l2_max, mpfr_prec_t prec = kDefaultPrecision);

// x / log^m x < T and T > (4 m^2)^m  imply  x < 2^m T log^m T.
// Throws std::domain_error when the precondition fails.
Ball sanchez_reduce(int order, const Ball& T);

// Global multiplicative constants of the two bound chains, derived from the
// Matveev product at the given precision.  Published in the same functional
// form as the paper's figures so the per-base bounds follow by evaluation.
struct DerivedConstants {
    mpfr_prec_t precision_bits;
    Ball matveev_factor;  // 1.4*30^6*3^4.5*9*(1+log 3), ~2.7044e12
    Ball c3;              // l1 < c3 log(l2) log(b)         [paper: 3e14]
    Ball K2;              // l2 / log^2(l2) < K2 log^2(b)
    Ball C_l2;            // l2 <= C_l2 log^3(b)            [paper: 1e33]
    Ball c1;              // m < c1 log(n) log^2(b)         [paper: 1.7e15]
    Ball K3;              // n / log^2(n) < K3 log^3(b)
    Ball C_n;             // n <= C_n log^5(b)              [paper: 2.99e33]
    bool paper_ceilings_ok;  // each constant <= the paper figure
    bool paper_floors_ok;    // and >= one tenth of it
};

const DerivedConstants& derived_constants(mpfr_prec_t prec = kDefaultPrecision);

// Per-base absolute bounds, evaluated from the derived constants.
struct AbsoluteBoundsEntry {
    int b;
    // eq3
    mpz_class l1_max;
    mpz_class l2_max;
    mpz_class k_max;
    // eq2
    mpz_class m_max;
    mpz_class n_max;
    bool paper_ceiling_ok;
};

enum class Equation { eq2, eq3 };

struct AbsoluteBounds {
    Equation equation;
    std::map<int, AbsoluteBoundsEntry> per_base;
};

AbsoluteBoundsEntry derive_eq3_bounds(int b, mpfr_prec_t prec = kDefaultPrecision);
AbsoluteBoundsEntry derive_eq2_bounds(int b, mpfr_prec_t prec = kDefaultPrecision);
AbsoluteBounds derive_bounds(Equation eq, int b_lo, int b_hi,
                             mpfr_prec_t prec = kDefaultPrecision);

// The auxiliary replacements used before comparing the Matveev bound with
// the |Lambda| upper bounds; certified on a geometric grid over the full
// relevant ranges (each difference is increasing, so grid checks suffice).
//   1 + log(22 l2 + 4) < 8 log l2   for l2 >= 2
//   1 + log(2 n + 4)   < 5 log n    for n >= 3
//   1 + log(2 n + 2)   < 5 log n    for n >= 3
bool verify_log_replacements(mpfr_prec_t prec = kDefaultPrecision);

}  // namespace narayana
