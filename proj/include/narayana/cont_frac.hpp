#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "narayana/ball.hpp"

namespace narayana {

// Certified continued-fraction expansion: every partial quotient g_k is the
// true floor of the k-th complete quotient (the enclosure never straddled an
// integer at the precision that produced it).
struct CFExpansion {
    std::vector<mpz_class> quotients;                        // g_0 .. g_K
    std::vector<std::pair<mpz_class, mpz_class>> convergents;  // (p_k, q_k)
    mpfr_prec_t precision_bits = 0;
    bool complete = false;  // exact rational input fully expanded
    RealFn source;          // set for expandable inputs; used to auto-extend
};

// Expands x until some q_k > q_target (plus extra_after further quotients),
// escalating precision (restarting from scratch) when a quotient cannot be
// certified.  Certified quotients are unique, so re-runs agree on every
// previously certified index.
CFExpansion cf_expand(const RealFn& x, const mpz_class& q_target,
                      mpfr_prec_t start_prec = kDefaultPrecision,
                      mpfr_prec_t cap = kPrecisionCap, std::size_t extra_after = 0);

// Exact expansion of p/q by the Euclidean algorithm (for tests and rational
// inputs; the canonical form with last quotient >= 2 where applicable).
CFExpansion cf_expand_rational(const mpz_class& p, const mpz_class& q);

// First convergent with q > bound; auto-extends through exp.source if the
// expansion is too short.
std::pair<mpz_class, mpz_class> convergent_exceeding(CFExpansion& exp,
                                                     const mpz_class& bound);
// Index of that convergent within exp.convergents.
std::size_t convergent_index_exceeding(CFExpansion& exp, const mpz_class& bound);

// max{g_j : j <= K+1}; requires K+2 quotients.
mpz_class max_partial_quotient(const CFExpansion& exp, std::size_t K);

struct LegendreVerdict {
    // 1/((g+2) q^2) < |x - p/q|, when certifiable either way.
    std::optional<bool> lower_bound_holds;
    // |x - p/q| < 1/(2 q^2): Legendre's convergent criterion trigger.
    std::optional<bool> within_half_qsq;
    // p/q literally equals one of the expansion's convergents.
    bool is_convergent = false;
};

LegendreVerdict legendre_quality(const Ball& x, const mpz_class& p, const mpz_class& q,
                                 const mpz_class& g, const CFExpansion* exp = nullptr);

}  // namespace narayana
