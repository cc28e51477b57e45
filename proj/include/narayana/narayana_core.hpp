#pragma once

#include <atomic>
#include <mutex>
#include <optional>
#include <vector>

#include "narayana/ball.hpp"

namespace narayana {

// Exact values of N_0, N_1, N_2, ... with N_n = N_{n-1} + N_{n-3}.
// Extension is single-writer (internally locked); reads of already-extended
// indices are lock-free.
class NarayanaTable {
public:
    NarayanaTable();

    // Grows the table so indices 0..n are available.
    void ensure(std::size_t n);
    // Exact N_n; extends on demand.
    const mpz_class& at(std::size_t n);
    // Read-only access, valid only for n < ready(); safe from any thread.
    const mpz_class& at_ready(std::size_t n) const { return values_[n]; }
    std::size_t ready() const { return ready_.load(std::memory_order_acquire); }

private:
    std::vector<mpz_class> values_;
    std::atomic<std::size_t> ready_{0};
    std::mutex grow_mutex_;
};

// Process-wide table shared by the solvers.
NarayanaTable& narayana_table();
// Exact N_n through the shared table.
mpz_class narayana(std::size_t n);

// Certified enclosures of the characteristic-root constants:
//   alpha     : real root of x^3 - x^2 - 1       (~1.46557)
//   beta_abs  : |beta| = |gamma| = alpha^{-1/2}   (~0.82603)
//   c_alpha   : real root of 31x^3 - 31x^2 + 10x - 1, equals 1/(alpha^3+2)
//   c_beta_abs: |c_beta| = (31 c_alpha)^{-1/2}    (~0.40751)
struct AlgebraicConstants {
    mpfr_prec_t precision_bits;
    Ball alpha;
    Ball beta_abs;
    Ball c_alpha;
    Ball c_beta_abs;
    Ball log_alpha;    // cached, used everywhere downstream
    Ball log_c_alpha;
};

// Interval-Newton root isolation at the requested precision; throws
// PrecisionFailure when the enclosures cannot be certified.
AlgebraicConstants compute_constants(mpfr_prec_t precision_bits);

// Cached compute_constants; thread-safe.
const AlgebraicConstants& constants(mpfr_prec_t precision_bits);

// Nearest integer to c_alpha * alpha^{n+2}; throws PrecisionFailure when the
// enclosure straddles a half-integer at the given constants' precision.
mpz_class binet_round(std::size_t n, const AlgebraicConstants& consts);
// binet_round with internal precision escalation up to the cap.
mpz_class binet_round_auto(std::size_t n, mpfr_prec_t start = kDefaultPrecision);

// Upper bound 2 |c_beta| |beta|^{n+2} on |xi(n)| = |N_n - c_alpha alpha^{n+2}|.
// The triangle-inequality form exceeds 1/2 at n = 0 even though |xi(0)| < 1/2;
// callers needing the n = 0 statement use xi_direct_bound.
Ball xi_bound(std::size_t n, const AlgebraicConstants& consts);
// Certified upper bound on |N_n - c_alpha alpha^{n+2}| by direct evaluation.
Ball xi_direct_bound(std::size_t n, const AlgebraicConstants& consts);

struct GrowthReport {
    std::size_t n_max;
    // First n in [1, n_max] with NOT(alpha^{n-2} <= N_n), if any.  The stated
    // lower exponent fails from n = 3 on; kept as a verifier, not an axiom.
    std::optional<std::size_t> first_lower_violation;
    // First n with NOT(N_n <= alpha^{n-1}), if any (none expected).
    std::optional<std::size_t> first_upper_violation;
    // First n in [1, n_max] with NOT(alpha^{n-3} <= N_n), the corrected lower
    // bound that the relative-bound chains rely on (none expected).
    std::optional<std::size_t> first_corrected_lower_violation;
    bool corrected_bounds_ok() const {
        return !first_upper_violation && !first_corrected_lower_violation;
    }
};

// Checks alpha^{n-2} <= N_n <= alpha^{n-1} (as printed) and the sound variant
// alpha^{n-3} <= N_n <= alpha^{n-1} for 1 <= n <= n_max with certified
// directed comparisons.
GrowthReport verify_growth_bounds(std::size_t n_max,
                                  mpfr_prec_t precision_bits = kDefaultPrecision);

}  // namespace narayana
