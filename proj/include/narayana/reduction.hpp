#pragma once

#include <map>
#include <string>
#include <vector>

#include "narayana/baker_bounds.hpp"
#include "narayana/ball.hpp"
#include "narayana/cont_frac.hpp"

namespace narayana {

enum class DPLabel { eq3_l1, eq3_l2, eq2_m, eq2_n };
const char* dp_label_name(DPLabel label);

// Identifies one Dujella-Petho instance.  a1 doubles as the single digit a
// for the eq2 families; l1/m are set only where the family uses them.
struct DPInstanceKey {
    DPLabel label;
    int b = 0;
    int a1 = 0;
    int a2 = 0;
    long l1 = -1;
    long m = -1;
};

// |u tau - v + mu| < A B^{-w} with u <= M; reduction data for one instance.
struct DPInstance {
    DPInstanceKey key;
    RealFn tau;
    RealFn mu;
    RealFn log_B;
    mpz_class M;
    long A = 0;
};

struct DPOutcome {
    enum class Status { reduced, fallback_needed };
    Status status = Status::fallback_needed;
    Ball epsilon;            // certified positive when reduced
    mpz_class p_used, q_used;
    long reduced_w = -1;     // solutions have w <= reduced_w
    int attempts = 0;        // convergents examined
    mpfr_prec_t precision_bits = 0;
};

struct LegendreOutcome {
    mpz_class g;        // max partial quotient up to the first q_K > l_max
    long n_bound = -1;  // floor(log(32 (g+2) l_max) / log alpha)
    std::size_t quotients_scanned = 0;
};

// Retry policy: after the first convergent with q > 6M fails the epsilon > 0
// test, up to this many further convergents are tried before declaring a
// fallback.
inline constexpr int kDefaultConvergentRetries = 10;

DPOutcome dp_reduce(const DPInstance& inst, mpfr_prec_t start_prec = kDefaultPrecision,
                    int retries = kDefaultConvergentRetries);

// Instance builders (also usable standalone through dp_reduce).
DPInstance make_eq3_l1_instance(int b, int a1, int a2,
                                mpfr_prec_t prec = kDefaultPrecision);
DPInstance make_eq3_l2_instance(int b, int a1, int a2, long l1,
                                mpfr_prec_t prec = kDefaultPrecision);
DPInstance make_eq2_m_instance(int b, int a, mpfr_prec_t prec = kDefaultPrecision);
DPInstance make_eq2_n_instance(int b, int a, long m,
                               mpfr_prec_t prec = kDefaultPrecision);

DPOutcome reduce_eq3_l1(int b, int a1, int a2, mpfr_prec_t prec = kDefaultPrecision);
DPOutcome reduce_eq3_l2(int b, int a1, int a2, long l1,
                        mpfr_prec_t prec = kDefaultPrecision);
DPOutcome reduce_eq2_m(int b, int a, mpfr_prec_t prec = kDefaultPrecision);
DPOutcome reduce_eq2_n(int b, int a, long m, mpfr_prec_t prec = kDefaultPrecision);

// Legendre-criterion closure for instances the DP step could not reduce:
// g = max partial quotient of log b / log alpha over the quotients up to the
// first denominator > l_max, and n_bound from alpha^n < 32 (g+2) l_max.
LegendreOutcome legendre_fallback(int b, int a, long m, const mpz_class& l_max,
                                  mpfr_prec_t prec = kDefaultPrecision);
// floor(log(32 (g+2) l_max) / log alpha), the bound the fallback applies.
long legendre_n_bound(const mpz_class& g, const mpz_class& l_max,
                      mpfr_prec_t prec = kDefaultPrecision);

// Replayable record of one reduction instance.
struct DPCertificate {
    DPInstanceKey key;
    mpz_class M;
    long A = 0;
    std::string B;  // "b" or "alpha"
    mpfr_prec_t tau_precision_bits = 0;
    mpz_class p, q;
    std::string epsilon_mid, epsilon_rad;
    long reduced_w = -1;
    bool fallback = false;
    mpz_class g;         // fallback only
    long n_bound = -1;   // fallback only
    int attempts = 0;
};

struct FallbackRecord {
    int b = 0;
    int a = 0;
    long m = -1;
    mpz_class g;
    long n_bound = -1;
};

struct SweepResult {
    Equation equation;
    mpfr_prec_t precision_bits = 0;
    unsigned long long instances = 0;
    unsigned long long retried = 0;  // needed more than the first convergent
    // eq3 aggregates
    long l1_max = 0;
    long l2_max = 0;
    std::map<int, long> l1_max_by_b;
    std::map<int, long> l2_max_by_b;
    std::map<int, long> k_cap_by_b;  // per-base search cap from l2_max_by_b
    long k_max = 0;                  // max of k_cap_by_b
    // eq2 aggregates
    long m_max = 0;
    long n_max = 0;  // over reduced instances
    std::map<int, long> m_max_by_b;
    std::map<int, long> n_max_by_b;
    std::vector<FallbackRecord> fallbacks;
    long fallback_n_bound_max = 0;
    // extremal + fallback + stride-sampled instances, replayable
    std::vector<DPCertificate> certificates;
};

// Runs every instance of one equation family over b_lo..b_hi, aggregating
// maxima and emitting certificates.  Deterministic for a fixed precision
// schedule regardless of thread count.
SweepResult reduction_sweep(Equation eq, int b_lo = 2, int b_hi = 50,
                            mpfr_prec_t prec = kDefaultPrecision, int threads = 1,
                            unsigned long long sample_stride = 20000);

}  // namespace narayana
