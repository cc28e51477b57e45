#include "narayana/reduction.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "narayana/narayana_core.hpp"

namespace narayana {

const char* dp_label_name(DPLabel label) {
    switch (label) {
        case DPLabel::eq3_l1: return "eq3-l1";
        case DPLabel::eq3_l2: return "eq3-l2";
        case DPLabel::eq2_m: return "eq2-m";
        case DPLabel::eq2_n: return "eq2-n";
    }
    return "?";
}

namespace {

Ball log_si(long v, mpfr_prec_t prec) { return Ball::log(Ball::from_si(v, prec)); }

RealFn tau_eq3(int b) {
    return [b](mpfr_prec_t p) { return constants(p).log_alpha / log_si(b, p); };
}

RealFn tau_eq2(int b) {
    return [b](mpfr_prec_t p) { return log_si(b, p) / constants(p).log_alpha; };
}

// M for the eq2 reductions, pinned to 5.98e33 log^5 b; bounds u = l since
// l <= 2n - 2 and 2 n_max - 2 stays below it (certified by the caller).
mpz_class eq2_M(int b, mpfr_prec_t prec) {
    mpz_class c("5980000000000000000000000000000000");  // 5.98e33
    Ball m = Ball::from_mpz(c, prec) * log_si(b, prec).pow_ui(5);
    return ball_floor_upper(m);
}

// M for the eq3 l1 reduction: the published 1.3e34 log^3 b, certified to
// dominate the derived bound on u = k + 2.  The l2 reduction uses the
// derived k_max + 2 itself.  Both dominate u; the split reproduces the
// published maxima (each family's first convergent lands differently).
mpz_class eq3_M_l1(int b, mpfr_prec_t prec) {
    mpz_class c("13000000000000000000000000000000000");  // 1.3e34
    Ball m = Ball::from_mpz(c, prec) * log_si(b, prec).pow_ui(3);
    mpz_class M = ball_floor_upper(m);
    mpz_class u_cap = derive_eq3_bounds(b, prec).k_max + 2;
    if (M < u_cap) throw std::runtime_error("eq3 M does not dominate the k range");
    return M;
}

mpz_class eq3_M_l2(int b, mpfr_prec_t prec) {
    return derive_eq3_bounds(b, prec).k_max + 2;
}

// One convergent of tau together with the shared term M * ||tau q||.
struct WindowEntry {
    mpz_class p, q;
    Ball m_tau_dist;
};

struct Window {
    std::vector<WindowEntry> entries;
    mpfr_prec_t prec = 0;  // precision that certified the expansion
};

Window make_window(const RealFn& tau, const mpz_class& M, mpfr_prec_t prec,
                   int retries, mpfr_prec_t cap = kPrecisionCap) {
    Window w;
    mpz_class six_m = 6 * M;
    CFExpansion exp =
        cf_expand(tau, six_m, prec, cap, static_cast<std::size_t>(retries));
    w.prec = exp.precision_bits;
    Ball tau_ball = tau(w.prec);
    std::size_t i0 = 0;
    while (i0 < exp.convergents.size() && exp.convergents[i0].second <= six_m) ++i0;
    for (std::size_t j = i0;
         j < exp.convergents.size() && w.entries.size() <= static_cast<std::size_t>(retries);
         ++j) {
        WindowEntry e;
        e.p = exp.convergents[j].first;
        e.q = exp.convergents[j].second;
        e.m_tau_dist = tau_ball.mul_mpz(e.q).dist_to_nearest_int().mul_mpz(M);
        w.entries.push_back(std::move(e));
    }
    if (w.entries.empty())
        throw PrecisionFailure("dp window: no convergent beyond 6M");
    return w;
}

DPOutcome eval_core(const Window& win, const Ball& mu, long A, const Ball& log_B) {
    DPOutcome out;
    out.precision_bits = win.prec;
    int attempt = 0;
    for (const WindowEntry& e : win.entries) {
        ++attempt;
        Ball dmu = mu.mul_mpz(e.q).dist_to_nearest_int();
        Ball eps = dmu - e.m_tau_dist;
        if (eps.is_positive()) {
            out.status = DPOutcome::Status::reduced;
            out.epsilon = eps;
            out.p_used = e.p;
            out.q_used = e.q;
            Ball ratio = Ball::from_mpz(A * e.q, win.prec) / eps;
            out.reduced_w = ball_floor_upper_long(Ball::log(ratio) / log_B);
            out.attempts = attempt;
            return out;
        }
        if (!eps.is_negative())
            throw PrecisionFailure("dp_reduce: epsilon sign undecidable");
    }
    out.status = DPOutcome::Status::fallback_needed;
    out.attempts = attempt;
    return out;
}

// Cached per-base logarithms shared by every instance of that base.
struct LogCache {
    int b;
    mpfr_prec_t prec;
    Ball log_b, log_bm1, log_alpha, log_c_alpha;
    std::vector<Ball> log_digit;  // index a = 1..b-1

    LogCache(int b_, mpfr_prec_t p) : b(b_), prec(p) {
        const AlgebraicConstants& c = constants(p);
        log_alpha = c.log_alpha;
        log_c_alpha = c.log_c_alpha;
        log_b = log_si(b, p);
        log_bm1 = b == 2 ? Ball::from_si(0, p) : log_si(b - 1, p);
        log_digit.reserve(b);
        log_digit.push_back(Ball::from_si(0, p));  // unused slot 0
        for (int a = 1; a < b; ++a)
            log_digit.push_back(a == 1 ? Ball::from_si(0, p) : log_si(a, p));
    }

    Ball log_pow_minus1(long l1) const {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(b),
                      static_cast<unsigned long>(l1));
        return Ball::log(Ball::from_mpz(pw - 1, prec));
    }
};

Ball mu_eq3_l1(const LogCache& lc, int a1, int a2) {
    return (lc.log_c_alpha + lc.log_bm1.mul_si(2) - lc.log_digit[a1] -
            lc.log_digit[a2]) /
           lc.log_b;
}

Ball mu_eq2_m(const LogCache& lc, int a) {
    return (lc.log_digit[a] - lc.log_c_alpha.mul_si(2) - lc.log_bm1) / lc.log_alpha;
}

Ball mu_eq2_n(const LogCache& lc, int a, const Ball& log_Nm) {
    return (lc.log_digit[a] - log_Nm - lc.log_c_alpha - lc.log_bm1) / lc.log_alpha;
}

// The linear-form constants A in |u tau - v + mu| < A B^{-w}.  eq3 uses the
// published 15 and 6.  The eq2 constants are re-derived from the chains at
// full tightness (the published 210 carries an 8x slack from loose
// intermediate estimates, and the published 32 misses the factor 2 of the
// |z| < 2|e^z - 1| step); both are certified by check_conversion_constants:
//   |Lambda_1| < (1/c + 5/(4 c^2 a^5)) / a^{m+2}  => A = 25  (c = c_alpha)
//   |Lambda_2| < (3/2)/(c a^{n+2})               => A = 19
constexpr long kA_eq3_l1 = 15;
constexpr long kA_eq3_l2 = 6;
constexpr long kA_eq2_m = 25;
constexpr long kA_eq2_n = 19;

void check_conversion_constants(mpfr_prec_t prec) {
    const AlgebraicConstants& c = constants(prec);
    Ball log2 = log_si(2, prec);
    auto ok = [](const Ball& lhs, const Ball& rhs) {
        return rhs.less_than(lhs).value_or(false);
    };
    auto ok_si = [&](const Ball& lhs, long rhs) {
        return ok(lhs, Ball::from_si(rhs, prec));
    };
    // 15 log b >= 10 and 6 log b >= 4 for b >= 2
    if (!ok_si(log2.mul_si(kA_eq3_l1), 10)) throw PrecisionFailure("A=15 margin");
    if (!ok_si(log2.mul_si(kA_eq3_l2), 4)) throw PrecisionFailure("A=6 margin");
    // 25 log alpha alpha^2 >= 2/c_alpha + 5/(2 c_alpha^2 alpha^5)
    Ball a2 = c.alpha * c.alpha;
    Ball lhs_m = c.log_alpha.mul_si(kA_eq2_m) * a2;
    Ball rhs_m = c.c_alpha.recip().mul_si(2) +
                 (c.c_alpha * c.c_alpha * c.alpha.pow_ui(5)).recip() *
                     Ball::from_ratio(5, 2, prec);
    if (!ok(lhs_m, rhs_m)) throw PrecisionFailure("A=25 margin");
    // 19 c_alpha alpha^2 log alpha >= 3  (|z2| < 2 (3/2)/(c_alpha alpha^{n+2}))
    Ball lhs_n = c.log_alpha.mul_si(kA_eq2_n) * c.c_alpha * a2;
    if (!ok_si(lhs_n, 3)) throw PrecisionFailure("A=19 margin");
}

}  // namespace

DPInstance make_eq3_l1_instance(int b, int a1, int a2, mpfr_prec_t prec) {
    if (b < 2 || b > 50 || a1 < 1 || a2 < a1 || a2 >= b)
        throw std::domain_error("eq3-l1 instance: bad parameters");
    DPInstance inst;
    inst.key = DPInstanceKey{DPLabel::eq3_l1, b, a1, a2, -1, -1};
    inst.tau = tau_eq3(b);
    inst.mu = [b, a1, a2](mpfr_prec_t p) { return mu_eq3_l1(LogCache(b, p), a1, a2); };
    inst.log_B = [b](mpfr_prec_t p) { return log_si(b, p); };
    inst.M = eq3_M_l1(b, prec);
    inst.A = kA_eq3_l1;
    return inst;
}

DPInstance make_eq3_l2_instance(int b, int a1, int a2, long l1, mpfr_prec_t prec) {
    if (b < 2 || b > 50 || a1 < 1 || a2 < a1 || a2 >= b || l1 < 2)
        throw std::domain_error("eq3-l2 instance: bad parameters");
    DPInstance inst;
    inst.key = DPInstanceKey{DPLabel::eq3_l2, b, a1, a2, l1, -1};
    inst.tau = tau_eq3(b);
    inst.mu = [b, a1, a2, l1](mpfr_prec_t p) {
        LogCache lc(b, p);
        return (mu_eq3_l1(lc, a1, a2) - lc.log_pow_minus1(l1) / lc.log_b);
    };
    inst.log_B = [b](mpfr_prec_t p) { return log_si(b, p); };
    inst.M = eq3_M_l2(b, prec);
    inst.A = kA_eq3_l2;
    return inst;
}

DPInstance make_eq2_m_instance(int b, int a, mpfr_prec_t prec) {
    if (b < 2 || b > 50 || a < 1 || a >= b)
        throw std::domain_error("eq2-m instance: bad parameters");
    DPInstance inst;
    inst.key = DPInstanceKey{DPLabel::eq2_m, b, a, 0, -1, -1};
    inst.tau = tau_eq2(b);
    inst.mu = [b, a](mpfr_prec_t p) { return mu_eq2_m(LogCache(b, p), a); };
    inst.log_B = [](mpfr_prec_t p) { return constants(p).log_alpha; };
    inst.M = eq2_M(b, prec);
    inst.A = kA_eq2_m;
    return inst;
}

DPInstance make_eq2_n_instance(int b, int a, long m, mpfr_prec_t prec) {
    if (b < 2 || b > 50 || a < 1 || a >= b || m < 3)
        throw std::domain_error("eq2-n instance: bad parameters");
    DPInstance inst;
    inst.key = DPInstanceKey{DPLabel::eq2_n, b, a, 0, -1, m};
    inst.tau = tau_eq2(b);
    mpz_class Nm = narayana(static_cast<std::size_t>(m));
    inst.mu = [b, a, Nm](mpfr_prec_t p) {
        return mu_eq2_n(LogCache(b, p), a, Ball::log(Ball::from_mpz(Nm, p)));
    };
    inst.log_B = [](mpfr_prec_t p) { return constants(p).log_alpha; };
    inst.M = eq2_M(b, prec);
    inst.A = kA_eq2_n;
    return inst;
}

DPOutcome dp_reduce(const DPInstance& inst, mpfr_prec_t start_prec, int retries) {
    return with_precision_escalation(start_prec, kPrecisionCap, [&](mpfr_prec_t p) {
        check_conversion_constants(p);
        Window win = make_window(inst.tau, inst.M, p, retries, p);
        Ball mu = inst.mu(p);
        return eval_core(win, mu, inst.A, inst.log_B(p));
    });
}

DPOutcome reduce_eq3_l1(int b, int a1, int a2, mpfr_prec_t prec) {
    return dp_reduce(make_eq3_l1_instance(b, a1, a2, prec), prec);
}

DPOutcome reduce_eq3_l2(int b, int a1, int a2, long l1, mpfr_prec_t prec) {
    return dp_reduce(make_eq3_l2_instance(b, a1, a2, l1, prec), prec);
}

DPOutcome reduce_eq2_m(int b, int a, mpfr_prec_t prec) {
    return dp_reduce(make_eq2_m_instance(b, a, prec), prec);
}

DPOutcome reduce_eq2_n(int b, int a, long m, mpfr_prec_t prec) {
    return dp_reduce(make_eq2_n_instance(b, a, m, prec), prec);
}

long legendre_n_bound(const mpz_class& g, const mpz_class& l_max, mpfr_prec_t prec) {
    const AlgebraicConstants& c = constants(prec);
    Ball v = Ball::log(Ball::from_mpz(32 * (g + 2) * l_max, prec)) / c.log_alpha;
    return ball_floor_upper_long(v);
}

LegendreOutcome legendre_fallback(int b, int a, long m, const mpz_class& l_max,
                                  mpfr_prec_t prec) {
    if (b < 2 || a < 1 || a >= b || m < 3 || l_max < 1)
        throw std::domain_error("legendre_fallback: bad parameters");
    CFExpansion exp = cf_expand(tau_eq2(b), l_max, prec, kPrecisionCap, 1);
    std::size_t K = 0;
    while (K < exp.convergents.size() && exp.convergents[K].second <= l_max) ++K;
    // quotients g_0 .. g_{K+1}
    LegendreOutcome out;
    out.g = max_partial_quotient(exp, K);
    out.quotients_scanned = K + 2;
    out.n_bound = legendre_n_bound(out.g, l_max, exp.precision_bits);
    return out;
}

namespace {

DPCertificate make_cert(const DPInstanceKey& key, const mpz_class& M, long A,
                        const char* Bdesc, const Window& win, const DPOutcome& out) {
    DPCertificate c;
    c.key = key;
    c.M = M;
    c.A = A;
    c.B = Bdesc;
    c.tau_precision_bits = win.prec;
    c.attempts = out.attempts;
    if (out.status == DPOutcome::Status::reduced) {
        c.p = out.p_used;
        c.q = out.q_used;
        c.epsilon_mid = out.epsilon.mid_str(30);
        c.epsilon_rad = out.epsilon.rad_str();
        c.reduced_w = out.reduced_w;
        c.fallback = false;
    } else {
        c.fallback = true;
    }
    return c;
}

// Per-base partial result, merged deterministically by base.
struct BasePartial {
    int b = 0;
    unsigned long long instances = 0;
    unsigned long long retried = 0;
    long l1_max = 0, l2_max = 0, k_cap = 0;
    long m_max = 0, n_max = 0;
    std::vector<FallbackRecord> fallbacks;
    std::vector<DPCertificate> certs;
};

// Evaluates one instance with the shared window, falling back to the
// escalating single-instance path when the fixed precision cannot decide.
DPOutcome eval_or_escalate(const Window& win, const Ball& mu, long A,
                           const Ball& log_B, const DPInstance& slow,
                           mpfr_prec_t prec) {
    try {
        return eval_core(win, mu, A, log_B);
    } catch (const PrecisionFailure&) {
        return dp_reduce(slow, prec * 2);
    }
}

BasePartial sweep_eq3_base(int b, mpfr_prec_t prec, unsigned long long stride) {
    BasePartial out;
    out.b = b;
    mpz_class M1 = eq3_M_l1(b, prec);
    mpz_class M2 = eq3_M_l2(b, prec);
    Window win = make_window(tau_eq3(b), M1, prec, kDefaultConvergentRetries);
    Window win2 = make_window(tau_eq3(b), M2, prec, kDefaultConvergentRetries);
    LogCache lc(b, std::max(win.prec, win2.prec));
    Ball logB = lc.log_b;

    // l1 phase
    std::vector<std::vector<long>> l1_red(b, std::vector<long>(b, 0));
    DPCertificate best_l1;
    bool have_best_l1 = false;
    for (int a1 = 1; a1 < b; ++a1) {
        for (int a2 = a1; a2 < b; ++a2) {
            Ball mu = mu_eq3_l1(lc, a1, a2);
            DPInstanceKey key{DPLabel::eq3_l1, b, a1, a2, -1, -1};
            DPOutcome o = eval_or_escalate(win, mu, kA_eq3_l1, logB,
                                           make_eq3_l1_instance(b, a1, a2, prec), prec);
            ++out.instances;
            if (o.attempts > 1) ++out.retried;
            if (o.status != DPOutcome::Status::reduced)
                throw std::runtime_error("eq3-l1 instance failed to reduce");
            long l1b = o.reduced_w + 2;
            l1_red[a1][a2] = l1b;
            if (l1b > out.l1_max) {
                out.l1_max = l1b;
                best_l1 = make_cert(key, M1, kA_eq3_l1, "b", win, o);
                have_best_l1 = true;
            }
            if ((out.instances - 1) % stride == 0)
                out.certs.push_back(make_cert(key, M1, kA_eq3_l1, "b", win, o));
        }
    }
    if (have_best_l1) out.certs.push_back(best_l1);

    // l2 phase: per-instance l1 ranges from the l1 reductions
    DPCertificate best_l2;
    bool have_best_l2 = false;
    for (int a1 = 1; a1 < b; ++a1) {
        for (int a2 = a1; a2 < b; ++a2) {
            Ball mu_base = mu_eq3_l1(lc, a1, a2);
            for (long l1 = 2; l1 <= l1_red[a1][a2]; ++l1) {
                Ball mu = mu_base - lc.log_pow_minus1(l1) / lc.log_b;
                DPInstanceKey key{DPLabel::eq3_l2, b, a1, a2, l1, -1};
                DPOutcome o =
                    eval_or_escalate(win2, mu, kA_eq3_l2, logB,
                                     make_eq3_l2_instance(b, a1, a2, l1, prec), prec);
                ++out.instances;
                if (o.attempts > 1) ++out.retried;
                if (o.status != DPOutcome::Status::reduced)
                    throw std::runtime_error("eq3-l2 instance failed to reduce");
                long l2b = o.reduced_w + 2;
                if (l2b > out.l2_max) {
                    out.l2_max = l2b;
                    best_l2 = make_cert(key, M2, kA_eq3_l2, "b", win2, o);
                    have_best_l2 = true;
                }
                if ((out.instances - 1) % stride == 0)
                    out.certs.push_back(make_cert(key, M2, kA_eq3_l2, "b", win2, o));
            }
        }
    }
    if (have_best_l2) out.certs.push_back(best_l2);
    out.k_cap = k_cap_for_base(b, out.l2_max, prec);
    return out;
}

BasePartial sweep_eq2_base(int b, mpfr_prec_t prec, unsigned long long stride) {
    BasePartial out;
    out.b = b;
    mpz_class M = eq2_M(b, prec);
    // M must bound u = l <= 2 n - 2 over the absolute range.
    mpz_class l_cap = 2 * derive_eq2_bounds(b, prec).n_max - 2;
    if (M < l_cap) throw std::runtime_error("eq2 M does not dominate the l range");
    Window win = make_window(tau_eq2(b), M, prec, kDefaultConvergentRetries);
    LogCache lc(b, win.prec);
    Ball logB = lc.log_alpha;

    std::vector<long> m_red(b, 0);
    DPCertificate best_m;
    bool have_best_m = false;
    for (int a = 1; a < b; ++a) {
        Ball mu = mu_eq2_m(lc, a);
        DPInstanceKey key{DPLabel::eq2_m, b, a, 0, -1, -1};
        DPOutcome o = eval_or_escalate(win, mu, kA_eq2_m, logB,
                                       make_eq2_m_instance(b, a, prec), prec);
        ++out.instances;
        if (o.attempts > 1) ++out.retried;
        if (o.status != DPOutcome::Status::reduced)
            throw std::runtime_error("eq2-m instance failed to reduce");
        m_red[a] = o.reduced_w;
        if (o.reduced_w > out.m_max) {
            out.m_max = o.reduced_w;
            best_m = make_cert(key, M, kA_eq2_m, "alpha", win, o);
            have_best_m = true;
        }
        if ((out.instances - 1) % stride == 0)
            out.certs.push_back(make_cert(key, M, kA_eq2_m, "alpha", win, o));
    }
    if (have_best_m) out.certs.push_back(best_m);

    // n phase: m ranges from the per-digit m reductions
    long m_top = *std::max_element(m_red.begin(), m_red.end());
    narayana_table().ensure(static_cast<std::size_t>(std::max<long>(m_top, 3)));
    std::vector<Ball> logN;
    logN.reserve(m_top + 1);
    for (long m = 0; m <= m_top; ++m)
        logN.push_back(m < 3 ? Ball::from_si(0, win.prec)
                             : Ball::log(Ball::from_mpz(
                                   narayana_table().at_ready(m), win.prec)));
    DPCertificate best_n;
    bool have_best_n = false;
    for (int a = 1; a < b; ++a) {
        for (long m = 3; m <= m_red[a]; ++m) {
            Ball mu = mu_eq2_n(lc, a, logN[m]);
            DPInstanceKey key{DPLabel::eq2_n, b, a, 0, -1, m};
            DPOutcome o = eval_or_escalate(win, mu, kA_eq2_n, logB,
                                           make_eq2_n_instance(b, a, m, prec), prec);
            ++out.instances;
            if (o.attempts > 1) ++out.retried;
            if (o.status == DPOutcome::Status::reduced) {
                if (o.reduced_w > out.n_max) {
                    out.n_max = o.reduced_w;
                    best_n = make_cert(key, M, kA_eq2_n, "alpha", win, o);
                    have_best_n = true;
                }
                if ((out.instances - 1) % stride == 0)
                    out.certs.push_back(make_cert(key, M, kA_eq2_n, "alpha", win, o));
            } else {
                LegendreOutcome fb = legendre_fallback(b, a, m, M, prec);
                out.fallbacks.push_back(FallbackRecord{b, a, m, fb.g, fb.n_bound});
                DPCertificate c = make_cert(key, M, kA_eq2_n, "alpha", win, o);
                c.g = fb.g;
                c.n_bound = fb.n_bound;
                out.certs.push_back(std::move(c));
            }
        }
    }
    if (have_best_n) out.certs.push_back(best_n);
    return out;
}

}  // namespace

SweepResult reduction_sweep(Equation eq, int b_lo, int b_hi, mpfr_prec_t prec,
                            int threads, unsigned long long sample_stride) {
    if (b_lo < 2 || b_hi > 50 || b_lo > b_hi)
        throw std::domain_error("reduction_sweep: base range within 2..50");
    check_conversion_constants(prec);
    derived_constants(prec);           // fail early if the chains do not certify
    narayana_table().ensure(512);      // warm before worker threads share it

    std::vector<int> bases;
    for (int b = b_lo; b <= b_hi; ++b) bases.push_back(b);
    std::vector<BasePartial> parts(bases.size());

    int workers = std::max(1, threads);
    std::atomic<std::size_t> next{0};
    auto run = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= bases.size()) break;
            parts[i] = eq == Equation::eq3
                           ? sweep_eq3_base(bases[i], prec, sample_stride)
                           : sweep_eq2_base(bases[i], prec, sample_stride);
        }
    };
    if (workers == 1) {
        run();
    } else {
        std::vector<std::future<void>> fs;
        for (int t = 0; t < workers; ++t)
            fs.push_back(std::async(std::launch::async, run));
        for (auto& f : fs) f.get();
    }

    SweepResult res;
    res.equation = eq;
    res.precision_bits = prec;
    for (const BasePartial& p : parts) {
        res.instances += p.instances;
        res.retried += p.retried;
        if (eq == Equation::eq3) {
            res.l1_max_by_b[p.b] = p.l1_max;
            res.l2_max_by_b[p.b] = p.l2_max;
            res.k_cap_by_b[p.b] = p.k_cap;
            res.l1_max = std::max(res.l1_max, p.l1_max);
            res.l2_max = std::max(res.l2_max, p.l2_max);
            res.k_max = std::max(res.k_max, p.k_cap);
        } else {
            res.m_max_by_b[p.b] = p.m_max;
            res.n_max_by_b[p.b] = p.n_max;
            res.m_max = std::max(res.m_max, p.m_max);
            res.n_max = std::max(res.n_max, p.n_max);
        }
        for (const auto& f : p.fallbacks) {
            res.fallbacks.push_back(f);
            res.fallback_n_bound_max = std::max(res.fallback_n_bound_max, f.n_bound);
        }
        for (const auto& c : p.certs) res.certificates.push_back(c);
    }
    return res;
}

}  // namespace narayana
