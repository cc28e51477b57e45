#include "narayana/narayana_core.hpp"

#include <map>

namespace narayana {

NarayanaTable::NarayanaTable() {
    values_.reserve(1 << 12);
    values_.emplace_back(0);
    values_.emplace_back(1);
    values_.emplace_back(1);
    ready_.store(3, std::memory_order_release);
}

void NarayanaTable::ensure(std::size_t n) {
    if (n < ready()) return;
    std::lock_guard<std::mutex> lock(grow_mutex_);
    std::size_t have = ready_.load(std::memory_order_relaxed);
    if (n < have) return;
    values_.reserve(n + 1);
    for (std::size_t i = have; i <= n; ++i)
        values_.push_back(values_[i - 1] + values_[i - 3]);
    ready_.store(n + 1, std::memory_order_release);
}

const mpz_class& NarayanaTable::at(std::size_t n) {
    ensure(n);
    return values_[n];
}

NarayanaTable& narayana_table() {
    static NarayanaTable table;
    return table;
}

mpz_class narayana(std::size_t n) { return narayana_table().at(n); }

namespace {

// Ball evaluation of a cubic c3 x^3 + c2 x^2 + c1 x + c0 by Horner.
Ball eval_cubic(long c3, long c2, long c1, long c0, const Ball& x) {
    Ball acc = Ball::from_si(c3, x.precision());
    acc = acc * x;
    acc = acc + Ball::from_si(c2, x.precision());
    acc = acc * x;
    acc = acc + Ball::from_si(c1, x.precision());
    acc = acc * x;
    return acc + Ball::from_si(c0, x.precision());
}

// Isolates the unique root of an irreducible cubic inside [lo0, hi0] by sign
// bisection followed by interval Newton, certifying radius <= 2^(8 - prec).
Ball newton_root_cubic(long c3, long c2, long c1, long c0, double lo0, double hi0,
                       mpfr_prec_t prec) {
    mpfr_t lo, hi, m;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    mpfr_init2(m, prec);
    mpfr_set_d(lo, lo0, MPFR_RNDD);
    mpfr_set_d(hi, hi0, MPFR_RNDU);

    auto point = [&](mpfr_srcptr v) {
        Ball b(prec);
        Ball r = Ball::from_si(0, prec);
        mpfr_t tmp;
        mpfr_init2(tmp, prec);
        mpfr_set(tmp, v, MPFR_RNDN);
        r = Ball::from_interval(tmp, tmp, prec);
        mpfr_clear(tmp);
        return r;
    };
    auto sign_at = [&](mpfr_srcptr v) {
        return eval_cubic(c3, c2, c1, c0, point(v)).sign_certified("bracket endpoint");
    };

    int slo = sign_at(lo);
    int shi = sign_at(hi);
    if (slo == 0 || shi == 0 || slo == shi)
        throw PrecisionFailure("newton_root_cubic: invalid bracket");

    // Narrow by bisection until interval Newton's derivative enclosure is
    // comfortably one-signed.
    for (int i = 0; i < 12; ++i) {
        mpfr_add(m, lo, hi, MPFR_RNDN);
        mpfr_div_2ui(m, m, 1, MPFR_RNDN);
        int sm = sign_at(m);
        if (sm == slo)
            mpfr_set(lo, m, MPFR_RNDD);
        else
            mpfr_set(hi, m, MPFR_RNDU);
    }

    mpfr_t target;
    mpfr_init2(target, kMinPrecision);
    mpfr_set_ui_2exp(target, 1, 8 - prec, MPFR_RNDU);

    Ball X = Ball::from_interval(lo, hi, prec);
    // Interval Newton: X' = m - f(m)/f'(X), intersected with X.
    for (int iter = 0; iter < 1000; ++iter) {
        if (mpfr_cmp(X.rad(), target) <= 0) break;
        mpfr_set(m, X.mid(), MPFR_RNDN);
        Ball fm = eval_cubic(c3, c2, c1, c0, point(m));
        // f'(x) = 3 c3 x^2 + 2 c2 x + c1 over the whole interval
        Ball fp = eval_cubic(0, 3 * c3, 2 * c2, c1, X);
        if (fp.contains_zero())
            throw PrecisionFailure("newton_root_cubic: derivative enclosure has zero");
        Ball Xn = point(m) - fm / fp;
        auto inter = Xn.intersect(X);
        if (!inter)
            throw PrecisionFailure("newton_root_cubic: Newton step left the bracket");
        // Require progress.
        if (mpfr_cmp(inter->rad(), X.rad()) >= 0 && iter > 64)
            throw PrecisionFailure("newton_root_cubic: stalled");
        X = *inter;
    }
    bool converged = mpfr_cmp(X.rad(), target) <= 0;
    mpfr_clear(lo);
    mpfr_clear(hi);
    mpfr_clear(m);
    mpfr_clear(target);
    if (!converged) throw PrecisionFailure("newton_root_cubic: radius target not reached");
    return X;
}

void require(bool ok, const char* what) {
    if (!ok) throw PrecisionFailure(std::string("compute_constants: ") + what);
}

}  // namespace

AlgebraicConstants compute_constants(mpfr_prec_t precision_bits) {
    if (precision_bits < kMinPrecision)
        throw std::domain_error("compute_constants: precision_bits must be >= 64");
    const mpfr_prec_t p = precision_bits;

    AlgebraicConstants c{p, Ball(p), Ball(p), Ball(p), Ball(p), Ball(p), Ball(p)};
    c.alpha = newton_root_cubic(1, -1, 0, -1, 1.4, 1.6, p);
    c.beta_abs = Ball::sqrt(c.alpha.recip());
    c.c_alpha = newton_root_cubic(31, -31, 10, -1, 0.15, 0.25, p);
    c.c_beta_abs = Ball::sqrt(c.c_alpha.mul_si(31).recip());
    c.log_alpha = Ball::log(c.alpha);
    c.log_c_alpha = Ball::log(c.c_alpha);

    // Cross-check c_alpha = 1/(alpha^3 + 2); the two routes must agree.
    Ball via_alpha = (c.alpha.pow_ui(3).add_si(2)).recip();
    require(c.c_alpha.overlaps(via_alpha), "c_alpha disagrees with 1/(alpha^3+2)");

    // Residuals must contain zero.
    require(eval_cubic(1, -1, 0, -1, c.alpha).contains_zero(), "alpha residual");
    require(eval_cubic(31, -31, 10, -1, c.c_alpha).contains_zero(), "c_alpha residual");

    // Published range checks.
    auto in_range = [&](const Ball& x, double lo, double hi) {
        return x.lower_d() > lo && x.upper_d() < hi;
    };
    require(in_range(c.alpha, 1.45, 1.5), "alpha outside (1.45, 1.5)");
    require(in_range(c.beta_abs, 0.82, 0.83), "|beta| outside (0.82, 0.83)");
    require(in_range(c.c_alpha.recip(), 5.0, 5.15), "1/c_alpha outside (5, 5.15)");
    require(in_range(c.c_beta_abs, 0.40, 0.41), "|c_beta| outside (0.40, 0.41)");

    return c;
}

const AlgebraicConstants& constants(mpfr_prec_t precision_bits) {
    static std::mutex mu;
    static std::map<mpfr_prec_t, AlgebraicConstants> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(precision_bits);
    if (it == cache.end())
        it = cache.emplace(precision_bits, compute_constants(precision_bits)).first;
    return it->second;
}

mpz_class binet_round(std::size_t n, const AlgebraicConstants& consts) {
    Ball v = consts.c_alpha * consts.alpha.pow_ui(static_cast<unsigned long>(n) + 2);
    auto r = v.round_certified();
    if (!r) throw PrecisionFailure("binet_round: enclosure straddles a half-integer");
    return *r;
}

mpz_class binet_round_auto(std::size_t n, mpfr_prec_t start) {
    // c_alpha alpha^{n+2} needs about (n+2) log2(alpha) ~ 0.5515 (n+2) bits
    // before the enclosure can decide a half-integer; quantized to keep the
    // constants cache small.
    mpfr_prec_t needed = static_cast<mpfr_prec_t>(0.56 * (double)(n + 2)) + 64;
    needed = ((needed + 255) / 256) * 256;
    if (needed > start) start = needed;
    return with_precision_escalation(start, kPrecisionCap, [&](mpfr_prec_t p) {
        return binet_round(n, constants(p));
    });
}

Ball xi_bound(std::size_t n, const AlgebraicConstants& consts) {
    return consts.c_beta_abs.mul_si(2) *
           consts.beta_abs.pow_ui(static_cast<unsigned long>(n) + 2);
}

Ball xi_direct_bound(std::size_t n, const AlgebraicConstants& consts) {
    Ball approx = consts.c_alpha * consts.alpha.pow_ui(static_cast<unsigned long>(n) + 2);
    Ball diff = Ball::from_mpz(narayana(n), consts.precision_bits) - approx;
    return diff.abs();
}

namespace {

// Certified "ball <= integer"; nullopt when the enclosure is undecided.
std::optional<bool> ball_le_mpz(const Ball& x, const mpz_class& v) {
    mpfr_t lo, hi;
    mpfr_init2(lo, x.precision());
    mpfr_init2(hi, x.precision());
    x.lower(lo);
    x.upper(hi);
    std::optional<bool> res;
    if (mpfr_cmp_z(hi, v.get_mpz_t()) <= 0)
        res = true;
    else if (mpfr_cmp_z(lo, v.get_mpz_t()) > 0)
        res = false;
    mpfr_clear(lo);
    mpfr_clear(hi);
    return res;
}

// Certified "integer <= ball".
std::optional<bool> mpz_le_ball(const mpz_class& v, const Ball& x) {
    mpfr_t lo, hi;
    mpfr_init2(lo, x.precision());
    mpfr_init2(hi, x.precision());
    x.lower(lo);
    x.upper(hi);
    std::optional<bool> res;
    if (mpfr_cmp_z(lo, v.get_mpz_t()) >= 0)
        res = true;
    else if (mpfr_cmp_z(hi, v.get_mpz_t()) < 0)
        res = false;
    mpfr_clear(lo);
    mpfr_clear(hi);
    return res;
}

}  // namespace

GrowthReport verify_growth_bounds(std::size_t n_max, mpfr_prec_t precision_bits) {
    if (n_max < 1) throw std::domain_error("verify_growth_bounds: n_max >= 1");
    GrowthReport rep{n_max, std::nullopt, std::nullopt, std::nullopt};
    const AlgebraicConstants& c = constants(precision_bits);
    narayana_table().ensure(n_max);

    // Powers of alpha are irrational for every nonzero exponent, so the only
    // equality cases are the alpha^0 = 1 ones at n = 1, 2, 3; those are
    // decided algebraically rather than from the enclosures.
    Ball inv = c.alpha.recip();
    Ball prev = inv * inv;  // alpha^{n-3} for n = 1
    Ball cur = inv;         // alpha^{n-2} for n = 1
    for (std::size_t n = 1; n <= n_max; ++n) {
        const mpz_class& nn = narayana_table().at_ready(n);
        // printed lower bound: alpha^{n-2} <= N_n
        bool lower_holds;
        if (n == 2) {
            lower_holds = true;  // alpha^0 = 1 = N_2
        } else {
            auto r = ball_le_mpz(cur, nn);
            if (!r) throw PrecisionFailure("growth lower bound undecidable");
            lower_holds = *r;
        }
        if (!lower_holds && !rep.first_lower_violation) rep.first_lower_violation = n;
        // corrected lower bound: alpha^{n-3} <= N_n
        bool cor_holds;
        if (n == 3) {
            cor_holds = true;  // alpha^0 = 1 = N_3
        } else {
            auto r = ball_le_mpz(prev, nn);
            if (!r) throw PrecisionFailure("corrected growth lower bound undecidable");
            cor_holds = *r;
        }
        if (!cor_holds && !rep.first_corrected_lower_violation)
            rep.first_corrected_lower_violation = n;
        // upper bound: N_n <= alpha^{n-1}
        Ball upper = cur * c.alpha;
        bool upper_holds;
        if (n == 1) {
            upper_holds = true;  // alpha^0 = 1 = N_1
        } else {
            auto r = mpz_le_ball(nn, upper);
            if (!r) throw PrecisionFailure("growth upper bound undecidable");
            upper_holds = *r;
        }
        if (!upper_holds && !rep.first_upper_violation) rep.first_upper_violation = n;
        prev = cur;
        cur = upper;
    }
    return rep;
}

}  // namespace narayana
