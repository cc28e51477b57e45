#include "narayana/ball.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <sstream>

namespace narayana {

namespace {

// Scratch for radius computations, always rounded up.
struct RadTmp {
    mpfr_t v;
    RadTmp() { mpfr_init2(v, kRadiusPrecision); }
    ~RadTmp() { mpfr_clear(v); }
};

}  // namespace

Ball::Ball(mpfr_prec_t prec) : prec_(prec) {
    if (prec < kMinPrecision) prec_ = kMinPrecision;
    mpfr_init2(mid_, prec_);
    mpfr_init2(rad_, kRadiusPrecision);
    mpfr_set_zero(mid_, 1);
    mpfr_set_zero(rad_, 1);
}

Ball::Ball(const Ball& o) : prec_(o.prec_) {
    mpfr_init2(mid_, prec_);
    mpfr_init2(rad_, kRadiusPrecision);
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(mid_, kMinPrecision);
    mpfr_init2(rad_, kRadiusPrecision);
    mpfr_swap(mid_, o.mid_);
    mpfr_swap(rad_, o.rad_);
}

Ball& Ball::operator=(const Ball& o) {
    if (this != &o) {
        if (prec_ != o.prec_) {
            mpfr_set_prec(mid_, o.prec_);
            prec_ = o.prec_;
        }
        mpfr_set(mid_, o.mid_, MPFR_RNDN);
        mpfr_set(rad_, o.rad_, MPFR_RNDU);
    }
    return *this;
}

Ball& Ball::operator=(Ball&& o) noexcept {
    if (this != &o) {
        mpfr_swap(mid_, o.mid_);
        mpfr_swap(rad_, o.rad_);
        std::swap(prec_, o.prec_);
    }
    return *this;
}

Ball::~Ball() {
    mpfr_clear(mid_);
    mpfr_clear(rad_);
}

void Ball::check_finite(const Ball& x, const char* op) {
    if (!mpfr_number_p(x.mid_) || !mpfr_number_p(x.rad_) || mpfr_sgn(x.rad_) < 0)
        throw PrecisionFailure(std::string("non-finite enclosure in ") + op);
}

// Adds one ulp of the midpoint to the radius whenever the midpoint operation
// was inexact (ternary != 0).  RNDN error is <= 1/2 ulp; a full ulp is used.
void Ball::bump_rad_ulp(int ternary) {
    if (ternary == 0) return;
    if (mpfr_zero_p(mid_)) {
        // Rounded to zero: true value below the smallest representable
        // magnitude at this exponent range; this does not occur in our
        // pipelines, fail loudly instead of guessing.
        throw PrecisionFailure("midpoint underflowed to zero");
    }
    RadTmp ulp;
    mpfr_set_ui_2exp(ulp.v, 1, mpfr_get_exp(mid_) - prec_, MPFR_RNDU);
    mpfr_add(rad_, rad_, ulp.v, MPFR_RNDU);
}

void Ball::add_rad(mpfr_srcptr extra) {
    mpfr_add(rad_, rad_, extra, MPFR_RNDU);
}

Ball Ball::from_si(long v, mpfr_prec_t prec) {
    Ball r(prec);
    int t = mpfr_set_si(r.mid_, v, MPFR_RNDN);
    r.bump_rad_ulp(t);
    return r;
}

Ball Ball::from_mpz(const mpz_class& v, mpfr_prec_t prec) {
    Ball r(prec);
    int t = mpfr_set_z(r.mid_, v.get_mpz_t(), MPFR_RNDN);
    r.bump_rad_ulp(t);
    return r;
}

Ball Ball::from_ratio(const mpz_class& p, const mpz_class& q, mpfr_prec_t prec) {
    if (q == 0) throw std::domain_error("from_ratio: zero denominator");
    mpq_class frac(p, q);
    frac.canonicalize();
    Ball r(prec);
    int t = mpfr_set_q(r.mid_, frac.get_mpq_t(), MPFR_RNDN);
    r.bump_rad_ulp(t);
    return r;
}

Ball Ball::from_interval(const mpfr_t lo, const mpfr_t hi, mpfr_prec_t prec) {
    if (mpfr_cmp(lo, hi) > 0) throw std::domain_error("from_interval: lo > hi");
    Ball r(prec);
    int t = mpfr_add(r.mid_, lo, hi, MPFR_RNDN);
    mpfr_div_2ui(r.mid_, r.mid_, 1, MPFR_RNDN);  // exact halving
    // rad >= (hi - lo)/2 plus the rounding slack of the add
    RadTmp half;
    mpfr_sub(half.v, hi, lo, MPFR_RNDU);
    mpfr_div_2ui(half.v, half.v, 1, MPFR_RNDU);
    mpfr_set(r.rad_, half.v, MPFR_RNDU);
    r.bump_rad_ulp(t);
    return r;
}

bool Ball::is_exact() const { return mpfr_zero_p(rad_); }

double Ball::mid_d() const { return mpfr_get_d(mid_, MPFR_RNDN); }
double Ball::rad_d() const { return mpfr_get_d(rad_, MPFR_RNDU); }

void Ball::lower(mpfr_t out) const { mpfr_sub(out, mid_, rad_, MPFR_RNDD); }
void Ball::upper(mpfr_t out) const { mpfr_add(out, mid_, rad_, MPFR_RNDU); }

double Ball::lower_d() const {
    mpfr_t t;
    mpfr_init2(t, prec_);
    lower(t);
    double d = mpfr_get_d(t, MPFR_RNDD);
    mpfr_clear(t);
    return d;
}

double Ball::upper_d() const {
    mpfr_t t;
    mpfr_init2(t, prec_);
    upper(t);
    double d = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return d;
}

std::string Ball::mid_str(size_t digits) const {
    char* s = nullptr;
    int n = mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), mid_);
    if (n < 0) return "?";
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string Ball::rad_str() const {
    char* s = nullptr;
    int n = mpfr_asprintf(&s, "%.3Rg", rad_);
    if (n < 0) return "?";
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string Ball::str(size_t digits) const {
    return mid_str(digits) + " +/- " + rad_str();
}

Ball operator+(const Ball& a, const Ball& b) {
    Ball r(std::max(a.prec_, b.prec_));
    int t = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
    r.bump_rad_ulp(t);
    Ball::check_finite(r, "add");
    return r;
}

Ball operator-(const Ball& a, const Ball& b) {
    Ball r(std::max(a.prec_, b.prec_));
    int t = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
    r.bump_rad_ulp(t);
    Ball::check_finite(r, "sub");
    return r;
}

Ball operator*(const Ball& a, const Ball& b) {
    Ball r(std::max(a.prec_, b.prec_));
    int t = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    // rad = |a.mid|*b.rad + |b.mid|*a.rad + a.rad*b.rad
    RadTmp am, bm, term;
    mpfr_abs(am.v, a.mid_, MPFR_RNDU);
    mpfr_abs(bm.v, b.mid_, MPFR_RNDU);
    mpfr_mul(term.v, am.v, b.rad_, MPFR_RNDU);
    mpfr_set(r.rad_, term.v, MPFR_RNDU);
    mpfr_mul(term.v, bm.v, a.rad_, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, term.v, MPFR_RNDU);
    mpfr_mul(term.v, a.rad_, b.rad_, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, term.v, MPFR_RNDU);
    r.bump_rad_ulp(t);
    Ball::check_finite(r, "mul");
    return r;
}

Ball operator/(const Ball& a, const Ball& b) {
    if (b.contains_zero()) throw PrecisionFailure("division by enclosure containing zero");
    Ball r(std::max(a.prec_, b.prec_));
    int t = mpfr_div(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    // |x/y - am/bm| <= (a.rad*|bm| + |am|*b.rad) / (|bm| * (|bm| - b.rad))
    RadTmp am, bm_up, bm_dn, num, den, term;
    mpfr_abs(am.v, a.mid_, MPFR_RNDU);
    mpfr_abs(bm_up.v, b.mid_, MPFR_RNDU);
    mpfr_abs(bm_dn.v, b.mid_, MPFR_RNDD);
    mpfr_mul(num.v, a.rad_, bm_up.v, MPFR_RNDU);
    mpfr_mul(term.v, am.v, b.rad_, MPFR_RNDU);
    mpfr_add(num.v, num.v, term.v, MPFR_RNDU);
    mpfr_sub(den.v, bm_dn.v, b.rad_, MPFR_RNDD);
    if (mpfr_sgn(den.v) <= 0) throw PrecisionFailure("division denominator too wide");
    mpfr_mul(den.v, den.v, bm_dn.v, MPFR_RNDD);
    mpfr_div(num.v, num.v, den.v, MPFR_RNDU);
    mpfr_set(r.rad_, num.v, MPFR_RNDU);
    r.bump_rad_ulp(t);
    Ball::check_finite(r, "div");
    return r;
}

Ball Ball::operator-() const {
    Ball r(prec_);
    mpfr_neg(r.mid_, mid_, MPFR_RNDN);  // exact
    mpfr_set(r.rad_, rad_, MPFR_RNDU);
    return r;
}

Ball Ball::add_si(long v) const { return *this + Ball::from_si(v, prec_); }

Ball Ball::mul_si(long v) const {
    Ball r(prec_);
    int t = mpfr_mul_si(r.mid_, mid_, v, MPFR_RNDN);
    RadTmp k;
    mpfr_set_si(k.v, v < 0 ? -v : v, MPFR_RNDU);
    mpfr_mul(r.rad_, rad_, k.v, MPFR_RNDU);
    r.bump_rad_ulp(t);
    check_finite(r, "mul_si");
    return r;
}

Ball Ball::mul_mpz(const mpz_class& v) const {
    Ball r(prec_);
    int t = mpfr_mul_z(r.mid_, mid_, v.get_mpz_t(), MPFR_RNDN);
    RadTmp k;
    mpz_class a = ::abs(v);
    mpfr_set_z(k.v, a.get_mpz_t(), MPFR_RNDU);
    mpfr_mul(r.rad_, rad_, k.v, MPFR_RNDU);
    r.bump_rad_ulp(t);
    check_finite(r, "mul_mpz");
    return r;
}

Ball Ball::div_si(long v) const {
    if (v == 0) throw std::domain_error("div_si by zero");
    Ball r(prec_);
    int t = mpfr_div_si(r.mid_, mid_, v, MPFR_RNDN);
    RadTmp k;
    mpfr_set_si(k.v, v < 0 ? -v : v, MPFR_RNDD);
    mpfr_div(r.rad_, rad_, k.v, MPFR_RNDU);
    r.bump_rad_ulp(t);
    check_finite(r, "div_si");
    return r;
}

Ball Ball::mul_2si(long k) const {
    Ball r(prec_);
    mpfr_mul_2si(r.mid_, mid_, k, MPFR_RNDN);  // exact
    mpfr_mul_2si(r.rad_, rad_, k, MPFR_RNDU);
    return r;
}

Ball Ball::abs() const {
    Ball r(prec_);
    mpfr_abs(r.mid_, mid_, MPFR_RNDN);
    mpfr_set(r.rad_, rad_, MPFR_RNDU);
    return r;
}

Ball Ball::recip() const { return Ball::from_si(1, prec_) / *this; }

Ball Ball::sqrt(const Ball& x) {
    if (!x.is_positive()) throw PrecisionFailure("sqrt of non-certified-positive ball");
    Ball r(x.prec_);
    int t = mpfr_sqrt(r.mid_, x.mid_, MPFR_RNDN);
    // |sqrt(v) - sqrt(m)| <= rad / (2 sqrt(m - rad))
    RadTmp lo, s;
    mpfr_set_prec(lo.v, x.prec_);
    mpfr_sub(lo.v, x.mid_, x.rad_, MPFR_RNDD);
    mpfr_sqrt(lo.v, lo.v, MPFR_RNDD);
    mpfr_mul_2ui(lo.v, lo.v, 1, MPFR_RNDD);
    mpfr_set_prec(s.v, kRadiusPrecision);
    mpfr_div(s.v, x.rad_, lo.v, MPFR_RNDU);
    mpfr_set(r.rad_, s.v, MPFR_RNDU);
    r.bump_rad_ulp(t);
    check_finite(r, "sqrt");
    return r;
}

Ball Ball::log(const Ball& x) {
    if (!x.is_positive()) throw PrecisionFailure("log of non-certified-positive ball");
    Ball r(x.prec_);
    int t = mpfr_log(r.mid_, x.mid_, MPFR_RNDN);
    // |log v - log m| <= rad / (m - rad)
    RadTmp lo, s;
    mpfr_set_prec(lo.v, x.prec_);
    mpfr_sub(lo.v, x.mid_, x.rad_, MPFR_RNDD);
    if (mpfr_sgn(lo.v) <= 0) throw PrecisionFailure("log: enclosure reaches zero");
    mpfr_set_prec(s.v, kRadiusPrecision);
    mpfr_div(s.v, x.rad_, lo.v, MPFR_RNDU);
    mpfr_set(r.rad_, s.v, MPFR_RNDU);
    r.bump_rad_ulp(t);
    check_finite(r, "log");
    return r;
}

Ball Ball::exp(const Ball& x) {
    Ball r(x.prec_);
    int t = mpfr_exp(r.mid_, x.mid_, MPFR_RNDN);
    // |e^v - e^m| <= e^(m + rad) - e^m = e^m * expm1(rad)
    RadTmp hi, em, s;
    mpfr_set_prec(hi.v, x.prec_);
    mpfr_set_prec(em.v, x.prec_);
    mpfr_expm1(s.v, x.rad_, MPFR_RNDU);
    mpfr_add(hi.v, x.mid_, x.rad_, MPFR_RNDU);
    mpfr_exp(em.v, hi.v, MPFR_RNDU);
    mpfr_mul(s.v, s.v, em.v, MPFR_RNDU);
    mpfr_set(r.rad_, s.v, MPFR_RNDU);
    r.bump_rad_ulp(t);
    check_finite(r, "exp");
    return r;
}

Ball Ball::pow_ui(unsigned long e) const {
    Ball acc = Ball::from_si(1, prec_);
    Ball base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

bool Ball::contains_zero() const {
    RadTmp a;
    mpfr_abs(a.v, mid_, MPFR_RNDD);
    return mpfr_cmp(a.v, rad_) <= 0;
}

bool Ball::is_positive() const {
    RadTmp lo;
    mpfr_set_prec(lo.v, prec_);
    mpfr_sub(lo.v, mid_, rad_, MPFR_RNDD);
    return mpfr_sgn(lo.v) > 0;
}

bool Ball::is_negative() const {
    RadTmp hi;
    mpfr_set_prec(hi.v, prec_);
    mpfr_add(hi.v, mid_, rad_, MPFR_RNDU);
    return mpfr_sgn(hi.v) < 0;
}

int Ball::sign() const {
    if (is_positive()) return 1;
    if (is_negative()) return -1;
    return 0;
}

int Ball::sign_certified(const char* what) const {
    if (is_positive()) return 1;
    if (is_negative()) return -1;
    if (is_exact() && mpfr_zero_p(mid_)) return 0;
    throw PrecisionFailure(std::string("sign undecidable: ") + what);
}

std::optional<bool> Ball::less_than(const Ball& o) const {
    Ball d = o - *this;
    if (d.is_positive()) return true;
    if (d.is_negative() || (d.is_exact() && mpfr_zero_p(d.mid_))) return false;
    return std::nullopt;
}

bool Ball::overlaps(const Ball& o) const {
    Ball d = *this - o;
    return d.contains_zero();
}

std::optional<mpz_class> Ball::floor_certified() const {
    mpfr_t lo, hi;
    mpfr_init2(lo, prec_ + 8);
    mpfr_init2(hi, prec_ + 8);
    lower(lo);
    upper(hi);
    mpz_class flo, fhi;
    mpfr_get_z(flo.get_mpz_t(), lo, MPFR_RNDD);
    mpfr_get_z(fhi.get_mpz_t(), hi, MPFR_RNDD);
    mpfr_clear(lo);
    mpfr_clear(hi);
    if (flo == fhi) return flo;
    return std::nullopt;
}

std::optional<mpz_class> Ball::round_certified() const {
    // floor(x + 1/2); the 1/2 shift is exact in binary.
    Ball shifted = *this + Ball::from_si(1, prec_).mul_2si(-1);
    return shifted.floor_certified();
}

Ball Ball::dist_to_nearest_int() const {
    // Subtract the integer nearest the midpoint, exactly.
    mpz_class n;
    mpfr_get_z(n.get_mpz_t(), mid_, MPFR_RNDN);
    Ball r = *this - Ball::from_mpz(n, prec_);
    // r encloses x - n with |mid| <= 1/2 (+ rounding).  The distance map
    // d(t) = min(|t|, 1 - |t|) is a tent on (-1, 1); take its image.
    mpfr_t lo, hi;
    mpfr_init2(lo, prec_);
    mpfr_init2(hi, prec_);
    r.lower(lo);
    r.upper(hi);
    if (mpfr_cmp_si(lo, -1) <= 0 || mpfr_cmp_si(hi, 1) >= 0) {
        mpfr_clear(lo);
        mpfr_clear(hi);
        throw PrecisionFailure("dist_to_nearest_int: enclosure wider than 1");
    }
    mpfr_t dlo, dhi, half;
    mpfr_init2(dlo, prec_);
    mpfr_init2(dhi, prec_);
    mpfr_init2(half, kMinPrecision);
    mpfr_set_ui_2exp(half, 1, -1, MPFR_RNDN);  // 1/2
    auto tent = [&](mpfr_srcptr t, mpfr_ptr out, mpfr_rnd_t rnd) {
        // min(|t|, 1-|t|)
        mpfr_t a;
        mpfr_init2(a, prec_);
        mpfr_abs(a, t, rnd);
        if (mpfr_cmp(a, half) <= 0) {
            mpfr_set(out, a, rnd);
        } else {
            mpfr_ui_sub(out, 1, a, rnd);
        }
        mpfr_clear(a);
    };
    // min of d over [lo,hi]: 0 if an integer is inside, else min at endpoints
    bool straddles_zero = mpfr_sgn(lo) <= 0 && mpfr_sgn(hi) >= 0;
    if (straddles_zero) {
        mpfr_set_zero(dlo, 1);
    } else {
        mpfr_t e1, e2;
        mpfr_init2(e1, prec_);
        mpfr_init2(e2, prec_);
        tent(lo, e1, MPFR_RNDD);
        tent(hi, e2, MPFR_RNDD);
        mpfr_min(dlo, e1, e2, MPFR_RNDD);
        mpfr_clear(e1);
        mpfr_clear(e2);
    }
    // max of d over [lo,hi]: 1/2 if +/-1/2 inside, else max at endpoints
    bool covers_half = (mpfr_cmp(lo, half) <= 0 && mpfr_cmp(hi, half) >= 0);
    mpfr_t neghalf;
    mpfr_init2(neghalf, kMinPrecision);
    mpfr_neg(neghalf, half, MPFR_RNDN);
    bool covers_neghalf = (mpfr_cmp(lo, neghalf) <= 0 && mpfr_cmp(hi, neghalf) >= 0);
    if (covers_half || covers_neghalf) {
        mpfr_set(dhi, half, MPFR_RNDU);
    } else {
        mpfr_t e1, e2;
        mpfr_init2(e1, prec_);
        mpfr_init2(e2, prec_);
        tent(lo, e1, MPFR_RNDU);
        tent(hi, e2, MPFR_RNDU);
        mpfr_max(dhi, e1, e2, MPFR_RNDU);
        mpfr_clear(e1);
        mpfr_clear(e2);
    }
    Ball out = Ball::from_interval(dlo, dhi, prec_);
    mpfr_clear(lo);
    mpfr_clear(hi);
    mpfr_clear(dlo);
    mpfr_clear(dhi);
    mpfr_clear(half);
    mpfr_clear(neghalf);
    return out;
}

mpz_class ball_floor_upper(const Ball& x) {
    mpfr_t u;
    mpfr_init2(u, x.precision());
    x.upper(u);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), u, MPFR_RNDD);
    mpfr_clear(u);
    return z;
}

long ball_floor_upper_long(const Ball& x) {
    mpz_class z = ball_floor_upper(x);
    if (!z.fits_slong_p())
        throw std::overflow_error("ball_floor_upper_long: out of range");
    return z.get_si();
}

std::optional<Ball> Ball::intersect(const Ball& o) const {
    mpfr_t alo, ahi, blo, bhi;
    mpfr_init2(alo, prec_);
    mpfr_init2(ahi, prec_);
    mpfr_init2(blo, o.prec_);
    mpfr_init2(bhi, o.prec_);
    lower(alo);
    upper(ahi);
    o.lower(blo);
    o.upper(bhi);
    mpfr_prec_t p = std::max(prec_, o.prec_);
    mpfr_t lo, hi;
    mpfr_init2(lo, p);
    mpfr_init2(hi, p);
    mpfr_max(lo, alo, blo, MPFR_RNDD);
    mpfr_min(hi, ahi, bhi, MPFR_RNDU);
    std::optional<Ball> res;
    if (mpfr_cmp(lo, hi) <= 0) res = Ball::from_interval(lo, hi, p);
    mpfr_clear(alo);
    mpfr_clear(ahi);
    mpfr_clear(blo);
    mpfr_clear(bhi);
    mpfr_clear(lo);
    mpfr_clear(hi);
    return res;
}

}  // namespace narayana
