#include "narayana/baker_bounds.hpp"

#include <mutex>
#include <stdexcept>

namespace narayana {

namespace {

Ball log_si(long v, mpfr_prec_t prec) { return Ball::log(Ball::from_si(v, prec)); }

void check(bool ok, const char* what) {
    if (!ok) throw PrecisionFailure(std::string("baker_bounds: ") + what);
}

}  // namespace

long relative_l_max_eq2(long n) {
    if (n < 3) throw std::domain_error("relative_l_max_eq2: n >= 3");
    return 2 * n - 2;
}

long relative_n_max_eq2(long l, mpfr_prec_t prec) {
    if (l < 2) throw std::domain_error("relative_n_max_eq2: l >= 2");
    // sound chain: (n-3) log alpha < l log 50, then certify against 11l+2
    const AlgebraicConstants& c = constants(prec);
    Ball bound = log_si(50, prec).mul_si(l) / c.log_alpha + Ball::from_si(3, prec);
    long sound = ball_floor_upper_long(bound);
    long published = 11 * l + 1;  // n < 11l + 2
    check(sound <= published, "n < 11l+2 not implied by the certified chain");
    return published;
}

long relative_l1_max_eq3(long k) {
    if (k < 3) throw std::domain_error("relative_l1_max_eq3: k >= 3");
    return k - 1;
}

long relative_k_max_eq3(long l2, mpfr_prec_t prec) {
    if (l2 < 2) throw std::domain_error("relative_k_max_eq3: l2 >= 2");
    const AlgebraicConstants& c = constants(prec);
    Ball bound = log_si(50, prec).mul_si(2 * l2) / c.log_alpha + Ball::from_si(3, prec);
    long sound = ball_floor_upper_long(bound);
    long published = 22 * l2 + 1;  // k < 22 l2 + 2
    check(sound <= published, "k < 22l2+2 not implied by the certified chain");
    return published;
}

long k_cap_for_base(int b, long l2_max, mpfr_prec_t prec) {
    const AlgebraicConstants& c = constants(prec);
    Ball bound =
        log_si(b, prec).mul_si(2 * l2_max) / c.log_alpha + Ball::from_si(3, prec);
    return ball_floor_upper_long(bound);
}

Ball sanchez_reduce(int order, const Ball& T) {
    if (order < 1) throw std::domain_error("sanchez_reduce: order >= 1");
    mpfr_prec_t prec = T.precision();
    mpz_class pre = 4 * static_cast<long>(order) * order;
    mpz_class pre_pow;
    mpz_pow_ui(pre_pow.get_mpz_t(), pre.get_mpz_t(), static_cast<unsigned long>(order));
    if (!Ball::from_mpz(pre_pow, prec).less_than(T).value_or(false))
        throw std::domain_error("sanchez_reduce: requires T > (4 m^2)^m");
    Ball logT = Ball::log(T);
    return T.mul_2si(order) * logT.pow_ui(static_cast<unsigned long>(order));
}

bool verify_log_replacements(mpfr_prec_t prec) {
    // Each difference d(x) = c log x - 1 - log(k x + r) has positive
    // derivative for x in range (c/x > k/(kx+r) since c x k + c r > k x),
    // so certifying a geometric grid from the left endpoint upward covers
    // the full range.
    auto holds_on_grid = [&](long k, long r, long c, long x0) {
        mpz_class x(x0);
        for (int i = 0; i < 130; ++i) {
            Ball lx = Ball::log(Ball::from_mpz(x, prec));
            Ball rhs = lx.mul_si(c);
            Ball lhs = Ball::log(Ball::from_mpz(k * x + r, prec)).add_si(1);
            if (!lhs.less_than(rhs).value_or(false)) return false;
            x *= 2;
        }
        return true;
    };
    return holds_on_grid(22, 4, 8, 2) && holds_on_grid(2, 4, 5, 3) &&
           holds_on_grid(2, 2, 5, 3);
}

namespace {

DerivedConstants compute_derived(mpfr_prec_t prec) {
    check(verify_log_replacements(prec), "log replacement inequality failed");

    DerivedConstants d;
    d.precision_bits = prec;
    d.matveev_factor = matveev_c3d3_magnitude(prec);
    const AlgebraicConstants& cst = constants(prec);
    const Ball& la = cst.log_alpha;
    Ball log2 = log_si(2, prec);
    Ball log3 = log_si(3, prec);

    // --- eq3, l1:  (l1-2) log b < log 5 + CM * 8 log l2 * logalpha * 27 log^2 b
    //     l1 < 27*CM*logalpha*8 * log l2 log b + (2 + log5/log b)
    //     absorbed with log b >= log 2, log l2 >= log 2:
    Ball absorb3 = (Ball::from_si(2, prec) + log_si(5, prec) / log2) / (log2 * log2);
    d.c3 = d.matveev_factor.mul_si(27 * 8) * la + absorb3;

    // --- eq3, l2:  (l2-2) log b < log 2 + CM * 8 log l2 * logalpha
    //                              * 9 log b * (4 + l1) log b,   l1 < c3 log l2 log b
    //  => l2/log^2 l2 < K2 log^2 b  with the lower-order terms absorbed
    Ball main2 = d.matveev_factor.mul_si(72) * la * d.c3;
    // 288 CM la log b / log l2 <= (288 CM la / log^2 2) log^2 b
    Ball lower2 = d.matveev_factor.mul_si(288) * la / (log2 * log2);
    // (2 + log2/log b)/log^2 l2 <= (3 / log^4 2) log^2 b
    Ball tail2 = Ball::from_si(3, prec) / log2.pow_ui(4);
    d.K2 = main2 + lower2 + tail2;

    // --- eq2, m:  m log a < log 39 + CM * 5 log n * 40.5 logalpha^0 ... :
    //     m < 202.5 CM log n log^2 b + log39/logalpha, absorbed (n>=3, b>=2)
    Ball absorb1 = (log_si(39, prec) / la) / (log3 * log2 * log2);
    d.c1 = d.matveev_factor * Ball::from_ratio(405, 2, prec) + absorb1;

    // --- eq2, n:  n < log11/logalpha + 45 CM log n log b (2.3 log b
    //              + c1 logalpha log n log^2 b)
    Ball mainn = d.matveev_factor.mul_si(45) * d.c1 * la;
    Ball lowern = d.matveev_factor.mul_si(45) * Ball::from_ratio(23, 10, prec) /
                  (log3 * log2);
    Ball tailn = (log_si(11, prec) / la) / (log3 * log3 * log2 * log2 * log2);
    d.K3 = mainn + lowern + tailn;

    // --- normalized per-base forms: C_l2 = max_b bound(b)/log^3 b, likewise C_n
    mpfr_t acc_l2, acc_n;
    mpfr_init2(acc_l2, prec);
    mpfr_init2(acc_n, prec);
    mpfr_set_si(acc_l2, -1, MPFR_RNDN);
    mpfr_set_si(acc_n, -1, MPFR_RNDN);
    Ball lo_l2(prec), lo_n(prec);  // ball at the arg max, for the floor check
    for (int b = 2; b <= 50; ++b) {
        Ball lb = log_si(b, prec);
        Ball lb2 = lb * lb;
        Ball lb3 = lb2 * lb;
        Ball ratio_l2 = sanchez_reduce(2, d.K2 * lb2) / lb3;
        Ball ratio_n = sanchez_reduce(2, d.K3 * lb3) / (lb3 * lb2);
        mpfr_t u;
        mpfr_init2(u, prec);
        ratio_l2.upper(u);
        if (mpfr_cmp(u, acc_l2) > 0) {
            mpfr_set(acc_l2, u, MPFR_RNDU);
            lo_l2 = ratio_l2;
        }
        ratio_n.upper(u);
        if (mpfr_cmp(u, acc_n) > 0) {
            mpfr_set(acc_n, u, MPFR_RNDU);
            lo_n = ratio_n;
        }
        mpfr_clear(u);
    }
    d.C_l2 = Ball::from_interval(acc_l2, acc_l2, prec);
    d.C_n = Ball::from_interval(acc_n, acc_n, prec);
    mpfr_clear(acc_l2);
    mpfr_clear(acc_n);

    // Paper ceilings and sanity floors (a tenth of each figure).
    mpz_class ten33 = mpz_class(10);
    mpz_pow_ui(ten33.get_mpz_t(), ten33.get_mpz_t(), 33);
    mpz_class ten13 = mpz_class(10);
    mpz_pow_ui(ten13.get_mpz_t(), ten13.get_mpz_t(), 13);
    auto leq = [&](const Ball& x, const mpz_class& cap) {
        return x.less_than(Ball::from_mpz(cap, prec)).value_or(false);
    };
    auto geq = [&](const Ball& x, const mpz_class& floor_v) {
        return Ball::from_mpz(floor_v, prec).less_than(x).value_or(false);
    };
    d.paper_ceilings_ok = leq(d.c3, 3 * ten13 * 10) && leq(d.c1, 17 * ten13 * 10) &&
                          leq(d.C_l2, ten33) && leq(d.C_n, ten33 * 299 / 100);
    d.paper_floors_ok = geq(d.c3, 3 * ten13) && geq(d.c1, 17 * ten13) &&
                        geq(lo_l2, ten33 / 10) && geq(lo_n, ten33 * 299 / 1000);
    check(d.paper_ceilings_ok, "derived constant exceeds a paper ceiling");

    // Validity of the published relative bounds over their ranges.  With
    // r = log 50 / log alpha (~10.23), the gaps (22 - 2r) l2 - 1 and
    // (11 - r) l - 1 grow with the length, so the left endpoints decide:
    //   l2 = 1:  2r + 1 <= 22   (k < 22 l2 + 2)
    //   l  = 2:  r <= 10.5      (n < 11 l + 2)
    Ball log50_over_la = log_si(50, prec) / la;
    check(log50_over_la.mul_si(2).add_si(1)
              .less_than(Ball::from_si(22, prec))
              .value_or(false),
          "k < 22 l2 + 2 chain margin failed");
    check(log50_over_la.less_than(Ball::from_ratio(21, 2, prec)).value_or(false),
          "n < 11 l + 2 chain margin failed");
    return d;
}

}  // namespace

const DerivedConstants& derived_constants(mpfr_prec_t prec) {
    static std::mutex mu;
    static std::map<mpfr_prec_t, DerivedConstants> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(prec);
    if (it == cache.end()) it = cache.emplace(prec, compute_derived(prec)).first;
    return it->second;
}

AbsoluteBoundsEntry derive_eq3_bounds(int b, mpfr_prec_t prec) {
    if (b < 2 || b > 50) throw std::domain_error("derive_eq3_bounds: b in 2..50");
    const DerivedConstants& d = derived_constants(prec);
    AbsoluteBoundsEntry e;
    e.b = b;
    Ball lb = log_si(b, prec);
    Ball l2b = d.C_l2 * lb.pow_ui(3);
    e.l2_max = ball_floor_upper(l2b);
    e.k_max = 22 * e.l2_max + 1;
    Ball l1b = d.c3 * Ball::log(Ball::from_mpz(e.l2_max, prec)) * lb;
    e.l1_max = ball_floor_upper(l1b);
    // ceilings: l2 <= 1e33 log^3 b and k <= 2.3e34 log^3 b
    mpz_class ten33 = mpz_class(10);
    mpz_pow_ui(ten33.get_mpz_t(), ten33.get_mpz_t(), 33);
    Ball cap_l2 = Ball::from_mpz(ten33, prec) * lb.pow_ui(3);
    Ball cap_k = Ball::from_mpz(23 * ten33, prec) * lb.pow_ui(3);
    e.paper_ceiling_ok =
        Ball::from_mpz(e.l2_max, prec).less_than(cap_l2).value_or(false) &&
        Ball::from_mpz(e.k_max, prec).less_than(cap_k).value_or(false);
    e.m_max = 0;
    e.n_max = 0;
    return e;
}

AbsoluteBoundsEntry derive_eq2_bounds(int b, mpfr_prec_t prec) {
    if (b < 2 || b > 50) throw std::domain_error("derive_eq2_bounds: b in 2..50");
    const DerivedConstants& d = derived_constants(prec);
    AbsoluteBoundsEntry e;
    e.b = b;
    Ball lb = log_si(b, prec);
    Ball nb = d.C_n * lb.pow_ui(5);
    e.n_max = ball_floor_upper(nb);
    Ball mb = d.c1 * Ball::log(Ball::from_mpz(e.n_max, prec)) * lb * lb;
    e.m_max = ball_floor_upper(mb);
    mpz_class ten33 = mpz_class(10);
    mpz_pow_ui(ten33.get_mpz_t(), ten33.get_mpz_t(), 33);
    Ball cap_n = Ball::from_mpz(299 * ten33 / 100, prec) * lb.pow_ui(5);
    e.paper_ceiling_ok = Ball::from_mpz(e.n_max, prec).less_than(cap_n).value_or(false);
    e.l1_max = 0;
    e.l2_max = 0;
    e.k_max = 0;
    return e;
}

AbsoluteBounds derive_bounds(Equation eq, int b_lo, int b_hi, mpfr_prec_t prec) {
    AbsoluteBounds out;
    out.equation = eq;
    for (int b = b_lo; b <= b_hi; ++b)
        out.per_base[b] =
            eq == Equation::eq3 ? derive_eq3_bounds(b, prec) : derive_eq2_bounds(b, prec);
    return out;
}

}  // namespace narayana
