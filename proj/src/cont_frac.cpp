#include "narayana/cont_frac.hpp"

#include <stdexcept>

namespace narayana {

namespace {

void push_step(CFExpansion& e, const mpz_class& g) {
    std::size_t k = e.quotients.size();
    e.quotients.push_back(g);
    mpz_class p, q;
    if (k == 0) {
        p = g;
        q = 1;
    } else if (k == 1) {
        p = g * e.convergents[0].first + 1;
        q = g;
    } else {
        p = g * e.convergents[k - 1].first + e.convergents[k - 2].first;
        q = g * e.convergents[k - 1].second + e.convergents[k - 2].second;
    }
    e.convergents.emplace_back(std::move(p), std::move(q));
}

CFExpansion expand_at(const RealFn& x, const mpz_class& q_target, mpfr_prec_t prec,
                      std::size_t max_quotients, std::size_t extra_after) {
    CFExpansion e;
    e.precision_bits = prec;
    Ball cur = x(prec);
    std::size_t past_target = 0;
    for (std::size_t k = 0; k < max_quotients; ++k) {
        auto g = cur.floor_certified();
        if (!g) throw PrecisionFailure("cf_expand: quotient not certifiable");
        push_step(e, *g);
        if (e.convergents.back().second > q_target && past_target++ >= extra_after)
            return e;
        Ball rem = cur - Ball::from_mpz(*g, prec);
        if (rem.is_exact() && mpfr_zero_p(rem.mid())) {
            e.complete = true;
            return e;
        }
        if (rem.contains_zero())
            throw PrecisionFailure("cf_expand: remainder straddles zero");
        cur = rem.recip();
    }
    throw PrecisionFailure("cf_expand: quotient budget exhausted before q_target");
}

}  // namespace

CFExpansion cf_expand(const RealFn& x, const mpz_class& q_target, mpfr_prec_t start_prec,
                      mpfr_prec_t cap, std::size_t extra_after) {
    CFExpansion e = with_precision_escalation(start_prec, cap, [&](mpfr_prec_t p) {
        // ~1 bit of q growth per quotient on average; generous budget.
        return expand_at(x, q_target, p, 4096, extra_after);
    });
    e.source = x;
    return e;
}

CFExpansion cf_expand_rational(const mpz_class& p, const mpz_class& q) {
    if (q <= 0) throw std::domain_error("cf_expand_rational: q must be positive");
    CFExpansion e;
    e.complete = true;
    mpz_class num = p, den = q;
    while (den != 0) {
        mpz_class g, r;
        mpz_fdiv_qr(g.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        push_step(e, g);
        num = den;
        den = r;
    }
    return e;
}

std::size_t convergent_index_exceeding(CFExpansion& exp, const mpz_class& bound) {
    for (;;) {
        for (std::size_t i = 0; i < exp.convergents.size(); ++i)
            if (exp.convergents[i].second > bound) return i;
        if (exp.complete || !exp.source)
            throw std::domain_error("convergent_exceeding: expansion exhausted");
        exp = cf_expand(exp.source, bound, exp.precision_bits);
    }
}

std::pair<mpz_class, mpz_class> convergent_exceeding(CFExpansion& exp,
                                                     const mpz_class& bound) {
    return exp.convergents[convergent_index_exceeding(exp, bound)];
}

mpz_class max_partial_quotient(const CFExpansion& exp, std::size_t K) {
    if (exp.quotients.size() < K + 2)
        throw std::out_of_range("max_partial_quotient: expansion too short");
    mpz_class g = exp.quotients[0];
    for (std::size_t j = 1; j <= K + 1; ++j)
        if (exp.quotients[j] > g) g = exp.quotients[j];
    return g;
}

LegendreVerdict legendre_quality(const Ball& x, const mpz_class& p, const mpz_class& q,
                                 const mpz_class& g, const CFExpansion* exp) {
    if (q < 1) throw std::domain_error("legendre_quality: q >= 1");
    LegendreVerdict v;
    mpfr_prec_t prec = x.precision();
    Ball diff = (x - Ball::from_ratio(p, q, prec)).abs();
    mpz_class q2 = q * q;
    Ball lower = Ball::from_ratio(1, (g + 2) * q2, prec);
    Ball half = Ball::from_ratio(1, 2 * q2, prec);
    v.lower_bound_holds = lower.less_than(diff);
    v.within_half_qsq = diff.less_than(half);
    if (exp) {
        mpq_class target(p, q);
        target.canonicalize();
        for (const auto& [pk, qk] : exp->convergents) {
            mpq_class c(pk, qk);
            c.canonicalize();
            if (c == target) {
                v.is_convergent = true;
                break;
            }
        }
    }
    return v;
}

}  // namespace narayana
