#include "narayana/heights.hpp"

#include <stdexcept>

namespace narayana {

HeightBound height_rational(const mpz_class& p, const mpz_class& q, mpfr_prec_t prec) {
    if (q == 0) throw std::domain_error("height_rational: zero denominator");
    mpq_class f(p, q);
    f.canonicalize();
    mpz_class num = abs(f.get_num());
    mpz_class den = abs(f.get_den());
    mpz_class m = num > den ? num : den;
    if (m == 0) return HeightBound{Ball::from_si(0, prec)};
    return HeightBound{Ball::log(Ball::from_mpz(m, prec))};
}

HeightBound combine_heights(HeightCombine kind, const HeightBound& h1,
                            const HeightBound& h2) {
    switch (kind) {
        case HeightCombine::sum: {
            Ball log2 = Ball::log(Ball::from_si(2, h1.value.precision()));
            return HeightBound{h1.value + h2.value + log2};
        }
        case HeightCombine::product:
            return HeightBound{h1.value + h2.value};
        case HeightCombine::power:
            throw std::domain_error("combine_heights: use combine_heights_power");
    }
    throw std::domain_error("combine_heights: bad kind");
}

HeightBound combine_heights_power(const HeightBound& h, long s) {
    return HeightBound{h.value.mul_si(s < 0 ? -s : s)};
}

HeightBound height_psi3_eq3_l1(int b, int a1, int a2, mpfr_prec_t prec) {
    if (b < 2 || b > 50 || a1 < 1 || a1 >= b || a2 < 1 || a2 >= b)
        throw std::domain_error("height_psi3_eq3_l1: invalid digits/base");
    // h(c_alpha) + h((b-1)/a1) + h((b-1)/a2) <= log(31)/3 + 2 log(b-1)
    Ball bound = Ball::log(Ball::from_si(31, prec)).div_si(3);
    if (b > 2) {
        Ball lb1 = Ball::log(Ball::from_si(b - 1, prec));
        bound = bound + lb1.mul_si(2);
    }
    Ball three_log_b = Ball::log(Ball::from_si(b, prec)).mul_si(3);
    if (!bound.less_than(three_log_b).value_or(false))
        throw PrecisionFailure("height_psi3_eq3_l1: bound not below 3 log b");
    return HeightBound{bound};
}

void validate_linear_form(const LinearFormInstance& inst) {
    if (inst.t < 2) throw std::domain_error("linear form: t must be >= 2");
    if (inst.D < 1) throw std::domain_error("linear form: D must be >= 1");
    if (static_cast<int>(inst.A.size()) != inst.t)
        throw std::domain_error("linear form: |A| != t");
    mpfr_prec_t prec = inst.B.precision();
    Ball min_a = Ball::from_ratio(16, 100, prec);
    for (const Ball& a : inst.A)
        if (a.less_than(min_a).value_or(false))
            throw std::domain_error("linear form: A_j below 0.16");
    if (inst.B.less_than(Ball::from_si(1, prec)).value_or(false))
        throw std::domain_error("linear form: B below 1");
}

Ball matveev_c3d3_magnitude(mpfr_prec_t prec) {
    // 1.4 * 30^6 * 3^4.5 * 9 * (1 + log 3)
    Ball c = Ball::from_ratio(14, 10, prec);
    c = c * Ball::from_si(30, prec).pow_ui(6);
    Ball t45 = Ball::from_si(3, prec).pow_ui(4) * Ball::sqrt(Ball::from_si(3, prec));
    c = c * t45;
    c = c.mul_si(9);
    Ball one_log3 = Ball::log(Ball::from_si(3, prec)).add_si(1);
    return c * one_log3;
}

Ball matveev_log_lower_bound(const LinearFormInstance& inst) {
    validate_linear_form(inst);
    mpfr_prec_t prec = inst.B.precision();
    // 1.4 * 30^{t+3} * t^{4.5}
    Ball c = Ball::from_ratio(14, 10, prec);
    c = c * Ball::from_si(30, prec).pow_ui(static_cast<unsigned long>(inst.t) + 3);
    Ball t(prec);
    t = Ball::from_si(inst.t, prec);
    Ball t45 = t.pow_ui(4) * Ball::sqrt(t);
    c = c * t45;
    // D^2 (1 + log D)
    Ball d = Ball::from_si(inst.D, prec);
    c = c * d * d * (Ball::log(d).add_si(1));
    // (1 + log B)
    c = c * (Ball::log(inst.B).add_si(1));
    for (const Ball& a : inst.A) c = c * a;
    return -c;
}

namespace {

Ball log_b(int b, mpfr_prec_t prec) { return Ball::log(Ball::from_si(b, prec)); }

}  // namespace

LinearFormInstance lambda3_instance(int b, long l2_for_B, const AlgebraicConstants& c) {
    mpfr_prec_t prec = c.precision_bits;
    LinearFormInstance inst;
    inst.t = 3;
    inst.D = 3;
    inst.label = 3;
    Ball lb = log_b(b, prec);
    inst.A = {c.log_alpha, lb.mul_si(3), lb.mul_si(9)};
    inst.B = Ball::from_si(22 * l2_for_B + 4, prec);
    return inst;
}

LinearFormInstance lambda4_instance(int b, long l1, long l2_for_B,
                                    const AlgebraicConstants& c) {
    mpfr_prec_t prec = c.precision_bits;
    LinearFormInstance inst;
    inst.t = 3;
    inst.D = 3;
    inst.label = 4;
    Ball lb = log_b(b, prec);
    inst.A = {c.log_alpha, lb.mul_si(3), lb.mul_si(4 + l1).mul_si(3)};
    inst.B = Ball::from_si(22 * l2_for_B + 4, prec);
    return inst;
}

LinearFormInstance lambda1_instance(int b, long n_for_B, const AlgebraicConstants& c) {
    mpfr_prec_t prec = c.precision_bits;
    LinearFormInstance inst;
    inst.t = 3;
    inst.D = 3;
    inst.label = 1;
    Ball lb = log_b(b, prec);
    inst.A = {c.log_alpha, lb.mul_si(3), lb.mul_si(27).div_si(2)};  // 13.5 log b
    inst.B = Ball::from_si(2 * n_for_B + 4, prec);
    return inst;
}

LinearFormInstance lambda2_instance(int b, long m, long n_for_B,
                                    const AlgebraicConstants& c) {
    mpfr_prec_t prec = c.precision_bits;
    LinearFormInstance inst;
    inst.t = 3;
    inst.D = 3;
    inst.label = 2;
    Ball lb = log_b(b, prec);
    // A_3 = 3 (2.3 log b + m log alpha)
    Ball a3 = lb * Ball::from_ratio(23, 10, prec) + c.log_alpha.mul_si(m);
    inst.A = {c.log_alpha, lb.mul_si(3), a3.mul_si(3)};
    inst.B = Ball::from_si(2 * n_for_B + 2, prec);
    return inst;
}

}  // namespace narayana
