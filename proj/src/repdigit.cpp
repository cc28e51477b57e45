#include "narayana/repdigit.hpp"

#include <stdexcept>

namespace narayana {

mpz_class repdigit_value(int a, int b, long l) {
    if (b < 2) throw std::domain_error("repdigit_value: base must be >= 2");
    if (a < 1 || a >= b) throw std::domain_error("repdigit_value: digit out of range");
    if (l < 1) throw std::domain_error("repdigit_value: length must be >= 1");
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(b),
                  static_cast<unsigned long>(l));
    return a * (p - 1) / (b - 1);
}

Repdigit make_repdigit(int a, int b, long l) {
    return Repdigit{a, b, l, repdigit_value(a, b, l)};
}

std::vector<int> digits_in_base(const mpz_class& x, int b) {
    if (x < 0) throw std::domain_error("digits_in_base: negative input");
    if (b < 2) throw std::domain_error("digits_in_base: base must be >= 2");
    std::vector<int> digits;
    mpz_class y = x;
    while (y != 0) {
        digits.push_back(
            static_cast<int>(mpz_tdiv_q_ui(y.get_mpz_t(), y.get_mpz_t(),
                                           static_cast<unsigned long>(b))));
    }
    return digits;
}

std::optional<std::pair<int, long>> as_repdigit(const mpz_class& x, int b) {
    if (x < 1 || b < 2) return std::nullopt;
    mpz_class y = x;
    unsigned long a =
        mpz_tdiv_q_ui(y.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(b));
    if (a == 0) return std::nullopt;
    long l = 1;
    while (y != 0) {
        unsigned long d =
            mpz_tdiv_q_ui(y.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(b));
        if (d != a) return std::nullopt;
        ++l;
    }
    return std::make_pair(static_cast<int>(a), l);
}

std::vector<RepdigitPair> two_repdigit_factorizations(const mpz_class& x, int b,
                                                      long l_min, long l1_cap,
                                                      long l2_cap) {
    if (x < 1) throw std::domain_error("two_repdigit_factorizations: x must be >= 1");
    if (b < 2) throw std::domain_error("two_repdigit_factorizations: base must be >= 2");
    std::vector<RepdigitPair> out;
    mpz_class root = sqrt(x);  // floor
    // repunit(l) = (b^l - 1)/(b - 1)
    auto repunit_of = [&](long l) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(b),
                      static_cast<unsigned long>(l));
        return mpz_class((p - 1) / (b - 1));
    };
    // The smaller factor R1 satisfies R1 <= sqrt(x): lengths beyond that are
    // covered with the roles swapped, since a longer repdigit always exceeds
    // a shorter one.
    for (long l1 = l_min; l1_cap < 0 || l1 <= l1_cap; ++l1) {
        mpz_class unit = repunit_of(l1);
        if (unit > root) break;
        for (int a1 = 1; a1 < b; ++a1) {
            mpz_class r1 = a1 * unit;
            if (r1 > root) break;
            if (!mpz_divisible_p(x.get_mpz_t(), r1.get_mpz_t())) continue;
            mpz_class cof = x / r1;
            auto rec = as_repdigit(cof, b);
            if (!rec) continue;
            auto [a2, l2] = *rec;
            if (l2 < l1) continue;            // value order forces l1 <= l2
            if (l2 == l1 && a2 < a1) continue;  // canonical tie-break
            if (l2_cap >= 0 && l2 > l2_cap) continue;
            out.push_back(RepdigitPair{a1, a2, l1, l2});
        }
    }
    return out;
}

}  // namespace narayana
