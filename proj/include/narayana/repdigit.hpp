#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace narayana {

// A base-b repdigit a (b^l - 1)/(b - 1): the digit a repeated l times.
struct Repdigit {
    int a;  // 1..b-1
    int b;  // >= 2
    long l; // >= 1
    mpz_class value;
};

// Exact a (b^l - 1)/(b - 1); throws std::domain_error on invalid (a, b, l).
mpz_class repdigit_value(int a, int b, long l);
Repdigit make_repdigit(int a, int b, long l);

// Base-b digits, least significant first; empty for x = 0.
std::vector<int> digits_in_base(const mpz_class& x, int b);

// (a, l) when all base-b digits of x equal a; nullopt otherwise.  x >= 1.
std::optional<std::pair<int, long>> as_repdigit(const mpz_class& x, int b);

struct RepdigitPair {
    int a1, a2;
    long l1, l2;
};

// All factorizations x = R1 * R2 into base-b repdigits with l1 <= l2 (and
// a1 <= a2 when l1 == l2), both lengths >= l_min; optional caps bound l1/l2.
std::vector<RepdigitPair> two_repdigit_factorizations(const mpz_class& x, int b,
                                                      long l_min, long l1_cap = -1,
                                                      long l2_cap = -1);

}  // namespace narayana
