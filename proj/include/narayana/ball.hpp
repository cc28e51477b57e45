#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace narayana {

// Thrown when a certified decision (sign, floor, comparison) cannot be made
// at the current working precision.  Callers escalate precision and retry.
class PrecisionFailure : public std::runtime_error {
public:
    explicit PrecisionFailure(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr mpfr_prec_t kMinPrecision = 64;
inline constexpr mpfr_prec_t kDefaultPrecision = 512;
inline constexpr mpfr_prec_t kPrecisionCap = 16384;

// Radius values are kept at a small fixed precision and always rounded up,
// so a Ball never under-reports its error.
inline constexpr mpfr_prec_t kRadiusPrecision = 64;

// A certified real enclosure: every value the Ball represents lies in
// [mid - rad, mid + rad].  Arithmetic propagates both the operand radii and
// the rounding error of the midpoint operation (outward).  Comparisons and
// integer extraction succeed only when the enclosure decides them.
class Ball {
public:
    explicit Ball(mpfr_prec_t prec = kDefaultPrecision);
    Ball(const Ball& o);
    Ball(Ball&& o) noexcept;
    Ball& operator=(const Ball& o);
    Ball& operator=(Ball&& o) noexcept;
    ~Ball();

    static Ball from_si(long v, mpfr_prec_t prec);
    static Ball from_mpz(const mpz_class& v, mpfr_prec_t prec);
    // Exact rational p/q as a ball (one rounding at most).
    static Ball from_ratio(const mpz_class& p, const mpz_class& q, mpfr_prec_t prec);
    static Ball from_interval(const mpfr_t lo, const mpfr_t hi, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return prec_; }
    bool is_exact() const;

    mpfr_srcptr mid() const { return mid_; }
    mpfr_srcptr rad() const { return rad_; }
    double mid_d() const;
    double rad_d() const;
    void lower(mpfr_t out) const;  // mid - rad, rounded down
    void upper(mpfr_t out) const;  // mid + rad, rounded up
    double lower_d() const;
    double upper_d() const;

    // "1.465571231876768035(21)e0"-style string: midpoint digits plus radius.
    std::string str(size_t digits = 25) const;
    std::string mid_str(size_t digits = 25) const;
    std::string rad_str() const;

    friend Ball operator+(const Ball& a, const Ball& b);
    friend Ball operator-(const Ball& a, const Ball& b);
    friend Ball operator*(const Ball& a, const Ball& b);
    friend Ball operator/(const Ball& a, const Ball& b);
    Ball operator-() const;

    Ball add_si(long v) const;
    Ball mul_si(long v) const;
    Ball mul_mpz(const mpz_class& v) const;
    Ball div_si(long v) const;
    Ball mul_2si(long k) const;  // exact scale by 2^k
    Ball abs() const;
    Ball recip() const;

    static Ball sqrt(const Ball& x);  // requires x certainly > 0
    static Ball log(const Ball& x);   // requires x certainly > 0
    static Ball exp(const Ball& x);
    Ball pow_ui(unsigned long e) const;

    // Certified predicates: true only when provable from the enclosure.
    bool contains_zero() const;
    bool is_positive() const;
    bool is_negative() const;
    // Engaged when the enclosures are disjoint; nullopt when they overlap.
    std::optional<bool> less_than(const Ball& o) const;
    bool overlaps(const Ball& o) const;

    // Sign of the enclosure: -1, 0 (contains zero), +1.
    int sign() const;
    // Certified sign, throwing when the ball straddles zero.
    int sign_certified(const char* what) const;

    // floor(x) when every point of the ball has the same floor.
    std::optional<mpz_class> floor_certified() const;
    // Nearest integer when the ball stays on one side of a half-integer.
    std::optional<mpz_class> round_certified() const;
    // Enclosure of min_{n in Z} |x - n|  (always inside [0, 1/2]).
    Ball dist_to_nearest_int() const;

    // Intersection (tightest ball containing it); nullopt when disjoint.
    std::optional<Ball> intersect(const Ball& o) const;

private:
    mpfr_t mid_;
    mpfr_t rad_;
    mpfr_prec_t prec_;

    void bump_rad_ulp(int ternary);
    void add_rad(mpfr_srcptr extra);
    static void check_finite(const Ball& x, const char* op);
};

// floor of the ball's upper bound.  For a strict real bound x < ball this is
// a sound integer bound x <= result.
mpz_class ball_floor_upper(const Ball& x);
long ball_floor_upper_long(const Ball& x);

// A real number computable at any requested precision (e.g. log alpha / log b).
// The canonical escape hatch for precision escalation.
using RealFn = std::function<Ball(mpfr_prec_t)>;

// Runs f at doubling precisions until it stops throwing PrecisionFailure,
// starting at `start` and giving up beyond `cap`.
template <typename F>
auto with_precision_escalation(mpfr_prec_t start, mpfr_prec_t cap, F&& f) {
    mpfr_prec_t p = start < kMinPrecision ? kMinPrecision : start;
    for (;;) {
        try {
            return f(p);
        } catch (const PrecisionFailure&) {
            if (p >= cap) throw;
            p = p * 2 > cap ? cap : p * 2;
        }
    }
}

}  // namespace narayana
