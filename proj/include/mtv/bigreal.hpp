#pragma once
// Arbitrary-precision real numbers: RAII wrapper over MPFR.
// Every value carries its working precision P (bits); binary operations
// round to the max of the operand precisions (MPFR round-to-nearest), so
// each arithmetic op has relative error <= 2^(1-P).

#include "mtv/rational.hpp"

#include <mpfr.h>

#include <cmath>
#include <iosfwd>
#include <string>

namespace mtv {

class BigReal {
public:
    static constexpr long MIN_PREC = 64;

    explicit BigReal(long prec = MIN_PREC) {
        mpfr_init2(x_, clamp(prec));
        mpfr_set_zero(x_, 1);
    }
    BigReal(long v, long prec) {
        mpfr_init2(x_, clamp(prec));
        mpfr_set_si(x_, v, MPFR_RNDN);
    }
    BigReal(int v, long prec) : BigReal(static_cast<long>(v), prec) {}
    BigReal(const Rational& q, long prec) {
        mpfr_init2(x_, clamp(prec));
        mpfr_set_q(x_, q.raw(), MPFR_RNDN);
    }
    BigReal(const Integer& z, long prec) {
        mpfr_init2(x_, clamp(prec));
        mpfr_set_z(x_, z.raw(), MPFR_RNDN);
    }
    BigReal(double v, long prec) {
        mpfr_init2(x_, clamp(prec));
        mpfr_set_d(x_, v, MPFR_RNDN);
    }
    // decimal (possibly scientific) string
    BigReal(const std::string& dec, long prec) {
        mpfr_init2(x_, clamp(prec));
        if (mpfr_set_str(x_, dec.c_str(), 10, MPFR_RNDN) != 0) {
            mpfr_clear(x_);
            throw std::invalid_argument("BigReal: bad decimal string: " + dec);
        }
    }

    BigReal(const BigReal& o) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(x_, MIN_PREC);
        mpfr_swap(x_, o.x_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~BigReal() { mpfr_clear(x_); }

    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }
    long precision() const { return mpfr_get_prec(x_); }

    BigReal with_precision(long prec) const {
        BigReal r(prec);
        mpfr_set(r.x_, x_, MPFR_RNDN);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(x_); }
    int sgn() const { return mpfr_sgn(x_); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    // log2 of |x| (double approximation; -inf for 0)
    double log2_abs() const {
        if (mpfr_zero_p(x_)) return -1e300;
        long exp;
        double m = mpfr_get_d_2exp(&exp, x_, MPFR_RNDN);
        return static_cast<double>(exp) + std::log2(m < 0 ? -m : m);
    }

    friend BigReal operator+(const BigReal& a, const BigReal& b) {
        BigReal r(joint(a, b));
        mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a, const BigReal& b) {
        BigReal r(joint(a, b));
        mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(const BigReal& a, const BigReal& b) {
        BigReal r(joint(a, b));
        mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(const BigReal& a, const BigReal& b) {
        BigReal r(joint(a, b));
        mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a) {
        BigReal r(a.precision());
        mpfr_neg(r.x_, a.x_, MPFR_RNDN);
        return r;
    }

    BigReal& operator+=(const BigReal& b) { mpfr_add(x_, x_, b.x_, MPFR_RNDN); return *this; }
    BigReal& operator-=(const BigReal& b) { mpfr_sub(x_, x_, b.x_, MPFR_RNDN); return *this; }
    BigReal& operator*=(const BigReal& b) { mpfr_mul(x_, x_, b.x_, MPFR_RNDN); return *this; }
    BigReal& operator/=(const BigReal& b) { mpfr_div(x_, x_, b.x_, MPFR_RNDN); return *this; }

    BigReal& add_si(long v) { mpfr_add_si(x_, x_, v, MPFR_RNDN); return *this; }
    BigReal& mul_si(long v) { mpfr_mul_si(x_, x_, v, MPFR_RNDN); return *this; }
    BigReal& div_ui(unsigned long v) { mpfr_div_ui(x_, x_, v, MPFR_RNDN); return *this; }
    BigReal& mul_2exp(long e) { mpfr_mul_2si(x_, x_, e, MPFR_RNDN); return *this; }
    // fused this += a*b
    BigReal& addmul(const BigReal& a, const BigReal& b) {
        mpfr_fma(x_, a.x_, b.x_, x_, MPFR_RNDN);
        return *this;
    }

    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.x_, b.x_) == 0; }
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }

    friend BigReal abs(const BigReal& a) {
        BigReal r(a.precision());
        mpfr_abs(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend BigReal sqrt(const BigReal& a) {
        BigReal r(a.precision());
        mpfr_sqrt(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend BigReal log(const BigReal& a) {
        BigReal r(a.precision());
        mpfr_log(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend BigReal exp(const BigReal& a) {
        BigReal r(a.precision());
        mpfr_exp(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend BigReal pow_si(const BigReal& a, long e) {
        BigReal r(a.precision());
        mpfr_pow_si(r.x_, a.x_, e, MPFR_RNDN);
        return r;
    }

    // nearest integer
    Integer round_to_integer() const {
        Integer z;
        mpfr_t t;
        mpfr_init2(t, mpfr_get_prec(x_));
        mpfr_round(t, x_);
        mpfr_get_z(z.raw(), t, MPFR_RNDN);
        mpfr_clear(t);
        return z;
    }

    // Decimal scientific representation with `digits` significant digits.
    std::string to_decimal(size_t digits) const;

    static BigReal from_rational(const Rational& q, long prec) { return BigReal(q, prec); }

private:
    static long clamp(long p) { return p < MIN_PREC ? MIN_PREC : p; }
    static long joint(const BigReal& a, const BigReal& b) {
        return a.precision() > b.precision() ? a.precision() : b.precision();
    }
    mpfr_t x_;
};

std::ostream& operator<<(std::ostream& os, const BigReal& x);

// Precision policy: working bits / series terms for a decimal-digit request.
inline long prec_bits_for_digits(long digits) {
    return static_cast<long>(digits * 3.3219280948873623 + 0.5) + 96;
}
inline long series_terms_for_digits(long digits) {
    return static_cast<long>(digits * 3.3219280948873623 + 0.5) + 64;
}

} // namespace mtv
