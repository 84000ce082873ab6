#pragma once
// Exact integer / rational arithmetic: thin RAII wrappers over GMP.

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace mtv {

class Integer {
public:
    Integer() { mpz_init(z_); }
    Integer(long v) { mpz_init_set_si(z_, v); }
    explicit Integer(const std::string& s) {
        if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw std::invalid_argument("Integer: bad decimal string: " + s);
        }
    }
    Integer(const Integer& o) { mpz_init_set(z_, o.z_); }
    Integer(Integer&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Integer& operator=(const Integer& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Integer& operator=(Integer&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Integer() { mpz_clear(z_); }

    mpz_ptr raw() { return z_; }
    mpz_srcptr raw() const { return z_; }

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    int sgn() const { return mpz_sgn(z_); }
    bool fits_long() const { return mpz_fits_slong_p(z_); }
    long to_long() const { return mpz_get_si(z_); }
    double to_double() const { return mpz_get_d(z_); }
    size_t bits() const { return mpz_sizeinbase(z_, 2); }

    Integer& operator+=(const Integer& o) { mpz_add(z_, z_, o.z_); return *this; }
    Integer& operator-=(const Integer& o) { mpz_sub(z_, z_, o.z_); return *this; }
    Integer& operator*=(const Integer& o) { mpz_mul(z_, z_, o.z_); return *this; }
    Integer& operator*=(long v) { mpz_mul_si(z_, z_, v); return *this; }

    friend Integer operator+(Integer a, const Integer& b) { a += b; return a; }
    friend Integer operator-(Integer a, const Integer& b) { a -= b; return a; }
    friend Integer operator*(Integer a, const Integer& b) { a *= b; return a; }
    friend Integer operator-(const Integer& a) {
        Integer r;
        mpz_neg(r.z_, a.z_);
        return r;
    }

    // addmul/submul fused helpers (hot in lattice code)
    void addmul(const Integer& a, const Integer& b) { mpz_addmul(z_, a.z_, b.z_); }
    void submul(const Integer& a, const Integer& b) { mpz_submul(z_, a.z_, b.z_); }

    friend bool operator==(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }
    friend bool operator<(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) < 0; }
    friend bool operator<=(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
    friend bool operator>(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) > 0; }
    friend bool operator>=(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) >= 0; }

    friend Integer abs(const Integer& a) {
        Integer r;
        mpz_abs(r.z_, a.z_);
        return r;
    }
    friend Integer gcd(const Integer& a, const Integer& b) {
        Integer r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }

    static Integer pow10(unsigned e) {
        Integer r;
        mpz_ui_pow_ui(r.z_, 10, e);
        return r;
    }
    static Integer binomial(unsigned long n, unsigned long k) {
        Integer r;
        mpz_bin_uiui(r.raw(), n, k);
        return r;
    }

    std::string to_string() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

private:
    mpz_t z_;
};

class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rational(long num, unsigned long den) {
        mpq_init(q_);
        mpq_set_si(q_, num, den);
        mpq_canonicalize(q_);
    }
    explicit Rational(const Integer& z) {
        mpq_init(q_);
        mpq_set_z(q_, z.raw());
    }
    // parses "p/q" or "p"
    explicit Rational(const std::string& s) {
        mpq_init(q_);
        if (mpq_set_str(q_, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q_)) == 0) {
            mpq_clear(q_);
            throw std::invalid_argument("Rational: bad string: " + s);
        }
        mpq_canonicalize(q_);
    }
    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    mpq_ptr raw() { return q_; }
    mpq_srcptr raw() const { return q_; }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    int sgn() const { return mpq_sgn(q_); }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    double to_double() const { return mpq_get_d(q_); }
    Integer numerator() const {
        Integer n;
        mpz_set(n.raw(), mpq_numref(q_));
        return n;
    }
    Integer denominator() const {
        Integer d;
        mpz_set(d.raw(), mpq_denref(q_));
        return d;
    }

    Rational& operator+=(const Rational& o) { mpq_add(q_, q_, o.q_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(q_, q_, o.q_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(q_, q_, o.q_); return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        mpq_div(q_, q_, o.q_);
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) {
        Rational r;
        mpq_neg(r.q_, a.q_);
        return r;
    }

    friend Rational abs(const Rational& a) {
        Rational r;
        mpq_abs(r.q_, a.q_);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }

    // 2^-e exactly
    static Rational pow2(int e) {
        Rational r(1);
        if (e >= 0)
            mpq_mul_2exp(r.q_, r.q_, e);
        else
            mpq_div_2exp(r.q_, r.q_, -e);
        return r;
    }

    std::string to_string() const {
        char* s = mpq_get_str(nullptr, 10, q_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

private:
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Integer& z);
std::ostream& operator<<(std::ostream& os, const Rational& q);

} // namespace mtv
