#include "mtv/series_eval.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace mtv {

namespace {
std::mutex bern_mu;
std::vector<Rational> bern_cache; // B_0, B_1, ...
} // namespace

Rational bernoulli(unsigned m) {
    std::lock_guard<std::mutex> lock(bern_mu);
    if (bern_cache.empty()) {
        bern_cache.emplace_back(1);        // B_0
        bern_cache.emplace_back(-1L, 2UL); // B_1
    }
    while (bern_cache.size() <= m) {
        unsigned n = static_cast<unsigned>(bern_cache.size());
        if (n % 2 == 1) {
            bern_cache.emplace_back(0);
            continue;
        }
        // sum_{k=0}^{n} C(n+1,k) B_k = 0  =>  B_n = -1/C(n+1,n) * sum_{k<n} ...
        Rational s(0);
        for (unsigned k = 0; k < n; ++k) {
            if (bern_cache[k].is_zero()) continue;
            Rational term(Integer::binomial(n + 1, k));
            term *= bern_cache[k];
            s += term;
        }
        s /= Rational(Integer::binomial(n + 1, n));
        bern_cache.push_back(-s);
    }
    return bern_cache[m];
}

BigReal gamma(const BigReal& x, long prec_bits) {
    const long P = prec_bits < BigReal::MIN_PREC ? BigReal::MIN_PREC : prec_bits;
    if (x.sgn() <= 0) throw std::domain_error("gamma: requires x > 0");
    const long W = P + 64;

    // shift upward so the Stirling series converges well past 2^-P
    double shift_target = 0.35 * static_cast<double>(P);
    long n = 0;
    double xd = x.to_double();
    if (xd < shift_target) n = static_cast<long>(std::ceil(shift_target - xd));

    BigReal z = x.with_precision(W);
    z.add_si(n);

    // ln Gamma(z) = (z - 1/2) ln z - z + ln(2 pi)/2 + sum B_{2j}/(2j(2j-1) z^{2j-1})
    const Constants& cs = constants(W);
    BigReal ln2pi = log(cs.pi) + cs.log2;
    BigReal lng = (z - BigReal(Rational(1, 2), W)) * log(z) - z;
    ln2pi.mul_2exp(-1);
    lng += ln2pi;

    BigReal zinv = BigReal(1, W) / z;
    BigReal zinv2 = zinv * zinv;
    BigReal pw = zinv; // z^{-(2j-1)}
    for (unsigned j = 1; j < 4096; ++j) {
        Rational coef = bernoulli(2 * j);
        coef /= Rational(static_cast<long>(2 * j) * static_cast<long>(2 * j - 1));
        BigReal term = BigReal(coef, W) * pw;
        lng += term;
        if (term.log2_abs() < -(P + 32)) break;
        pw *= zinv2;
    }

    BigReal g = exp(lng);
    // downward recurrence: Gamma(x) = Gamma(x+n) / (x (x+1) ... (x+n-1))
    if (n > 0) {
        BigReal acc(1, W);
        BigReal f = x.with_precision(W);
        for (long i = 0; i < n; ++i) {
            acc *= f;
            f.add_si(1);
        }
        g /= acc;
    }
    return g.with_precision(P);
}

BigReal hyp2f1_at_minus1(const BigReal& a, const BigReal& b, const BigReal& c,
                         long prec_bits) {
    const long P = prec_bits < BigReal::MIN_PREC ? BigReal::MIN_PREC : prec_bits;
    const long W = P + 64;

    // c must not be a pole of the series
    if (c.sgn() <= 0) {
        BigReal nearest(c.round_to_integer(), c.precision());
        if (nearest == c)
            throw std::domain_error("hyp2f1_at_minus1: c is a non-positive integer (pole)");
    }

    // Pfaff: F(a, b; c; -1) = 2^{-a} F(a, c-b; c; 1/2)
    BigReal aa = a.with_precision(W), bb = (c - b).with_precision(W),
            cc = c.with_precision(W);
    BigReal sum(1, W), term(1, W);
    BigReal an = aa, bn = bb, cn = cc;
    double guard = std::abs(aa.to_double()) + std::abs(bb.to_double()) + 8.0;
    for (unsigned long nn = 0; nn < 1u << 24; ++nn) {
        BigReal next = term * an * bn / cn;
        next.div_ui(nn + 1);
        next.mul_2exp(-1);
        sum += next;
        term = std::move(next);
        an.add_si(1);
        bn.add_si(1);
        cn.add_si(1);
        if (static_cast<double>(nn) > guard && term.log2_abs() < -(P + 16)) break;
    }

    // 2^{-a}: exp(-a log 2)
    const Constants& cs = constants(W);
    BigReal scale = exp(-(aa * cs.log2));
    return (sum * scale).with_precision(P);
}

} // namespace mtv
