#include "mtv/series_eval.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace mtv {

namespace {

BigReal compute_pi(long P) {
    // Brent-Salamin AGM iteration; quadratic convergence.
    const long W = P + 64;
    BigReal a(1, W);
    BigReal b = sqrt(BigReal(Rational(1, 2), W));
    BigReal t(Rational(1, 4), W);
    BigReal p(1, W);
    for (int it = 0; it < 64; ++it) {
        BigReal an = a + b;
        an.mul_2exp(-1);
        BigReal d = a - an; // a - (a+b)/2 = (a-b)/2
        if (d.log2_abs() < -(P + 8)) {
            a = std::move(an);
            break;
        }
        b = sqrt(a * b);
        t -= p * d * d;
        p.mul_2exp(1);
        a = std::move(an);
    }
    BigReal s = a + a; // final (a+b) ~ 2a
    BigReal pi = s * s / (t * BigReal(4, W));
    return pi.with_precision(P);
}

BigReal compute_log2(long P) {
    // log 2 = 2 atanh(1/3) = sum_{k>=0} 2 / (3 (2k+1) 9^k)
    const long W = P + 64;
    BigReal sum(0, W);
    BigReal pw(Rational(2, 3), W); // 2/3 * 9^{-k}
    for (unsigned long k = 0;; ++k) {
        BigReal term = pw;
        term.div_ui(2 * k + 1);
        sum += term;
        if (term.log2_abs() < -(P + 16)) break;
        pw.div_ui(9);
    }
    return sum.with_precision(P);
}

struct ConstCache {
    std::mutex mu;
    std::map<long, std::unique_ptr<Constants>> entries;
};

ConstCache& cache() {
    static ConstCache c;
    return c;
}

} // namespace

const Constants& constants(long prec_bits) {
    const long P = prec_bits < BigReal::MIN_PREC ? BigReal::MIN_PREC : prec_bits;
    ConstCache& c = cache();
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.entries.find(P);
    if (it == c.entries.end()) {
        auto e = std::make_unique<Constants>(Constants{
            compute_pi(P), compute_log2(P), sqrt(BigReal(2, P + 32)).with_precision(P)});
        it = c.entries.emplace(P, std::move(e)).first;
    }
    return *it->second;
}

} // namespace mtv
