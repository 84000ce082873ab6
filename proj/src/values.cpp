#include "mtv/values.hpp"

#include "mtv/errest.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mtv {

namespace {

// Error model for a cache hit: the stored decimal reproduces the original
// value to its full precision, whose error was dominated by the series
// tail (~2^-N) and accumulated rounding (~2^(-P+8) relative).
double cached_err_log2(const BigReal& v, const ValueContext& ctx) {
    double rel = v.log2_abs() - static_cast<double>(ctx.prec_bits) + 8.0;
    return std::max(-static_cast<double>(ctx.terms) + 2.0, rel);
}

Evaluated eval_letters_cached(const std::string& family, const std::string& index,
                              const std::string& signs,
                              const std::vector<SeriesLetter>& letters,
                              const ValueContext& ctx) {
    if (ctx.cache) {
        auto hit = ctx.cache->get(family, index, signs, ctx.prec_bits, ctx.terms);
        if (hit) return {*hit, cached_err_log2(*hit, ctx)};
    }
    Evaluated e = chen_evaluate_letters(letters, ctx.prec_bits, ctx.terms);
    if (ctx.cache)
        ctx.cache->put(family, index, signs, ctx.prec_bits, ctx.terms, e.value);
    return e;
}

std::pair<std::string, std::string> split_signed(const SignedIndex& z) {
    std::string s = z.to_string();
    auto pos = s.find(';');
    if (pos == std::string::npos) return {s, ""};
    return {s.substr(0, pos), s.substr(pos + 1)};
}

Evaluated altZ_uncached(const SignedIndex& z, const ValueContext& ctx) {
    EvalWord w = signed_index_to_eval_word(z);
    return chen_evaluate(w, ctx.prec_bits, ctx.terms);
}

Evaluated combo_value(const LinearCombo<SignedIndex>& combo, const ValueContext& ctx) {
    BigReal acc(0L, ctx.prec_bits);
    ErrAcc err;
    for (const auto& [z, c] : combo.terms()) {
        Evaluated e = altZ_value(z, ctx);
        acc.addmul(BigReal(c, ctx.prec_bits), e.value);
        err.add(coeff_log2(c) + e.err_log2);
    }
    err.add(acc.log2_abs() - static_cast<double>(ctx.prec_bits) +
            std::log2(static_cast<double>(combo.size() + 2)) + 2.0);
    return {acc, err.e};
}

} // namespace

Evaluated T_value(const Index& ix, const ValueContext& ctx, TRoute route) {
    if (ix.empty()) return {BigReal(1L, ctx.prec_bits), -1e300};
    if (!ix.is_admissible())
        throw std::domain_error("T_value: index is not admissible (last part must be >= 2)");
    switch (route) {
    case TRoute::Direct:
        return eval_letters_cached("T", ix.to_string(), "",
                                   t_word_letters(index_to_word(ix)), ctx);
    case TRoute::Expanded: {
        TWord w = index_to_word(ix);
        int r = ix.depth();
        BigReal acc(0L, ctx.prec_bits);
        ErrAcc err;
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            std::vector<SeriesLetter> letters;
            letters.reserve(w.letters.size());
            int bit = 0, sign = 1;
            for (uint8_t l : w.letters) {
                if (l == 1) {
                    if (mask & (1u << bit)) {
                        letters.push_back(SeriesLetter::MINUS_PLUS);
                        sign = -sign;
                    } else {
                        letters.push_back(SeriesLetter::ONE_MINUS);
                    }
                    ++bit;
                } else {
                    letters.push_back(SeriesLetter::DT_T);
                }
            }
            Evaluated e = chen_evaluate_letters(letters, ctx.prec_bits, ctx.terms);
            if (sign > 0)
                acc += e.value;
            else
                acc -= e.value;
            err.add(e.err_log2);
        }
        err.add(acc.log2_abs() - static_cast<double>(ctx.prec_bits) + r + 3.0);
        return {acc, err.e};
    }
    case TRoute::Signed:
        return combo_value(expand_T(ix), ctx);
    }
    throw std::logic_error("T_value: unknown route");
}

Evaluated t_value(const Index& ix, const ValueContext& ctx) {
    if (ix.empty()) return {BigReal(1L, ctx.prec_bits), -1e300};
    if (!ix.is_admissible())
        throw std::domain_error("t_value: index is not admissible (last part must be >= 2)");
    if (ctx.cache) {
        auto hit = ctx.cache->get("t", ix.to_string(), "", ctx.prec_bits, ctx.terms);
        if (hit) return {*hit, cached_err_log2(*hit, ctx)};
    }
    Evaluated e = combo_value(expand_t(ix), ctx);
    if (ctx.cache)
        ctx.cache->put("t", ix.to_string(), "", ctx.prec_bits, ctx.terms, e.value);
    return e;
}

Evaluated zeta_value(const Index& ix, const ValueContext& ctx) {
    if (ix.empty()) return {BigReal(1L, ctx.prec_bits), -1e300};
    if (!ix.is_admissible())
        throw std::domain_error("zeta_value: index is not admissible (last part must be >= 2)");
    SignedIndex z(ix.parts, std::vector<int8_t>(ix.parts.size(), 1));
    return altZ_value(z, ctx);
}

Evaluated altZ_value(const SignedIndex& z, const ValueContext& ctx) {
    if (z.empty()) return {BigReal(1L, ctx.prec_bits), -1e300};
    if (!z.is_convergent())
        throw std::domain_error("altZ_value: divergent signed index (last entry is (1,+))");
    if (ctx.cache) {
        auto [ip, sp] = split_signed(z);
        auto hit = ctx.cache->get("altZ", ip, sp, ctx.prec_bits, ctx.terms);
        if (hit) return {*hit, cached_err_log2(*hit, ctx)};
        Evaluated e = altZ_uncached(z, ctx);
        ctx.cache->put("altZ", ip, sp, ctx.prec_bits, ctx.terms, e.value);
        return e;
    }
    return altZ_uncached(z, ctx);
}

Evaluated genfun_lhs(const Rational& X, const Rational& Y, long digits,
                     ValueCache* cache) {
    Rational quarter(1, 4);
    if (abs(X) > quarter || abs(Y) > quarter)
        throw std::domain_error("genfun_lhs: requires |X| <= 1/4 and |Y| <= 1/4");
    if (Y.sgn() >= 0)
        throw std::domain_error("genfun_lhs: requires Y < 0");
    ValueContext ctx = ValueContext::for_digits(digits + 10, cache);
    if (X.is_zero()) return {BigReal(1L, ctx.prec_bits), -1e300};

    double q = std::max(std::fabs(X.to_double()), std::fabs(Y.to_double()));
    double target = -(static_cast<double>(digits) + 1.0) * std::log2(10.0);
    long M = 1;
    while (true) {
        double bound = std::log2(4.0 * (M + 2)) + M * std::log2(q) -
                       2.0 * std::log2(1.0 - q);
        if (bound < target) break;
        if (++M > 200000)
            throw std::runtime_error("genfun_lhs: truncation order too large");
    }

    BigReal sum(0L, ctx.prec_bits);
    ErrAcc err;
    for (long w = 2; w <= M; ++w) {
        for (long n = 1; n <= w - 1; ++n) {
            long m = w - n;
            std::vector<int> parts(static_cast<size_t>(n - 1), 1);
            parts.push_back(static_cast<int>(m + 1));
            Evaluated v = T_value(Index(std::move(parts)), ctx);
            Rational xy(1);
            for (long i = 0; i < m; ++i) xy *= X;
            for (long i = 0; i < n; ++i) xy *= Y;
            BigReal xyb(xy, ctx.prec_bits);
            sum.addmul(v.value, xyb);
            err.add(coeff_log2(xy) + v.err_log2);
        }
    }
    double tail = std::log2(4.0 * (M + 2)) + M * std::log2(q) -
                  2.0 * std::log2(1.0 - q);
    err.add(tail);
    err.add(std::log2(static_cast<double>(M * M + 4)) -
            static_cast<double>(ctx.prec_bits) + 2.0);
    BigReal result = BigReal(1L, ctx.prec_bits) - sum;
    return {result, err.e};
}

Evaluated genfun_rhs(const Rational& X, const Rational& Y, long digits) {
    Rational quarter(1, 4);
    if (abs(X) > quarter || abs(Y) > quarter)
        throw std::domain_error("genfun_rhs: requires |X| <= 1/4 and |Y| <= 1/4");
    if (Y.sgn() >= 0)
        throw std::domain_error("genfun_rhs: requires Y < 0");
    long P = prec_bits_for_digits(digits + 10);
    Rational one(1);
    BigReal a(one - X, P), b(one - Y, P), c(one - X - Y, P);
    BigReal g1 = gamma(a, P);
    BigReal g2 = gamma(b, P);
    BigReal g3 = gamma(c, P);
    BigReal f = hyp2f1_at_minus1(a, b, c, P);
    BigReal v = g1 * g2;
    v /= g3;
    v *= f;
    v.mul_2exp(1);
    double err = v.log2_abs() - static_cast<double>(P) + 24.0;
    return {v, err};
}

} // namespace mtv
