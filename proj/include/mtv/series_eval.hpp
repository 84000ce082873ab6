#pragma once
// Iterated-integral evaluation kernel. Words over the level-2 alphabet are
// integrated as truncated power series; the path 0..1 is split at t = 1/2
// and the upper half is pulled back through t -> 1-t, so every series is
// evaluated at 1/2 where the geometric tail is explicit.

#include "mtv/bigreal.hpp"
#include "mtv/indices.hpp"

#include <utility>
#include <vector>

namespace mtv {

// Letters the series kernel integrates against. The first four match the
// EvalWord alphabet; OMEGA is the unexpanded form 2dt/(1-t^2) used by the
// T-family words (equal to letter(+1) - letter(-1) by partial fractions),
// EVEN is its image under t -> 1-t, namely dt/t + dt/(2-t).
enum class SeriesLetter : int8_t {
    DT_T = 0,        // dt/t
    ONE_MINUS = 1,   // dt/(1-t)
    MINUS_PLUS = -1, // -dt/(1+t)
    TWO_MINUS = 2,   // dt/(2-t)
    OMEGA = 3,       // 2dt/(1-t^2)
    EVEN = 4,        // dt/t + dt/(2-t)
};

SeriesLetter letter_from_eval(int8_t l);

// Coefficients c[0..N] of a power series about t = 0, all at one precision.
struct TruncatedSeries {
    long prec = BigReal::MIN_PREC;
    std::vector<BigReal> c;

    TruncatedSeries() = default;
    TruncatedSeries(long prec_bits, long order) : prec(prec_bits) {
        c.assign(static_cast<size_t>(order) + 1, BigReal(prec_bits));
    }
    long order() const { return static_cast<long>(c.size()) - 1; }

    static TruncatedSeries unit(long prec_bits, long order) {
        TruncatedSeries s(prec_bits, order);
        s.c[0] = BigReal(1, prec_bits);
        return s;
    }
};

// g(x) = integral_0^x f(t) * form(letter). Letter DT_T (and the DT_T part of
// EVEN) requires f_0 = 0; otherwise the integrand has a t=0 logarithmic
// divergence and this throws std::domain_error.
TruncatedSeries apply_letter(const TruncatedSeries& f, SeriesLetter letter);

// Horner evaluation at t = 1/2 (exact halving per step; only adds round).
// Returns the value and a conservative tail estimate log2(|f_N| * 2^{1-N}).
std::pair<BigReal, double> eval_at_half(const TruncatedSeries& f);

// A value with a conservative absolute-error estimate, log2 scale.
struct Evaluated {
    BigReal value;
    double err_log2 = -1e300;
};

// Iterated integral over 0 < t_1 < ... < t_k < 1 of the word's forms,
// Chen-split at 1/2. Precondition: word empty, or first letter reads a form
// finite at 0 (not DT_T/EVEN) and last letter's pullback does too (not
// ONE_MINUS/OMEGA).
Evaluated chen_evaluate_letters(const std::vector<SeriesLetter>& w, long prec_bits,
                                long terms);
Evaluated chen_evaluate(const EvalWord& w, long prec_bits, long terms);

// T-family word as kernel letters: 1 -> OMEGA, 0 -> DT_T.
std::vector<SeriesLetter> t_word_letters(const TWord& w);

// pi, log 2, sqrt 2 at precision P (correct to 2^{-P+4}), memoized per P.
struct Constants {
    BigReal pi;
    BigReal log2;
    BigReal sqrt2;
};
const Constants& constants(long prec_bits);

// Gamma for x > 0: upward argument shift until x+n >= 0.35*P, then the
// Stirling asymptotic series with exact rational Bernoulli numbers.
// Relative error <= 2^{-P+8}.
BigReal gamma(const BigReal& x, long prec_bits);

// Exact rational Bernoulli number B_m (B_1 = -1/2), memoized.
Rational bernoulli(unsigned m);

// 2F1(a, b; c; -1) via the Pfaff transform 2^{-a} * 2F1(a, c-b; c; 1/2).
// Throws if c is zero or a negative integer (pole).
BigReal hyp2f1_at_minus1(const BigReal& a, const BigReal& b, const BigReal& c,
                         long prec_bits);

} // namespace mtv
