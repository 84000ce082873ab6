#include "mtv/series_eval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mtv {

SeriesLetter letter_from_eval(int8_t l) {
    switch (l) {
        case 0: return SeriesLetter::DT_T;
        case 1: return SeriesLetter::ONE_MINUS;
        case -1: return SeriesLetter::MINUS_PLUS;
        case 2: return SeriesLetter::TWO_MINUS;
        default: throw std::invalid_argument("bad eval-word letter");
    }
}

std::vector<SeriesLetter> t_word_letters(const TWord& w) {
    std::vector<SeriesLetter> out;
    out.reserve(w.size());
    for (uint8_t l : w.letters)
        out.push_back(l == 1 ? SeriesLetter::OMEGA : SeriesLetter::DT_T);
    return out;
}

TruncatedSeries apply_letter(const TruncatedSeries& f, SeriesLetter letter) {
    const long N = f.order();
    const long P = f.prec;
    TruncatedSeries g(P, N);

    switch (letter) {
        case SeriesLetter::DT_T: {
            if (!f.c[0].is_zero())
                throw std::domain_error("apply_letter(dt/t): logarithmic divergence, f(0) != 0");
            for (long n = 1; n <= N; ++n) {
                g.c[n] = f.c[n];
                g.c[n].div_ui(static_cast<unsigned long>(n));
            }
            break;
        }
        case SeriesLetter::ONE_MINUS: {
            // h_n = h_{n-1} + f_n (prefix sums of f); g_n = h_{n-1}/n
            BigReal h = f.c[0];
            for (long n = 1; n <= N; ++n) {
                g.c[n] = h;
                g.c[n].div_ui(static_cast<unsigned long>(n));
                h += f.c[n];
            }
            break;
        }
        case SeriesLetter::MINUS_PLUS: {
            // h solves h_n + h_{n-1} = f_n; then negate and integrate
            BigReal h = f.c[0];
            for (long n = 1; n <= N; ++n) {
                g.c[n] = -h;
                g.c[n].div_ui(static_cast<unsigned long>(n));
                BigReal nh = f.c[n] - h;
                h = std::move(nh);
            }
            break;
        }
        case SeriesLetter::TWO_MINUS: {
            // h solves 2h_n - h_{n-1} = f_n, i.e. h_n = (f_n + h_{n-1})/2
            BigReal h = f.c[0];
            h.mul_2exp(-1);
            for (long n = 1; n <= N; ++n) {
                g.c[n] = h;
                g.c[n].div_ui(static_cast<unsigned long>(n));
                h += f.c[n];
                h.mul_2exp(-1);
            }
            break;
        }
        case SeriesLetter::OMEGA: {
            // h solves (1-t^2) h = 2f: h_n = 2 f_n + h_{n-2}
            BigReal hm1 = f.c[0]; // h_0
            hm1.mul_2exp(1);
            BigReal hm2(P); // h_{-1} = 0
            for (long n = 1; n <= N; ++n) {
                g.c[n] = hm1;
                g.c[n].div_ui(static_cast<unsigned long>(n));
                BigReal hn = f.c[n];
                hn.mul_2exp(1);
                hn += hm2;
                hm2 = std::move(hm1);
                hm1 = std::move(hn);
            }
            break;
        }
        case SeriesLetter::EVEN: {
            if (!f.c[0].is_zero())
                throw std::domain_error("apply_letter(even): logarithmic divergence, f(0) != 0");
            // dt/t part plus dt/(2-t) part
            BigReal h = f.c[0];
            h.mul_2exp(-1);
            for (long n = 1; n <= N; ++n) {
                g.c[n] = f.c[n];
                g.c[n] += h;
                g.c[n].div_ui(static_cast<unsigned long>(n));
                h += f.c[n];
                h.mul_2exp(-1);
            }
            break;
        }
    }
    return g;
}

std::pair<BigReal, double> eval_at_half(const TruncatedSeries& f) {
    const long N = f.order();
    BigReal v = f.c[N];
    for (long n = N - 1; n >= 0; --n) {
        v.mul_2exp(-1);
        v += f.c[n];
    }
    double tail = f.c[N].log2_abs() - static_cast<double>(N) + 1.0;
    return {std::move(v), tail};
}

namespace {

struct Mapped {
    SeriesLetter letter;
    int sign;
};

// pullback through t -> 1-s of the letter's coefficient function
Mapped phi(SeriesLetter l) {
    switch (l) {
        case SeriesLetter::DT_T: return {SeriesLetter::ONE_MINUS, +1};
        case SeriesLetter::ONE_MINUS: return {SeriesLetter::DT_T, +1};
        case SeriesLetter::MINUS_PLUS: return {SeriesLetter::TWO_MINUS, -1};
        case SeriesLetter::TWO_MINUS: return {SeriesLetter::MINUS_PLUS, -1};
        case SeriesLetter::OMEGA: return {SeriesLetter::EVEN, +1};
        case SeriesLetter::EVEN: return {SeriesLetter::OMEGA, +1};
    }
    throw std::logic_error("unreachable");
}

bool singular_at_zero(SeriesLetter l) {
    return l == SeriesLetter::DT_T || l == SeriesLetter::EVEN;
}

} // namespace

Evaluated chen_evaluate_letters(const std::vector<SeriesLetter>& w, long prec_bits,
                                long terms) {
    const long P = prec_bits < BigReal::MIN_PREC ? BigReal::MIN_PREC : prec_bits;
    const long N = terms < 8 ? 8 : terms;
    const size_t k = w.size();

    if (k == 0) return {BigReal(1, P), -1e300};
    if (singular_at_zero(w.front()))
        throw std::domain_error("word not evaluable: leading letter singular at 0");
    if (singular_at_zero(phi(w.back()).letter))
        throw std::domain_error("word not evaluable: trailing letter singular at 1");

    // prefix integrals I(0; w_1..w_j; 1/2), j = 0..k
    std::vector<BigReal> pref;
    std::vector<double> pref_tail(k + 1, -1e300);
    pref.reserve(k + 1);
    pref.emplace_back(1, P);
    {
        TruncatedSeries f = TruncatedSeries::unit(P, N);
        for (size_t i = 0; i < k; ++i) {
            f = apply_letter(f, w[i]);
            auto [v, tail] = eval_at_half(f);
            pref.push_back(std::move(v));
            pref_tail[i + 1] = tail;
        }
    }

    // suffix integrals I(1/2; w_{j+1}..w_k; 1): pull back through t -> 1-s,
    // which reverses the simplex; apply the mapped letters right-to-left.
    std::vector<BigReal> suf(k + 1, BigReal(P));
    std::vector<double> suf_tail(k + 1, -1e300);
    suf[k] = BigReal(1, P);
    {
        TruncatedSeries g = TruncatedSeries::unit(P, N);
        int sign = 1;
        for (size_t i = k; i-- > 0;) {
            Mapped m = phi(w[i]);
            sign *= m.sign;
            g = apply_letter(g, m.letter);
            auto [v, tail] = eval_at_half(g);
            if (sign < 0) v = -v;
            suf[i] = std::move(v);
            suf_tail[i] = tail;
        }
    }

    BigReal total(P);
    double max_term_log2 = -1e300;
    double err = -1e300;
    for (size_t j = 0; j <= k; ++j) {
        total.addmul(pref[j], suf[j]);
        double pl = pref[j].log2_abs(), sl = suf[j].log2_abs();
        max_term_log2 = std::max(max_term_log2, pl + sl);
        // tail of one factor scaled by the other
        err = std::max(err, pref_tail[j] + sl);
        err = std::max(err, suf_tail[j] + pl);
    }
    // accumulate the (k+1)-term sum and per-letter O(N) rounding
    double ops = static_cast<double>(6 * k * N + 2 * (k + 1) + 16);
    double round_err = std::log2(ops) - static_cast<double>(P) +
                       std::max(max_term_log2, 1.0);
    err = std::max(err, round_err) + std::log2(static_cast<double>(k + 2)) + 1.0;
    return {std::move(total), err};
}

Evaluated chen_evaluate(const EvalWord& w, long prec_bits, long terms) {
    std::vector<SeriesLetter> letters;
    letters.reserve(w.size());
    for (int8_t l : w.letters) letters.push_back(letter_from_eval(l));
    return chen_evaluate_letters(letters, prec_bits, terms);
}

} // namespace mtv
