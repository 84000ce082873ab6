// Backward-recursion oracle. For an index (k_1,...,k_r) define the tail
// functions R_{r+1} == 1 and
//   R_j(m) = sum_{n > m} w_j(n mod 2) n^{-k_j} R_{j+1}(n),
// where the level weight w_j encodes the parity constraint or sign of the
// family (T: only n == j (mod 2); t: n odd; zeta: all n; alternating:
// sigma^n). The value is R_1(0).
//
// Each R_j is tabulated for m <= M by a backward sweep. The seed R_j(M) and
// the asymptotic behaviour needed one level up come from Euler-Maclaurin:
// every parity-restricted tail is a Hurwitz zeta, sum_{l>=0}(m+d+2l)^{-s} =
// 2^{-s} zeta(s, (m+d)/2), and R_{j+1} is carried as a 1/m power expansion
// with separate coefficients for even and odd m (signs alternate with
// parity). All exponents hitting the machinery are >= 2 because the last
// exponent is >= 2 and deeper expansions have no constant term.

#include "oracle.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mtv_test {
namespace {

constexpr int IMAX = 12;      // expansion order in 1/m
constexpr long M = 100000;    // direct-summation cutoff

// B_2, B_4, ..., B_20
constexpr long double B2I[10] = {
    1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66,
    -691.0L / 2730, 7.0L / 6, -3617.0L / 510, 43867.0L / 798, -174611.0L / 330};

long double ipow(long double x, int e) {
    long double r = 1.0L;
    while (e-- > 0) r *= x;
    return r;
}

// Hurwitz zeta(s, a) for integer s >= 2, a > 0, via argument shift plus the
// asymptotic series. Relative accuracy ~1e-18.
long double hurwitz(int s, long double a) {
    long double acc = 0.0L;
    while (a < 40.0L) {
        acc += 1.0L / ipow(a, s);
        a += 1.0L;
    }
    long double inv = 1.0L / a;
    long double v = ipow(inv, s - 1) / (s - 1) + 0.5L * ipow(inv, s);
    long double poch = static_cast<long double>(s); // s(s+1)...(s+2i-2)
    long double apow = ipow(inv, s + 1);
    for (int i = 1; i <= 10; ++i) {
        long double fact = 1.0L;
        for (int j = 2; j <= 2 * i; ++j) fact *= j;
        v += B2I[i - 1] / fact * poch * apow;
        poch *= (s + 2 * i - 1) * (s + 2 * i);
        apow *= inv * inv;
    }
    return acc + v;
}

// Numeric tail sum_{n > m, n == rho (mod 2)} n^{-s}, rho in {0, 1}.
long double parity_tail(int s, long m, int rho) {
    int d = (static_cast<int>((m + 1) & 1) == rho) ? 1 : 2;
    return std::pow(2.0L, static_cast<long double>(-s)) *
           hurwitz(s, (static_cast<long double>(m) + d) / 2);
}

using Coeffs = std::array<long double, IMAX + 1>; // of m^{-i}

// out[x+p] += f * binom(-x, p) * d^p  (the 1/m expansion of (m+d)^{-x})
void add_shifted_power(Coeffs& out, int x, long double d, long double f) {
    long double binom = 1.0L; // binom(-x, p)
    long double dp = 1.0L;
    for (int p = 0; x + p <= IMAX; ++p) {
        out[x + p] += f * binom * dp;
        binom *= -(static_cast<long double>(x) + p) / (p + 1);
        dp *= d;
    }
}

// 1/m expansion of sum_{l>=0} (m+d+2l)^{-s} = 2^{-s} zeta(s, (m+d)/2),
// s >= 2, d in {1, 2}. From zeta(s,a) ~ a^{1-s}/(s-1) + a^{-s}/2 +
// sum_i B_{2i}/(2i)! (s)_{2i-1} a^{1-s-2i} with a = (m+d)/2.
Coeffs parity_tail_expansion(int s, int d) {
    Coeffs e{};
    if (s - 1 <= IMAX) add_shifted_power(e, s - 1, d, 0.5L / (s - 1));
    if (s <= IMAX) add_shifted_power(e, s, d, 0.5L);
    long double poch = static_cast<long double>(s);
    for (int i = 1; s + 2 * i - 1 <= IMAX && i <= 10; ++i) {
        long double fact = 1.0L;
        for (int j = 2; j <= 2 * i; ++j) fact *= j;
        add_shifted_power(e, s + 2 * i - 1, d,
                          B2I[i - 1] / fact * poch * ipow(2.0L, 2 * i - 1));
        poch *= (s + 2 * i - 1) * (s + 2 * i);
    }
    return e;
}

struct Level {
    int k;
    long double w[2]; // weight of even (w[0]) / odd (w[1]) summands
};

// Expansion of R_j as a function of the parity of its argument m.
struct Expansion {
    Coeffs c[2]{}; // c[m % 2]
};

long double nested_value(const std::vector<Level>& levels) {
    const int r = static_cast<int>(levels.size());
    if (r == 0) return 1.0L;
    if (levels.back().k < 2)
        throw std::invalid_argument("oracle: last exponent must be >= 2");

    std::vector<long double> cur(M + 1, 1.0L), next(M + 1, 0.0L);
    Expansion exp_above; // of R_{j+1}
    exp_above.c[0][0] = exp_above.c[1][0] = 1.0L;

    for (int j = r; j >= 1; --j) {
        const Level& lv = levels[j - 1];

        // seed: analytic tail R_j(M)
        long double seed = 0.0L;
        for (int rho = 0; rho < 2; ++rho) {
            if (lv.w[rho] == 0.0L) continue;
            for (int i = 0; i <= IMAX; ++i) {
                long double ci = exp_above.c[rho][i];
                if (ci != 0.0L) seed += lv.w[rho] * ci * parity_tail(lv.k + i, M, rho);
            }
        }

        // backward sweep over the exact table
        next[M] = seed;
        for (long m = M - 1; m >= 0; --m) {
            long n = m + 1;
            int rho = static_cast<int>(n & 1);
            long double v = next[m + 1];
            if (lv.w[rho] != 0.0L)
                v += lv.w[rho] * cur[m + 1] / ipow(static_cast<long double>(n), lv.k);
            next[m] = v;
        }

        // expansion of R_j per argument parity
        Expansion mine;
        for (int par = 0; par < 2; ++par) {
            for (int rho = 0; rho < 2; ++rho) {
                if (lv.w[rho] == 0.0L) continue;
                int d = (rho != par) ? 1 : 2;
                for (int i = 0; i <= IMAX; ++i) {
                    long double ci = exp_above.c[rho][i];
                    if (ci == 0.0L || lv.k + i > IMAX + 1) continue;
                    Coeffs e = parity_tail_expansion(lv.k + i, d);
                    for (int q = 0; q <= IMAX; ++q)
                        mine.c[par][q] += lv.w[rho] * ci * e[q];
                }
            }
        }
        exp_above = mine;
        cur.swap(next);
    }
    return cur[0];
}

std::vector<Level> make_levels(const std::vector<int>& ks,
                               const std::vector<int8_t>* signs, int family) {
    // family: 0 = T (parity m_i == i), 1 = t (all odd), 2 = zeta/alternating
    std::vector<Level> ls(ks.size());
    for (size_t j = 0; j < ks.size(); ++j) {
        ls[j].k = ks[j];
        if (family == 0) {
            int rho = static_cast<int>((j + 1) % 2);
            ls[j].w[rho] = 1.0L;
            ls[j].w[1 - rho] = 0.0L;
        } else if (family == 1) {
            ls[j].w[0] = 0.0L;
            ls[j].w[1] = 1.0L;
        } else {
            if (signs && (*signs)[j] < 0) {
                ls[j].w[0] = 1.0L; // (-1)^n = +1 for even n
                ls[j].w[1] = -1.0L;
            } else {
                ls[j].w[0] = ls[j].w[1] = 1.0L;
            }
        }
    }
    return ls;
}

} // namespace

long double oracle_T(const mtv::Index& ix) {
    long double v = nested_value(make_levels(ix.parts, nullptr, 0));
    return std::pow(2.0L, static_cast<long double>(ix.depth())) * v;
}

long double oracle_t(const mtv::Index& ix) {
    return nested_value(make_levels(ix.parts, nullptr, 1));
}

long double oracle_zeta(const mtv::Index& ix) {
    return nested_value(make_levels(ix.parts, nullptr, 2));
}

long double oracle_altZ(const mtv::SignedIndex& z) {
    return nested_value(make_levels(z.parts, &z.signs, 2));
}

} // namespace mtv_test
