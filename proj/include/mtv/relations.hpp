#pragma once
// Identity verification: each check evaluates both sides at working
// precision, reports |residual| against a tolerance of 10x the tracked
// error estimate, and retries once at doubled precision before declaring
// failure. Symbolic checks compare formal linear combinations exactly.

#include "mtv/indices.hpp"
#include "mtv/values.hpp"

#include <string>
#include <vector>

namespace mtv {

struct VerificationReport {
    std::string name;    // check family, e.g. "duality"
    std::string params;  // instance, e.g. "(1,3)" or "k=5"
    bool pass = false;
    bool exact = false;      // symbolic check, residual identically zero
    bool conjecture = false; // conjectural statement (informational status)
    double residual_log10 = -1e300;
    double tolerance_log10 = -1e300;
    std::string residual_str;
    std::string tolerance_str;
    std::string note; // extra detail, e.g. a recovered relation
    double wall_ms = 0.0;
};

// T(index) = T(dual index). Requires a nonempty admissible index.
VerificationReport check_duality(const Index& ix, long digits,
                                 ValueCache* cache = nullptr);

// sum_{j=2}^{k-1} 2^{j-1} T(k-j, j) = (k-1) T(k), k >= 3.
VerificationReport check_sum_formula_depth2(int k, long digits,
                                            ValueCache* cache = nullptr);

// sum_{a+b+c=k, a,b>=1, c>=2} T(a,b,c) + sum_{j=2}^{k-2} T(1, k-1-j, j)
//   = (2/3) T(2) T(k-2), k >= 4.
VerificationReport check_sum_formula_depth3(int k, long digits,
                                            ValueCache* cache = nullptr);

// sum_{j=2}^{k-1} T(k-j, j) + T(1, k-1)
//   = (k-1) T(k) - (1/2) sum_{j=2}^{k-2} T(j) T(k-j), k >= 3.
VerificationReport check_intermediate_sum(int k, long digits,
                                          ValueCache* cache = nullptr);

// sum_{j=2}^{k-1} 2^{j-1} zeta(k-j, j) = ((k+1)/2) zeta(k), k >= 3.
VerificationReport check_weighted_dzv(int k, long digits,
                                      ValueCache* cache = nullptr);

// Depth-2 parity reduction for p+q odd, p >= 1, q >= 2:
// (-1)^q T(p,q) = C(p+q-1,q) T(p+q)
//   - sum_{mu==q mod 2, 1<=mu<=q-2} C(p+mu-1,mu)/(2^{q-mu}-1) T(p+mu) T(q-mu)
//   - sum_{mu==p mod 2, 0<=mu<=p-2} C(q+mu-1,mu) T(p-mu) T(q+mu).
VerificationReport check_parity_depth2(int p, int q, long digits,
                                       ValueCache* cache = nullptr);

// Symbolic: word shuffle of (j) and (k-j) equals
// sum_{nu=2}^{k-1} [C(nu-1,j-1) + C(nu-1,k-j-1)] (k-nu, nu), 2 <= j <= k-2.
VerificationReport check_shuffle_TT_expansion(int j, int k);

// Height-one generating function: truncated double series against the
// Gamma/2F1 closed form at rational (X, Y), |X|,|Y| <= 1/4, Y < 0.
VerificationReport check_genfun(const Rational& X, const Rational& Y,
                                long digits, ValueCache* cache = nullptr);

// Conjectural weighted depth-3 sum, k >= 4:
// sum_{a+b+c=k, a,b>=1, c>=2} 2^b (3^{c-1} - 1) T(a,b,c)
//   = (2/3)(k-1)(k-2) T(k).
VerificationReport check_machide(int k, long digits,
                                 ValueCache* cache = nullptr);

// Conjectural membership: s(p,q,m) = sum_{i+j=m} C(p+i-1,i) C(q+j-1,j)
// T(p+i, q+j) should lie in the classical MZV span; searched via an
// integer-relation hunt against the zeta basis of {2,3}-compositions.
VerificationReport check_conj53(int p, int q, int m, long digits,
                                ValueCache* cache = nullptr);

// The low-weight reduction bundle: symbolic re-derivation of the weight-5
// pair from its two source identities, numeric verification of the eight
// displayed weight-5/6 reductions, and integer-relation recovery of
// T(3,2) = 6 T(1,4) and zeta(6) = (32/63) T(6).
std::vector<VerificationReport> reduce_weight_le6(long digits,
                                                  ValueCache* cache = nullptr);

} // namespace mtv
