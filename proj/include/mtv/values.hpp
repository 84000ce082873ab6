#pragma once
// Numeric values of the four families (T, t, zeta, alternating Z), the
// height-one generating function, and the append-only value cache.

#include "mtv/indices.hpp"
#include "mtv/series_eval.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace mtv {

// Append-only decimal cache keyed by (family, index, signs, P, N).
// Record line: family|index|signs|P|N|decimal_value|crc32. A request is
// served by an exact key match or by any record with P' >= P and N' >= N
// (rounded down to the requested precision). Corrupted records are skipped
// with a warning. An empty path gives a memory-only cache.
class ValueCache {
public:
    explicit ValueCache(std::string path = "");

    std::optional<BigReal> get(const std::string& family, const std::string& index,
                               const std::string& signs, long P, long N) const;
    void put(const std::string& family, const std::string& index,
             const std::string& signs, long P, long N, const BigReal& value);

    size_t size() const;

private:
    struct Rec {
        long P;
        long N;
        std::string decimal;
    };
    void load();

    std::string path_;
    mutable std::mutex mu_;
    std::multimap<std::string, Rec> recs_; // key = family|index|signs
};

// Evaluation context: working precision, series truncation, optional cache.
struct ValueContext {
    long prec_bits;
    long terms;
    ValueCache* cache = nullptr;

    static ValueContext for_digits(long digits, ValueCache* cache = nullptr) {
        return {prec_bits_for_digits(digits), series_terms_for_digits(digits), cache};
    }
};

enum class TRoute {
    Direct,   // unexpanded 2dt/(1-t^2) letter, O(weight * N)
    Expanded, // each word letter 1 -> letter(+1) - letter(-1), 2^r words
    Signed,   // parity expansion into alternating sums, 2^r words
};

// T(k_1,...,k_r) = 2^r sum over 0<m_1<...<m_r, m_i == i (mod 2).
// Requires an admissible index. Empty index evaluates to 1.
Evaluated T_value(const Index& ix, const ValueContext& ctx,
                  TRoute route = TRoute::Direct);

// t(k_1,...,k_r): all m_i odd. Requires an admissible index.
Evaluated t_value(const Index& ix, const ValueContext& ctx);

// Classical zeta (all-plus alternating word). Requires an admissible index.
Evaluated zeta_value(const Index& ix, const ValueContext& ctx);

// Alternating sum Z(k; sigma); requires a convergent signed index.
Evaluated altZ_value(const SignedIndex& z, const ValueContext& ctx);

// 1 - sum_{m,n>=1} T(1^{n-1}, m+1) X^m Y^n, truncated so the geometric
// tail is below 10^-(digits+1). Requires |X|,|Y| <= 1/4 and Y < 0.
Evaluated genfun_lhs(const Rational& X, const Rational& Y, long digits,
                     ValueCache* cache = nullptr);

// 2 Gamma(1-X) Gamma(1-Y) / Gamma(1-X-Y) * 2F1(1-X, 1-Y; 1-X-Y; -1).
Evaluated genfun_rhs(const Rational& X, const Rational& Y, long digits);

} // namespace mtv
