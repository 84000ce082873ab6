#pragma once
// Small helpers for tracking absolute error bounds in the log2 domain.

#include "mtv/bigreal.hpp"
#include "mtv/rational.hpp"

#include <algorithm>
#include <cmath>

namespace mtv {

// Accumulates a sum of error magnitudes given as log2 values.
struct ErrAcc {
    double e = -1e300;
    void add(double x) {
        if (x <= -1e290) return;
        if (e <= -1e290) {
            e = x;
            return;
        }
        double hi = std::max(e, x), lo = std::min(e, x);
        e = hi + std::log2(1.0 + std::exp2(lo - hi));
    }
};

// Safe upper bound for log2|c| of a rational coefficient.
inline double coeff_log2(const Rational& c) {
    if (c.is_zero()) return -1e300;
    return static_cast<double>(c.numerator().bits()) -
           static_cast<double>(c.denominator().bits()) + 1.0;
}

// Error bound (log2) of a product a*b given value+error of both factors.
inline double product_err_log2(const BigReal& a, double ea, const BigReal& b,
                               double eb) {
    ErrAcc acc;
    acc.add(a.log2_abs() + eb);
    acc.add(b.log2_abs() + ea);
    acc.add(ea + eb);
    return acc.e;
}

} // namespace mtv
