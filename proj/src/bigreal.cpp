#include "mtv/bigreal.hpp"

#include <cstring>
#include <ostream>

namespace mtv {

std::string BigReal::to_decimal(size_t digits) const {
    if (mpfr_zero_p(x_)) return "0";
    if (!mpfr_number_p(x_)) return mpfr_nan_p(x_) ? "nan" : (mpfr_sgn(x_) > 0 ? "inf" : "-inf");
    if (digits < 2) digits = 2;
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, x_, MPFR_RNDN);
    std::string m(s);
    mpfr_free_str(s);
    std::string sign;
    if (m[0] == '-') {
        sign = "-";
        m = m.substr(1);
    }
    // mpfr convention: value = 0.mmmm * 10^e ; render as d.ddd e(e-1)
    std::string out = sign + m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) {
    size_t d = static_cast<size_t>(x.precision() * 0.30103) + 1;
    return os << x.to_decimal(d);
}

std::ostream& operator<<(std::ostream& os, const Integer& z) { return os << z.to_string(); }
std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

} // namespace mtv
