#pragma once
// Formal Q-linear combinations of index-like terms, kept in canonical form:
// no zero coefficients, terms ordered by the term type's operator< (each
// term type defines the canonical display order there).

#include "mtv/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace mtv {

template <class Term>
class LinearCombo {
public:
    using map_type = std::map<Term, Rational>;

    LinearCombo() = default;
    explicit LinearCombo(const Term& t, Rational c = Rational(1)) { add(t, c); }

    void add(const Term& t, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(t, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LinearCombo& operator+=(const LinearCombo& o) {
        for (const auto& [t, c] : o.terms_) add(t, c);
        return *this;
    }
    LinearCombo& operator-=(const LinearCombo& o) {
        for (const auto& [t, c] : o.terms_) add(t, -c);
        return *this;
    }
    LinearCombo& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [t, c] : terms_) c *= s;
        return *this;
    }
    friend LinearCombo operator+(LinearCombo a, const LinearCombo& b) { a += b; return a; }
    friend LinearCombo operator-(LinearCombo a, const LinearCombo& b) { a -= b; return a; }
    friend LinearCombo operator*(const Rational& s, LinearCombo a) { a *= s; return a; }

    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const map_type& terms() const& { return terms_; }
    // Ranged-for over `f(...).terms()` would dangle under C++20 lifetime
    // rules if the rvalue overload also returned a reference; move instead.
    map_type terms() && { return std::move(terms_); }
    Rational coefficient(const Term& t) const {
        auto it = terms_.find(t);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend bool operator==(const LinearCombo& a, const LinearCombo& b) {
        return a.terms_ == b.terms_;
    }

    template <class F>
    auto map_terms(F&& f) const -> LinearCombo<std::decay_t<decltype(f(std::declval<Term>()))>> {
        LinearCombo<std::decay_t<decltype(f(std::declval<Term>()))>> out;
        for (const auto& [t, c] : terms_) out.add(f(t), c);
        return out;
    }

    // "4*(1,3) + 2*(2,2)" / "0" for empty
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [t, c] : terms_) {
            Rational cc = c;
            if (first) {
                if (cc.sgn() < 0) {
                    out += "-";
                    cc = -cc;
                }
            } else {
                out += cc.sgn() < 0 ? " - " : " + ";
                if (cc.sgn() < 0) cc = -cc;
            }
            out += cc.to_string() + "*" + t.display();
            first = false;
        }
        return out;
    }

private:
    map_type terms_;
};

} // namespace mtv
