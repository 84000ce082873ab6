#include "mtv/indices.hpp"

#include <algorithm>
#include <stdexcept>

namespace mtv {

// ---- serialization ---------------------------------------------------------

std::string Index::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s;
}

std::string Index::display() const { return "(" + to_string() + ")"; }

Index Index::parse(const std::string& s) {
    Index ix;
    if (s.empty()) return ix;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(',', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
        size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad index part: '" + tok + "'");
        }
        if (used != tok.size() || v <= 0)
            throw std::invalid_argument("bad index part: '" + tok + "'");
        ix.parts.push_back(v);
        if (next == std::string::npos) break;
        pos = next + 1;
        if (pos == s.size()) throw std::invalid_argument("trailing comma in index");
    }
    return ix;
}

std::string TWord::to_string() const {
    std::string s;
    s.reserve(letters.size());
    for (uint8_t l : letters) s += static_cast<char>('0' + l);
    return s;
}

TWord TWord::parse(const std::string& s) {
    TWord w;
    w.letters.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("bad word letter: " + s);
        w.letters.push_back(static_cast<uint8_t>(c - '0'));
    }
    return w;
}

std::string SignedIndex::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    s += ";";
    for (size_t i = 0; i < signs.size(); ++i) {
        if (i) s += ",";
        s += signs[i] > 0 ? "+" : "-";
    }
    return s;
}

SignedIndex SignedIndex::parse(const std::string& s) {
    size_t semi = s.find(';');
    if (semi == std::string::npos)
        throw std::invalid_argument("signed index needs ';' separator: " + s);
    Index ix = Index::parse(s.substr(0, semi));
    SignedIndex z;
    z.parts = ix.parts;
    std::string sg = s.substr(semi + 1);
    size_t pos = 0;
    while (pos < sg.size()) {
        size_t next = sg.find(',', pos);
        std::string tok = sg.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok == "+")
            z.signs.push_back(1);
        else if (tok == "-")
            z.signs.push_back(-1);
        else
            throw std::invalid_argument("bad sign token: '" + tok + "'");
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (z.signs.size() != z.parts.size())
        throw std::invalid_argument("sign count does not match part count: " + s);
    return z;
}

std::string EvalWord::to_string() const {
    std::string s;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) s += ",";
        switch (letters[i]) {
            case 0: s += "0"; break;
            case 1: s += "+"; break;
            case -1: s += "-"; break;
            case 2: s += "2"; break;
            default: s += "?"; break;
        }
    }
    return s;
}

// ---- words and duality -----------------------------------------------------

TWord index_to_word(const Index& ix) {
    TWord w;
    for (int k : ix.parts) {
        w.letters.push_back(1);
        for (int i = 1; i < k; ++i) w.letters.push_back(0);
    }
    return w;
}

Index word_to_index(const TWord& w) {
    Index ix;
    if (w.empty()) return ix;
    if (w.letters.front() != 1)
        throw std::invalid_argument("word must start with letter 1: " + w.to_string());
    for (uint8_t l : w.letters) {
        if (l == 1)
            ix.parts.push_back(1);
        else
            ix.parts.back() += 1;
    }
    return ix;
}

Index dual(const Index& ix) {
    if (!ix.is_admissible())
        throw std::invalid_argument("dual requires an admissible index: " + ix.display());
    TWord w = index_to_word(ix);
    TWord d;
    d.letters.resize(w.letters.size());
    for (size_t i = 0; i < w.letters.size(); ++i)
        d.letters[i] = static_cast<uint8_t>(1 - w.letters[w.letters.size() - 1 - i]);
    return word_to_index(d);
}

// ---- shuffle ----------------------------------------------------------------

namespace {
void shuffle_rec(const std::vector<uint8_t>& u, size_t iu,
                 const std::vector<uint8_t>& v, size_t iv,
                 std::vector<uint8_t>& acc, LinearCombo<TWord>& out) {
    if (iu == u.size() && iv == v.size()) {
        out.add(TWord(acc), Rational(1));
        return;
    }
    if (iu < u.size()) {
        acc.push_back(u[iu]);
        shuffle_rec(u, iu + 1, v, iv, acc, out);
        acc.pop_back();
    }
    if (iv < v.size()) {
        acc.push_back(v[iv]);
        shuffle_rec(u, iu, v, iv + 1, acc, out);
        acc.pop_back();
    }
}
} // namespace

LinearCombo<TWord> shuffle(const TWord& u, const TWord& v) {
    LinearCombo<TWord> out;
    std::vector<uint8_t> acc;
    acc.reserve(u.size() + v.size());
    shuffle_rec(u.letters, 0, v.letters, 0, acc, out);
    return out;
}

// ---- stuffle ----------------------------------------------------------------

namespace {
// merge from the back: the last entry is the largest summation variable
void stuffle_rec(const std::vector<int>& a, size_t na,
                 const std::vector<int>& b, size_t nb,
                 std::vector<int>& tail, LinearCombo<Index>& out) {
    if (na == 0 && nb == 0) {
        Index ix;
        ix.parts.assign(tail.rbegin(), tail.rend());
        out.add(ix, Rational(1));
        return;
    }
    if (na > 0) {
        tail.push_back(a[na - 1]);
        stuffle_rec(a, na - 1, b, nb, tail, out);
        tail.pop_back();
    }
    if (nb > 0) {
        tail.push_back(b[nb - 1]);
        stuffle_rec(a, na, b, nb - 1, tail, out);
        tail.pop_back();
    }
    if (na > 0 && nb > 0) {
        tail.push_back(a[na - 1] + b[nb - 1]);
        stuffle_rec(a, na - 1, b, nb - 1, tail, out);
        tail.pop_back();
    }
}
} // namespace

LinearCombo<Index> stuffle(const Index& a, const Index& b) {
    LinearCombo<Index> out;
    std::vector<int> tail;
    tail.reserve(a.parts.size() + b.parts.size());
    stuffle_rec(a.parts, a.parts.size(), b.parts, b.parts.size(), tail, out);
    return out;
}

// ---- sign expansions ---------------------------------------------------------

LinearCombo<SignedIndex> expand_T(const Index& ix) {
    LinearCombo<SignedIndex> out;
    int r = ix.depth();
    for (uint32_t mask = 0; mask < (1u << r); ++mask) {
        SignedIndex z;
        z.parts = ix.parts;
        z.signs.resize(r);
        int exp_sum = 0;
        for (int i = 0; i < r; ++i) {
            bool in_s = (mask >> i) & 1u;
            z.signs[i] = in_s ? -1 : 1;
            if (in_s) exp_sum += i + 1;
        }
        out.add(z, Rational(exp_sum % 2 == 0 ? 1 : -1));
    }
    return out;
}

LinearCombo<SignedIndex> expand_t(const Index& ix) {
    LinearCombo<SignedIndex> out;
    int r = ix.depth();
    Rational unit = Rational::pow2(-r);
    for (uint32_t mask = 0; mask < (1u << r); ++mask) {
        SignedIndex z;
        z.parts = ix.parts;
        z.signs.resize(r);
        int card = 0;
        for (int i = 0; i < r; ++i) {
            bool in_s = (mask >> i) & 1u;
            z.signs[i] = in_s ? -1 : 1;
            if (in_s) ++card;
        }
        out.add(z, card % 2 == 0 ? unit : -unit);
    }
    return out;
}

EvalWord signed_index_to_eval_word(const SignedIndex& z) {
    if (!z.is_convergent())
        throw std::invalid_argument("divergent signed index: " + z.display());
    EvalWord w;
    int r = z.depth();
    std::vector<int8_t> c(r);
    int8_t run = 1;
    for (int i = r - 1; i >= 0; --i) {
        run = static_cast<int8_t>(run * z.signs[i]);
        c[i] = run;
    }
    for (int i = 0; i < r; ++i) {
        w.letters.push_back(c[i]);
        for (int j = 1; j < z.parts[i]; ++j) w.letters.push_back(0);
    }
    return w;
}

// ---- enumeration --------------------------------------------------------------

namespace {
void comps_rec(int remaining, int depth_left, std::vector<int>& acc,
               std::vector<Index>& out) {
    if (depth_left == 1) {
        if (remaining >= 2) {
            acc.push_back(remaining);
            out.emplace_back(acc);
            acc.pop_back();
        }
        return;
    }
    // non-final parts >= 1, keep >= depth_left-1+2 for the rest
    for (int k = 1; remaining - k >= 2 + (depth_left - 2); ++k) {
        acc.push_back(k);
        comps_rec(remaining - k, depth_left - 1, acc, out);
        acc.pop_back();
    }
}
} // namespace

std::vector<Index> enumerate_admissible(int weight) {
    std::vector<Index> out;
    if (weight == 0) {
        out.emplace_back();
        return out;
    }
    if (weight < 2) return out;
    for (int depth = 1; depth <= weight - 1; ++depth) {
        std::vector<int> acc;
        comps_rec(weight, depth, acc, out);
    }
    return out;
}

} // namespace mtv
