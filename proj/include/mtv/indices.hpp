#pragma once
// Index combinatorics for the level-2 iterated-integral families:
// composition indices, binary integration words, signed (alternating)
// indices, duality, shuffle, quasi-shuffle, and the sign expansions that
// reduce parity-constrained sums to alternating ones.

#include "mtv/linear_combo.hpp"
#include "mtv/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace mtv {

// ---------------------------------------------------------------------------
// Index: a composition (k_1, ..., k_r) of positive integers. The inner
// summation variable of k_i runs below the one of k_{i+1} (increasing-m
// convention); admissible means k_r >= 2 so the defining series converges.
// The empty index is the unit (value 1, weight 0, admissible).
// ---------------------------------------------------------------------------
struct Index {
    std::vector<int> parts;

    Index() = default;
    explicit Index(std::vector<int> p) : parts(std::move(p)) {}
    Index(std::initializer_list<int> p) : parts(p) {}

    int weight() const {
        int w = 0;
        for (int k : parts) w += k;
        return w;
    }
    int depth() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    bool is_admissible() const { return parts.empty() || parts.back() >= 2; }

    // canonical term order: weight asc, depth desc, parts lex asc
    friend bool operator<(const Index& a, const Index& b) {
        int wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        if (a.parts.size() != b.parts.size()) return a.parts.size() > b.parts.size();
        return a.parts < b.parts;
    }
    friend bool operator==(const Index& a, const Index& b) { return a.parts == b.parts; }

    std::string to_string() const;            // "1,1,2" ("" for empty)
    std::string display() const;              // "(1,1,2)" / "()"
    static Index parse(const std::string& s); // accepts "1,1,2"
};

// ---------------------------------------------------------------------------
// TWord: binary integration word over {1, 0}; letter 1 is the algebraic
// (1-t^2)-type form slot, letter 0 is dt/t. index_to_word maps
// (k_1,...,k_r) to 1 0^{k_1-1} 1 0^{k_2-1} ... 1 0^{k_r-1}.
// ---------------------------------------------------------------------------
struct TWord {
    std::vector<uint8_t> letters; // values 0/1

    TWord() = default;
    explicit TWord(std::vector<uint8_t> l) : letters(std::move(l)) {}

    size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    // canonical term order: length asc, then lex DESC on letters; for words
    // of one weight this coincides with the Index order above under the
    // word <-> index bijection (verified in tests).
    friend bool operator<(const TWord& a, const TWord& b) {
        if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
        return a.letters > b.letters;
    }
    friend bool operator==(const TWord& a, const TWord& b) { return a.letters == b.letters; }

    std::string to_string() const; // "1100"
    std::string display() const { return to_string(); }
    static TWord parse(const std::string& s);
};

// ---------------------------------------------------------------------------
// SignedIndex: composition with a sign vector, the index of an alternating
// sum Z(k; sigma) = sum_{0<m_1<...<m_r} prod sigma_i^{m_i} m_i^{-k_i}.
// Convergent iff (k_r, sigma_r) != (1, +1).
// ---------------------------------------------------------------------------
struct SignedIndex {
    std::vector<int> parts;
    std::vector<int8_t> signs; // +1 / -1, same length as parts

    SignedIndex() = default;
    SignedIndex(std::vector<int> p, std::vector<int8_t> s)
        : parts(std::move(p)), signs(std::move(s)) {}

    int weight() const {
        int w = 0;
        for (int k : parts) w += k;
        return w;
    }
    int depth() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    bool is_convergent() const {
        return parts.empty() || !(parts.back() == 1 && signs.back() == 1);
    }
    bool all_plus() const {
        for (int8_t s : signs)
            if (s < 0) return false;
        return true;
    }

    friend bool operator<(const SignedIndex& a, const SignedIndex& b) {
        int wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        if (a.parts.size() != b.parts.size()) return a.parts.size() > b.parts.size();
        if (a.parts != b.parts) return a.parts < b.parts;
        return a.signs > b.signs; // + (=1) before - (=-1)
    }
    friend bool operator==(const SignedIndex& a, const SignedIndex& b) {
        return a.parts == b.parts && a.signs == b.signs;
    }

    std::string to_string() const; // "1,1,2;+,-,+"
    std::string display() const { return "(" + to_string() + ")"; }
    static SignedIndex parse(const std::string& s);
};

// ---------------------------------------------------------------------------
// EvalWord: word over the 4-letter integration alphabet
//   0 -> dt/t, +1 -> dt/(1-t), -1 -> -dt/(1+t), 2 -> dt/(2-t).
// Letter -1 carries its minus sign; no external sign bookkeeping.
// ---------------------------------------------------------------------------
struct EvalWord {
    std::vector<int8_t> letters; // values in {0, +1, -1, 2}

    EvalWord() = default;
    explicit EvalWord(std::vector<int8_t> l) : letters(std::move(l)) {}

    size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    friend bool operator<(const EvalWord& a, const EvalWord& b) {
        if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
        return a.letters < b.letters;
    }
    friend bool operator==(const EvalWord& a, const EvalWord& b) {
        return a.letters == b.letters;
    }

    std::string to_string() const; // "-,+,0" style
    std::string display() const { return "[" + to_string() + "]"; }
};

// ---------------------------------------------------------------------------
// operations
// ---------------------------------------------------------------------------

TWord index_to_word(const Index& ix);
// Requires the word to be empty or start with letter 1.
Index word_to_index(const TWord& w);

// Duality: reverse the word and complement every letter. Involution on
// admissible indices; requires admissibility.
Index dual(const Index& ix);

// Shuffle product of words (recursive interleaving).
LinearCombo<TWord> shuffle(const TWord& u, const TWord& v);

// Quasi-shuffle (stuffle) on indices, merging from the LAST entry (the
// largest summation variable) inward.
LinearCombo<Index> stuffle(const Index& a, const Index& b);

// Parity expansion of a T-family index into 2^r signed indices with
// coefficients +-1: picks sign subset S with coefficient (-1)^{sum of S}.
LinearCombo<SignedIndex> expand_T(const Index& ix);
// Same for the odd-only t-family: coefficients +-2^{-r}.
LinearCombo<SignedIndex> expand_t(const Index& ix);

// Iterated-integral word of an alternating sum: c_i = prod_{j>=i} sigma_j,
// word = e_{c_1} 0^{k_1-1} ... e_{c_r} 0^{k_r-1}. Throws on divergent input.
EvalWord signed_index_to_eval_word(const SignedIndex& z);

// All admissible indices of the given weight, depth ascending then parts
// lexicographic. weight 0 -> { () }, weight 1 -> {}.
std::vector<Index> enumerate_admissible(int weight);

} // namespace mtv
