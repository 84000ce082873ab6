// Acceptance harness: one PASS/FAIL line per criterion, pinned tolerances,
// nonzero exit iff a criterion fails.

#include "mtv/lindep.hpp"
#include "mtv/relations.hpp"
#include "mtv/values.hpp"
#include "oracle.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <thread>
#include <vector>

using namespace mtv;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
ValueCache cache; // shared memory cache across criteria

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void line(const std::string& crit, bool pass, const std::string& detail,
          double secs) {
    if (!pass) ++failures;
    std::printf("[%s] %-4s %s (%.1fs)\n", pass ? "PASS" : "FAIL", crit.c_str(),
                detail.c_str(), secs);
    std::fflush(stdout);
}

struct ReportStats {
    int total = 0;
    int passed = 0;
    double worst_residual = -1e300; // max residual_log10 over the batch
    bool all_within(double bound_log10) const {
        return passed == total && worst_residual < bound_log10;
    }
    void absorb(const VerificationReport& r) {
        ++total;
        if (r.pass) ++passed;
        if (r.residual_log10 > worst_residual) worst_residual = r.residual_log10;
    }
};

std::string stats_str(const ReportStats& s) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d/%d pass, max residual 1e%.1f", s.passed,
                  s.total, s.worst_residual);
    return buf;
}

// C1: duality for every admissible index of weight <= 8, 60 digits, <1e-45
void c1_duality() {
    auto t0 = Clock::now();
    ReportStats s;
    for (int w = 2; w <= 8; ++w)
        for (const auto& ix : enumerate_admissible(w))
            s.absorb(check_duality(ix, 60, &cache));
    double secs = seconds_since(t0);
    bool pass = s.all_within(-45.0) && secs <= 120.0;
    line("C1", pass, "duality, all admissible weight<=8: " + stats_str(s) +
                         ", tol 1e-45, budget 120s", secs);
}

// C2: depth-2 weighted sum formula, k = 3..12
void c2_sf2() {
    auto t0 = Clock::now();
    ReportStats s;
    for (int k = 3; k <= 12; ++k) s.absorb(check_sum_formula_depth2(k, 60, &cache));
    line("C2", s.all_within(-45.0),
         "depth-2 sum formula k=3..12: " + stats_str(s) + ", tol 1e-45",
         seconds_since(t0));
}

// C3: depth-3 sum formula, k = 4..10
void c3_sf3() {
    auto t0 = Clock::now();
    ReportStats s;
    for (int k = 4; k <= 10; ++k) s.absorb(check_sum_formula_depth3(k, 60, &cache));
    line("C3", s.all_within(-45.0),
         "depth-3 sum formula k=4..10: " + stats_str(s) + ", tol 1e-45",
         seconds_since(t0));
}

// C4: intermediate sum + weighted double zeta, k = 3..10
void c4_interm_wdzv() {
    auto t0 = Clock::now();
    ReportStats s;
    for (int k = 3; k <= 10; ++k) {
        s.absorb(check_intermediate_sum(k, 60, &cache));
        s.absorb(check_weighted_dzv(k, 60, &cache));
    }
    line("C4", s.all_within(-45.0),
         "intermediate sum + weighted double-zeta k=3..10: " + stats_str(s) +
             ", tol 1e-45",
         seconds_since(t0));
}

// C5: depth-2 parity reduction, all p>=1, q>=2, p+q odd, p+q <= 11
void c5_parity() {
    auto t0 = Clock::now();
    ReportStats s;
    for (int w = 3; w <= 11; w += 2)
        for (int q = 2; q <= w - 1; ++q)
            s.absorb(check_parity_depth2(w - q, q, 60, &cache));
    line("C5", s.all_within(-45.0),
         "depth-2 parity, odd weights <=11: " + stats_str(s) + ", tol 1e-45",
         seconds_since(t0));
}

// C6: symbolic shuffle expansion of T(j)T(k-j), k <= 10
void c6_shuffle_tt() {
    auto t0 = Clock::now();
    int total = 0, passed = 0;
    for (int k = 4; k <= 10; ++k)
        for (int j = 2; j <= k - 2; ++j) {
            auto r = check_shuffle_TT_expansion(j, k);
            ++total;
            if (r.pass && r.exact) ++passed;
        }
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "symbolic depth-1 shuffle expansion k<=10: %d/%d exact", passed,
                  total);
    line("C6", passed == total, buf, seconds_since(t0));
}

// C7: generating function at (1/8,-1/8), (1/16,-1/16), 30 digits, <1e-25
void c7_genfun() {
    auto t0 = Clock::now();
    ReportStats s;
    s.absorb(check_genfun(Rational(1, 8), Rational(-1, 8), 30, &cache));
    s.absorb(check_genfun(Rational(1, 16), Rational(-1, 16), 30, &cache));
    double secs = seconds_since(t0);
    bool pass = s.all_within(-25.0) && secs <= 300.0;
    line("C7", pass, "generating function, two rational points: " + stats_str(s) +
                         ", tol 1e-25, budget 300s", secs);
}

// C8: weight<=6 reduction bundle at 60 digits (symbolic derivation, eight
// displayed reductions <1e-45, two lindep recoveries)
void c8_weight6() {
    auto t0 = Clock::now();
    ReportStats s;
    int lindep_ok = 0, exact_ok = 0;
    for (const auto& r : reduce_weight_le6(60, &cache)) {
        s.absorb(r);
        if (r.name == "lindep-recovery" && r.pass) ++lindep_ok;
        if (r.exact && r.pass) ++exact_ok;
    }
    bool pass = s.passed == s.total && s.worst_residual < -45.0 &&
                lindep_ok == 2 && exact_ok >= 1;
    line("C8", pass,
         "low-weight reductions: " + stats_str(s) +
             ", lindep recoveries " + std::to_string(lindep_ok) + "/2, tol 1e-45",
         seconds_since(t0));
}

// C9: all four dimension tables, k = 2..8, 300 digits, <= 20 min
void c9_dims() {
    auto t0 = Clock::now();
    const int dT[] = {1, 1, 2, 2, 4, 5, 9};
    const int dt_[] = {1, 2, 3, 5, 8, 13, 21};
    const int dU[] = {1, 2, 4, 5, 9, 14, 24};
    const int dI[] = {1, 1, 1, 2, 3, 4, 6};
    RankOptions opt;
    opt.digits = 300;
    opt.cache = &cache;
    opt.jobs = std::max(1u, std::thread::hardware_concurrency());
    int ok = 0, total = 0;
    std::string bad;
    for (int k = 2; k <= 8; ++k) {
        DimensionReport rT, rt;
        auto [rU, rI] = dims_union_intersection(k, opt, &rT, &rt);
        struct {
            const DimensionReport* r;
            int want;
        } rows[] = {{&rT, dT[k - 2]}, {&rt, dt_[k - 2]}, {&rU, dU[k - 2]},
                    {&rI, dI[k - 2]}};
        for (auto& row : rows) {
            ++total;
            if (row.r->dimension == row.want && !row.r->inconclusive)
                ++ok;
            else
                bad += " " + row.r->family + "@" + std::to_string(k) + "=" +
                       std::to_string(row.r->dimension) + "(want " +
                       std::to_string(row.want) + ")";
        }
    }
    double secs = seconds_since(t0);
    bool pass = ok == total && secs <= 1200.0;
    char buf[192];
    std::snprintf(buf, sizeof buf,
                  "dimension tables T/t/union/intersection k=2..8 at 300 digits: "
                  "%d/%d match%s, budget 1200s",
                  ok, total, bad.empty() ? "" : bad.c_str());
    line("C9", pass, buf, secs);
}

// C10: conjectural evidence: weighted depth-3 sum k=4..8 and three
// double-sum membership hunts
void c10_conjectures() {
    auto t0 = Clock::now();
    int total = 0, passed = 0;
    for (int k = 4; k <= 8; ++k) {
        auto r = check_machide(k, 60, &cache);
        ++total;
        if (r.pass) ++passed;
    }
    for (auto [p, q, m] : {std::tuple{1, 2, 1}, {2, 2, 2}, {1, 3, 2}}) {
        auto r = check_conj53(p, q, m, 100, &cache);
        ++total;
        if (r.pass) ++passed;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "conjecture evidence (weighted depth-3 k=4..8, membership x3): "
                  "%d/%d supported",
                  passed, total);
    line("C10", passed == total, buf, seconds_since(t0));
}

// C11a: values vs the independent nested-sum oracle, w<=6, depth<=3
bool c11a() {
    ValueContext ctx = ValueContext::for_digits(30, &cache);
    double worst = 0;
    for (int w = 2; w <= 6; ++w)
        for (const auto& ix : enumerate_admissible(w)) {
            if (ix.depth() > 3) continue;
            worst = std::max(worst,
                             std::fabs(T_value(ix, ctx).value.to_double() -
                                       static_cast<double>(mtv_test::oracle_T(ix))));
            worst = std::max(worst,
                             std::fabs(t_value(ix, ctx).value.to_double() -
                                       static_cast<double>(mtv_test::oracle_t(ix))));
        }
    std::printf("       a: oracle agreement w<=6 d<=3, worst %.1e (tol 1e-9)\n",
                worst);
    return worst < 1e-9;
}

// C11b: sign expansions vs oracle term by term, w<=6
bool c11b() {
    double worst = 0;
    for (int w = 2; w <= 6; ++w)
        for (const auto& ix : enumerate_admissible(w)) {
            long double accT = 0.0L, acct = 0.0L;
            auto expT = expand_T(ix), expt = expand_t(ix);
            for (const auto& [z, c] : expT.terms())
                accT += static_cast<long double>(c.to_double()) *
                        mtv_test::oracle_altZ(z);
            for (const auto& [z, c] : expt.terms())
                acct += static_cast<long double>(c.to_double()) *
                        mtv_test::oracle_altZ(z);
            worst = std::max(
                worst, std::fabs(static_cast<double>(accT - mtv_test::oracle_T(ix))));
            worst = std::max(
                worst, std::fabs(static_cast<double>(acct - mtv_test::oracle_t(ix))));
        }
    std::printf("       b: sign expansions vs oracle w<=6, worst %.1e (tol 1e-9)\n",
                worst);
    return worst < 1e-9;
}

// C11c: doubling the digits moves the value by < 2^{-0.9 * bits(digits)}
bool c11c() {
    bool ok = true;
    double worst = -1e300;
    for (const Index& ix : {Index{2}, Index{1, 3}, Index{2, 3}, Index{1, 1, 4}}) {
        ValueContext lo = ValueContext::for_digits(30, &cache);
        ValueContext hi = ValueContext::for_digits(60, &cache);
        double d =
            (T_value(ix, lo).value - T_value(ix, hi).value).log2_abs();
        worst = std::max(worst, d);
        ok = ok && d < -0.9 * (30 * 3.3219280948873623);
    }
    std::printf("       c: precision doubling, worst diff 2^%.1f (tol 2^-89.7)\n",
                worst);
    return ok;
}

// C11d: the three T evaluation routes agree, w<=7, 60 digits
bool c11d() {
    ValueContext ctx = ValueContext::for_digits(60, &cache);
    double worst = -1e300;
    for (int w = 2; w <= 7; ++w)
        for (const auto& ix : enumerate_admissible(w)) {
            BigReal a = T_value(ix, ctx, TRoute::Direct).value;
            BigReal b = T_value(ix, ctx, TRoute::Expanded).value;
            BigReal c = T_value(ix, ctx, TRoute::Signed).value;
            worst = std::max(worst, (a - b).log2_abs());
            worst = std::max(worst, (a - c).log2_abs());
        }
    std::printf("       d: route equivalence w<=7, worst diff 2^%.1f (tol 1e-50)\n",
                worst);
    return worst < -50 * 3.3219280948873623;
}

// C11e: shuffle and stuffle algebra laws on pseudorandom small indices
bool c11e() {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> part(1, 3), depth(1, 3);
    auto rand_index = [&](bool admissible) {
        Index ix;
        int r = depth(rng);
        for (int i = 0; i < r; ++i) ix.parts.push_back(part(rng));
        if (admissible && ix.parts.back() < 2) ix.parts.back() = 2;
        return ix;
    };
    bool ok = true;
    for (int trial = 0; trial < 20; ++trial) {
        Index a = rand_index(false), b = rand_index(false), c = rand_index(false);
        TWord u = index_to_word(a), v = index_to_word(b), w = index_to_word(c);
        ok = ok && shuffle(u, v) == shuffle(v, u);
        ok = ok && stuffle(a, b) == stuffle(b, a);
        LinearCombo<TWord> sl, sr;
        auto suv = shuffle(u, v), svw = shuffle(v, w);
        for (const auto& [t, co] : suv.terms()) sl += co * shuffle(t, w);
        for (const auto& [t, co] : svw.terms()) sr += co * shuffle(u, t);
        ok = ok && sl == sr;
        LinearCombo<Index> tl, tr;
        auto sab = stuffle(a, b), sbc = stuffle(b, c);
        for (const auto& [t, co] : sab.terms()) tl += co * stuffle(t, c);
        for (const auto& [t, co] : sbc.terms()) tr += co * stuffle(a, t);
        ok = ok && tl == tr;
        // unit, weight conservation, interleaving count
        ok = ok && shuffle(u, TWord{}) == LinearCombo<TWord>(u);
        ok = ok && stuffle(a, Index{}) == LinearCombo<Index>(a);
        int wsum = a.weight() + b.weight();
        Rational n;
        for (const auto& [t, co] : suv.terms()) {
            ok = ok && t.size() == u.size() + v.size();
            n += co;
        }
        ok = ok && n == Rational(Integer::binomial(
                        static_cast<unsigned long>(u.size() + v.size()),
                        static_cast<unsigned long>(u.size())));
        for (const auto& [t, co] : sab.terms())
            ok = ok && t.weight() == wsum;
    }
    std::printf("       e: shuffle/stuffle laws, 20 pseudorandom triples\n");
    return ok;
}

// C11f: LLL output spans the same lattice (Hermite-form oracle), dims <= 8
bool c11f() {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> d(-99, 99);
    bool ok = true;
    for (int trial = 0; trial < 10; ++trial) {
        size_t n = 2 + trial % 7; // 2..8
        IntegerLattice L;
        Integer det;
        do {
            L.rows.clear();
            for (size_t i = 0; i < n; ++i) {
                std::vector<Integer> row;
                for (size_t j = 0; j < n; ++j) row.emplace_back(d(rng));
                L.rows.push_back(std::move(row));
            }
            det = lattice_determinant(L);
        } while (det.is_zero());
        IntegerLattice R = lll_reduce(L);
        IntegerLattice ha = hermite_normal_form(L), hb = hermite_normal_form(R);
        bool same = ha.nrows() == hb.nrows();
        if (same)
            for (size_t i = 0; i < ha.nrows(); ++i)
                for (size_t j = 0; j < ha.ncols(); ++j)
                    same = same && ha.rows[i][j] == hb.rows[i][j];
        Integer det2 = lattice_determinant(R);
        ok = ok && same && (det2 == det || det2 == -det);
    }
    std::printf("       f: LLL lattice preservation, 10 random bases dim<=8\n");
    return ok;
}

// C11g: planted relations (coeffs <= 1e3) among 10 values at 100 digits
bool c11g() {
    long digits = 100;
    long P = prec_bits_for_digits(digits);
    std::mt19937_64 rng(20250816);
    std::uniform_int_distribution<long> num(1, 1L << 40);
    std::uniform_int_distribution<long> co(-999, 999);
    RelationOptions opt;
    opt.digits = digits;
    bool ok = true;
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Rational> xq;
        for (int i = 0; i < 9; ++i)
            xq.emplace_back(num(rng), static_cast<unsigned long>(1) << 40);
        Rational planted;
        for (int i = 0; i < 9; ++i) planted += Rational(co(rng)) * xq[i];
        xq.push_back(planted);
        std::vector<BigReal> xs;
        for (const auto& q : xq) xs.emplace_back(q, P);
        auto r = find_integer_relation(xs, opt);
        bool good = r.status == RelationStatus::Found;
        if (good) {
            Rational dot;
            for (size_t i = 0; i < xq.size(); ++i)
                dot += Rational(r.coeffs[i]) * xq[i];
            good = dot == Rational(0);
        }
        ok = ok && good;
    }
    std::printf("       g: planted relations, 10 values, coeffs<=1e3, 5 trials\n");
    return ok;
}

// C11h: no false positives on unrelated values (>= 99/100 report None)
bool c11h() {
    long digits = 60;
    long P = prec_bits_for_digits(digits);
    std::mt19937_64 rng(31337);
    RelationOptions opt;
    opt.digits = digits;
    int none = 0;
    for (int t = 0; t < 100; ++t) {
        std::vector<BigReal> xs;
        for (int i = 0; i < 4; ++i) {
            std::string s = "0.";
            for (int k = 0; k < 64; ++k) s += static_cast<char>('0' + rng() % 10);
            xs.emplace_back(BigReal(s, P) + BigReal(1, P));
        }
        if (find_integer_relation(xs, opt).status == RelationStatus::None) ++none;
    }
    std::printf("       h: false positives, %d/100 clean (need >= 99)\n", none);
    return none >= 99;
}

// C11i: dimensions are monotone in the working precision and land on the
// conjectural table for k <= 6
bool c11i() {
    const int dT[] = {1, 1, 2, 2, 4};
    const int dt_[] = {1, 2, 3, 5, 8};
    bool ok = true;
    for (int k = 2; k <= 6; ++k) {
        for (int fam = 0; fam < 2; ++fam) {
            int prev = 1 << 30;
            for (long digits : {100L, 200L, 300L}) {
                RankOptions opt;
                opt.digits = digits;
                opt.cache = &cache;
                opt.jobs = std::max(1u, std::thread::hardware_concurrency());
                auto r = relation_lattice_rank(
                    fam == 0 ? ValueFamily::T : ValueFamily::t, k, opt);
                ok = ok && r.dimension <= prev;
                prev = r.dimension;
            }
            ok = ok && prev == (fam == 0 ? dT[k - 2] : dt_[k - 2]);
        }
    }
    std::printf("       i: dimensions monotone over {100,200,300} digits, k<=6\n");
    return ok;
}

void c11_properties() {
    auto t0 = Clock::now();
    std::printf("       property sub-suites:\n");
    bool a = c11a(), b = c11b(), c = c11c(), d = c11d(), e = c11e(), f = c11f(),
         g = c11g(), h = c11h(), i = c11i();
    bool all = a && b && c && d && e && f && g && h && i;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "property suites a=%d b=%d c=%d d=%d e=%d f=%d g=%d h=%d i=%d",
                  a, b, c, d, e, f, g, h, i);
    line("C11", all, buf, seconds_since(t0));
}

} // namespace

int main() {
    auto t0 = Clock::now();
    c1_duality();
    c2_sf2();
    c3_sf3();
    c4_interm_wdzv();
    c5_parity();
    c6_shuffle_tt();
    c7_genfun();
    c8_weight6();
    c9_dims();
    c10_conjectures();
    c11_properties();
    std::printf("ACCEPTANCE: %d/11 criteria passed (%.1fs total)\n", 11 - failures,
                seconds_since(t0));
    return failures == 0 ? 0 : 3;
}
