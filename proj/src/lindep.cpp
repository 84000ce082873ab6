#include "mtv/lindep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace mtv {

namespace {

constexpr double LOG10_2 = 0.30102999566398119521;

long min_precision(const std::vector<BigReal>& xs) {
    long p = xs.front().precision();
    for (const auto& x : xs) p = std::min(p, x.precision());
    return p;
}

BigReal combo_residual(const std::vector<Integer>& a,
                       const std::vector<BigReal>& xs, long P) {
    BigReal s(0L, P);
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) s.addmul(BigReal(a[i], P), xs[i]);
    return s;
}

void normalize_relation(std::vector<Integer>& a) {
    Integer g(0);
    for (const auto& e : a) g = gcd(g, e);
    if (g > Integer(1))
        for (auto& e : a) mpz_divexact(e.raw(), e.raw(), g.raw());
    for (const auto& e : a) {
        if (e.is_zero()) continue;
        if (e.sgn() < 0)
            for (auto& f : a) f = -f;
        break;
    }
}

// Rows [A | A * round(C x)] for scale C = 10^sdigits, where A (the first
// n columns) is the unimodular transform accumulated so far.
std::vector<std::vector<Integer>> scaled_rows(
    const std::vector<std::vector<Integer>>& A, const std::vector<BigReal>& xs,
    long sdigits) {
    size_t n = xs.size();
    long P = min_precision(xs);
    Integer C = Integer::pow10(static_cast<unsigned>(sdigits));
    BigReal Cb(C, P);
    std::vector<Integer> y(n);
    for (size_t l = 0; l < n; ++l) y[l] = (xs[l] * Cb).round_to_integer();
    std::vector<std::vector<Integer>> rows(n);
    for (size_t i = 0; i < n; ++i) {
        rows[i].reserve(n + 1);
        rows[i] = A[i];
        Integer s;
        for (size_t l = 0; l < n; ++l)
            if (!A[i][l].is_zero()) s.addmul(A[i][l], y[l]);
        rows[i].push_back(std::move(s));
    }
    return rows;
}

std::vector<long> scale_stages(long full) {
    std::vector<long> stages;
    long s = std::min(60L, full);
    while (true) {
        stages.push_back(s);
        if (s >= full) break;
        s = std::min(s * 2, full);
    }
    return stages;
}

struct HarvestInternal {
    RelationHarvest pub;
    std::vector<double> residual_log10; // parallel to accepted
};

HarvestInternal run_harvest(const std::vector<BigReal>& xs,
                            const RelationOptions& opt) {
    if (xs.size() < 2)
        throw std::invalid_argument("integer relation search needs >= 2 values");
    long full = opt.digits - opt.coeff_bound_digits - opt.guard_digits;
    if (full < 10)
        throw std::invalid_argument(
            "integer relation search: digits too small for the requested "
            "coefficient bound");
    size_t n = xs.size();
    long P = min_precision(xs);

    std::vector<std::vector<Integer>> A(n, std::vector<Integer>(n, Integer(0)));
    for (size_t i = 0; i < n; ++i) A[i][i] = Integer(1);
    for (long stage : scale_stages(full)) {
        IntegerLattice lat{scaled_rows(A, xs, stage)};
        lat = lll_reduce(lat, 0.99);
        for (size_t i = 0; i < n; ++i)
            A[i].assign(lat.rows[i].begin(), lat.rows[i].end() - 1);
    }

    Integer coeff_bound = Integer::pow10(static_cast<unsigned>(opt.coeff_bound_digits));
    double accept = -0.6 * static_cast<double>(opt.digits);
    double reject = -0.3 * static_cast<double>(opt.digits);

    HarvestInternal out;
    out.pub.best_residual_log10 = 1e300;
    bool any_bounded = false;
    for (size_t i = 0; i < n; ++i) {
        Integer maxabs(0);
        for (const auto& e : A[i]) {
            Integer ae = abs(e);
            if (ae > maxabs) maxabs = ae;
        }
        if (maxabs.is_zero() || maxabs >= coeff_bound) continue;
        any_bounded = true;
        BigReal r = combo_residual(A[i], xs, P);
        double rl10 = r.log2_abs() * LOG10_2;
        if (rl10 < out.pub.best_residual_log10) out.pub.best_residual_log10 = rl10;
        if (rl10 < accept) {
            auto row = A[i];
            normalize_relation(row);
            out.pub.accepted.push_back(std::move(row));
            out.residual_log10.push_back(rl10);
        }
    }
    if (!out.pub.accepted.empty())
        out.pub.status = RelationStatus::Found;
    else if (any_bounded && out.pub.best_residual_log10 <= reject)
        out.pub.status = RelationStatus::Inconclusive;
    else
        out.pub.status = RelationStatus::None;
    return out;
}

// Gauss elimination over Q; returns indices of independent rows and their
// pivot columns.
void exact_pivots(const std::vector<std::vector<Integer>>& rows,
                  std::vector<size_t>& indep_rows, std::vector<size_t>& pivot_cols) {
    if (rows.empty()) return;
    size_t m = rows[0].size();
    std::vector<std::pair<std::vector<Rational>, size_t>> pivots;
    for (size_t ri = 0; ri < rows.size(); ++ri) {
        std::vector<Rational> v(m);
        for (size_t j = 0; j < m; ++j) v[j] = Rational(rows[ri][j]);
        for (const auto& [pv, pc] : pivots) {
            if (v[pc].is_zero()) continue;
            Rational f = v[pc] / pv[pc];
            for (size_t j = 0; j < m; ++j) v[j] -= f * pv[j];
        }
        size_t c = m;
        for (size_t j = 0; j < m; ++j)
            if (!v[j].is_zero()) {
                c = j;
                break;
            }
        if (c == m) continue; // dependent on earlier rows
        indep_rows.push_back(ri);
        pivot_cols.push_back(c);
        pivots.emplace_back(std::move(v), c);
    }
}

struct LabeledValues {
    std::vector<std::string> labels;
    std::vector<BigReal> vals;
};

LabeledValues family_values(ValueFamily fam, int weight, const RankOptions& opt) {
    auto idxs = enumerate_admissible(weight);
    struct Task {
        std::string label;
        Index ix;
        bool hoffman;
    };
    std::vector<Task> tasks;
    if (fam == ValueFamily::T || fam == ValueFamily::Union)
        for (const auto& ix : idxs) tasks.push_back({"T" + ix.display(), ix, false});
    if (fam == ValueFamily::t || fam == ValueFamily::Union)
        for (const auto& ix : idxs) tasks.push_back({"t" + ix.display(), ix, true});

    ValueContext ctx = ValueContext::for_digits(opt.digits, opt.cache);
    LabeledValues out;
    out.labels.reserve(tasks.size());
    for (const auto& t : tasks) out.labels.push_back(t.label);
    out.vals.assign(tasks.size(), BigReal(ctx.prec_bits));

    int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || tasks.size() < 2) {
        for (size_t i = 0; i < tasks.size(); ++i)
            out.vals[i] = tasks[i].hoffman ? t_value(tasks[i].ix, ctx).value
                                           : T_value(tasks[i].ix, ctx).value;
        return out;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex err_mu;
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            try {
                out.vals[i] = tasks[i].hoffman ? t_value(tasks[i].ix, ctx).value
                                               : T_value(tasks[i].ix, ctx).value;
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

std::string family_name(ValueFamily fam) {
    switch (fam) {
    case ValueFamily::T: return "T";
    case ValueFamily::t: return "t";
    case ValueFamily::Union: return "union";
    }
    return "?";
}

} // namespace

RelationResult find_integer_relation(const std::vector<BigReal>& xs,
                                     const RelationOptions& opt) {
    HarvestInternal h = run_harvest(xs, opt);
    RelationResult res;
    res.status = h.pub.status;
    res.accept_log10 = -0.6 * static_cast<double>(opt.digits);
    res.reject_log10 = -0.3 * static_cast<double>(opt.digits);
    res.residual_log10 = h.pub.best_residual_log10;
    if (h.pub.status != RelationStatus::Found) return res;
    size_t best = 0;
    for (size_t i = 1; i < h.residual_log10.size(); ++i)
        if (h.residual_log10[i] < h.residual_log10[best]) best = i;
    res.coeffs = h.pub.accepted[best];
    res.residual_log10 = h.residual_log10[best];
    return res;
}

RelationHarvest harvest_relations(const std::vector<BigReal>& xs,
                                  const RelationOptions& opt) {
    return run_harvest(xs, opt).pub;
}

DimensionReport relation_lattice_rank(ValueFamily fam, int weight,
                                      const RankOptions& opt) {
    LabeledValues lv = family_values(fam, weight, opt);
    size_t n = lv.vals.size();
    DimensionReport rep;
    rep.family = family_name(fam);
    rep.weight = weight;
    rep.count = static_cast<int>(n);
    rep.labels = lv.labels;

    RelationOptions ropt{opt.digits, opt.coeff_bound_digits, opt.guard_digits};
    std::vector<size_t> active(n);
    std::iota(active.begin(), active.end(), size_t{0});

    while (active.size() >= 2) {
        std::vector<BigReal> xs;
        xs.reserve(active.size());
        for (size_t idx : active) xs.push_back(lv.vals[idx]);
        RelationHarvest h = harvest_relations(xs, ropt);
        if (h.accepted.empty()) {
            if (h.status == RelationStatus::Inconclusive) rep.inconclusive = true;
            break;
        }
        std::vector<size_t> indep, pcols;
        exact_pivots(h.accepted, indep, pcols);
        if (indep.empty()) break;
        for (size_t ri : indep) {
            std::vector<Integer> full(n, Integer(0));
            for (size_t j = 0; j < active.size(); ++j) full[active[j]] = h.accepted[ri][j];
            rep.relation_rows.push_back(std::move(full));
        }
        rep.relations += static_cast<int>(indep.size());
        std::sort(pcols.begin(), pcols.end(), std::greater<size_t>());
        for (size_t pc : pcols) active.erase(active.begin() + static_cast<long>(pc));
    }
    rep.dimension = rep.count - rep.relations;
    return rep;
}

std::pair<DimensionReport, DimensionReport> dims_union_intersection(
    int weight, const RankOptions& opt, DimensionReport* outT,
    DimensionReport* outt) {
    ValueCache local;
    RankOptions o = opt;
    if (!o.cache) o.cache = &local; // share values across the three runs
    DimensionReport rT = relation_lattice_rank(ValueFamily::T, weight, o);
    DimensionReport rt = relation_lattice_rank(ValueFamily::t, weight, o);
    DimensionReport rU = relation_lattice_rank(ValueFamily::Union, weight, o);
    DimensionReport inter;
    inter.family = "intersection";
    inter.weight = weight;
    inter.count = rT.dimension + rt.dimension;
    inter.relations = rU.dimension;
    inter.dimension = rT.dimension + rt.dimension - rU.dimension;
    inter.inconclusive = rT.inconclusive || rt.inconclusive || rU.inconclusive;
    inter.labels = rU.labels;
    inter.relation_rows = rU.relation_rows;
    if (outT) *outT = rT;
    if (outt) *outt = rt;
    return {rU, inter};
}

std::vector<Index> zeta_basis_compositions(int weight) {
    std::vector<Index> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p : {2, 3}) {
            if (rem < p) continue;
            cur.push_back(p);
            self(self, rem - p);
            cur.pop_back();
        }
    };
    if (weight >= 2) rec(rec, weight);
    return out;
}

MembershipResult membership_in_Z(const BigReal& x, int weight,
                                 const RelationOptions& opt,
                                 const ValueContext& ctx) {
    MembershipResult res;
    res.basis = zeta_basis_compositions(weight);
    if (res.basis.empty()) return res;
    std::vector<BigReal> zvals;
    zvals.reserve(res.basis.size());
    for (const auto& ix : res.basis) zvals.push_back(zeta_value(ix, ctx).value);

    std::vector<size_t> active(res.basis.size());
    std::iota(active.begin(), active.end(), size_t{0});
    for (size_t round = 0; round <= res.basis.size(); ++round) {
        if (active.empty()) break;
        std::vector<BigReal> xs;
        xs.push_back(x);
        for (size_t i : active) xs.push_back(zvals[i]);
        RelationResult r = find_integer_relation(xs, opt);
        res.residual_log10 = r.residual_log10;
        if (r.status != RelationStatus::Found) return res;
        if (!r.coeffs[0].is_zero()) {
            res.found = true;
            res.target_coeff = r.coeffs[0];
            res.coeffs.assign(res.basis.size(), Integer(0));
            for (size_t j = 0; j < active.size(); ++j)
                res.coeffs[active[j]] = r.coeffs[j + 1];
            return res;
        }
        // relation among the basis elements alone: prune the last pivot
        size_t last = 0;
        bool has = false;
        for (size_t j = 0; j < active.size(); ++j)
            if (!r.coeffs[j + 1].is_zero()) {
                last = j;
                has = true;
            }
        if (!has) return res;
        active.erase(active.begin() + static_cast<long>(last));
    }
    return res;
}

} // namespace mtv
