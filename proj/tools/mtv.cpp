// mtv: multiple-T-value calculator and identity verifier.
//
// Exit codes: 0 success / verified, 1 internal error, 2 usage or domain
// error, 3 a proven identity failed its numeric check. Conjectural checks
// report their status but never affect the exit code.

#include "CLI11.hpp"
#include "json.hpp"

#include "mtv/errest.hpp"
#include "mtv/indices.hpp"
#include "mtv/lindep.hpp"
#include "mtv/relations.hpp"
#include "mtv/series_eval.hpp"
#include "mtv/values.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;
using namespace mtv;

constexpr double LOG10_2 = 0.30102999566398119521;

struct GlobalOpts {
    long digits = 60;
    long terms = 0;
    std::string cache_dir;
    std::string format = "table";
    int jobs = 1;
    bool timings = false;

    std::unique_ptr<ValueCache> cache;

    ValueCache* cache_ptr() { return cache ? cache.get() : nullptr; }

    void open_cache() {
        if (cache_dir.empty()) {
            const char* env = std::getenv("MTV_CACHE_DIR");
            if (env) cache_dir = env;
        }
        if (cache_dir.empty()) return;
        std::filesystem::create_directories(cache_dir);
        cache = std::make_unique<ValueCache>(cache_dir + "/values.txt");
    }

    ValueContext context() {
        ValueContext ctx = ValueContext::for_digits(digits, cache_ptr());
        if (terms > 0) ctx.terms = terms;
        return ctx;
    }
};

std::string csv_quote(const std::string& s) {
    bool need = s.find_first_of(",\"\n") != std::string::npos;
    if (!need) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        out += ch;
    }
    out += "\"";
    return out;
}

std::string sci_from_log10(double l10) {
    if (l10 <= -1e290) return "0";
    double e = std::floor(l10);
    double m = std::pow(10.0, l10 - e);
    if (m >= 9.995) {
        m /= 10.0;
        e += 1.0;
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2fe%+d", m, static_cast<int>(e));
    return buf;
}

// ---------------------------------------------------------------------------
// report rendering
// ---------------------------------------------------------------------------

std::string report_status(const VerificationReport& r) {
    if (r.conjecture) return r.pass ? "SUPPORTED" : "UNSUPPORTED";
    return r.pass ? "PASS" : "FAIL";
}

void print_reports(const std::vector<VerificationReport>& reports,
                   const GlobalOpts& g) {
    if (g.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) {
            ordered_json o;
            o["check"] = r.name;
            o["params"] = r.params;
            o["status"] = report_status(r);
            o["pass"] = r.pass;
            o["conjecture"] = r.conjecture;
            o["exact"] = r.exact;
            o["residual"] = r.residual_str;
            o["tolerance"] = r.tolerance_str;
            if (!r.note.empty()) o["note"] = r.note;
            if (g.timings) o["ms"] = r.wall_ms;
            arr.push_back(std::move(o));
        }
        std::cout << arr.dump(2) << "\n";
        return;
    }
    if (g.format == "csv") {
        std::cout << "check,params,status,residual,tolerance,note";
        if (g.timings) std::cout << ",ms";
        std::cout << "\n";
        for (const auto& r : reports) {
            std::cout << csv_quote(r.name) << "," << csv_quote(r.params) << ","
                      << report_status(r) << "," << r.residual_str << ","
                      << r.tolerance_str << "," << csv_quote(r.note);
            if (g.timings) std::cout << "," << r.wall_ms;
            std::cout << "\n";
        }
        return;
    }
    // table
    size_t wname = 5, wparams = 6;
    for (const auto& r : reports) {
        wname = std::max(wname, r.name.size());
        wparams = std::max(wparams, r.params.size());
    }
    for (const auto& r : reports) {
        std::cout << r.name << std::string(wname - r.name.size() + 2, ' ')
                  << r.params << std::string(wparams - r.params.size() + 2, ' ')
                  << report_status(r) << "  residual=" << r.residual_str
                  << "  tol=" << r.tolerance_str;
        if (g.timings) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "  %.1fms", r.wall_ms);
            std::cout << buf;
        }
        if (!r.note.empty()) std::cout << "\n" << std::string(wname + 2, ' ')
                                       << "note: " << r.note;
        std::cout << "\n";
    }
}

// Exit status from a report set: 3 if any proven check failed.
int reports_exit(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.conjecture && !r.pass) return 3;
    return 0;
}

// ---------------------------------------------------------------------------
// lindep expression mini-language:
//   expr   := factor ('*' factor)*
//   factor := atom ('^' integer)?
//   atom   := 'T(' index ')' | 't(' index ')' | 'zeta(' index ')'
//           | 'pi' | 'log2' | integer
// ---------------------------------------------------------------------------

struct ExprParser {
    const std::string& s;
    size_t pos = 0;
    const ValueContext& ctx;

    ExprParser(const std::string& str, const ValueContext& c) : s(str), ctx(c) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("expression '" + s + "': " + msg +
                                    " at position " + std::to_string(pos));
    }

    long parse_integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits_start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits_start) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }

    std::string parse_paren_body() {
        if (!eat('(')) fail("expected '('");
        size_t start = pos;
        while (pos < s.size() && s[pos] != ')') ++pos;
        if (pos == s.size()) fail("missing ')'");
        std::string body = s.substr(start, pos - start);
        ++pos;
        return body;
    }

    BigReal parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("expected value");
        if (s.compare(pos, 5, "zeta(") == 0) {
            pos += 4;
            Index ix = Index::parse(parse_paren_body());
            return zeta_value(ix, ctx).value;
        }
        if (s.compare(pos, 2, "T(") == 0) {
            pos += 1;
            Index ix = Index::parse(parse_paren_body());
            return T_value(ix, ctx).value;
        }
        if (s.compare(pos, 2, "t(") == 0) {
            pos += 1;
            Index ix = Index::parse(parse_paren_body());
            return t_value(ix, ctx).value;
        }
        if (s.compare(pos, 2, "pi") == 0) {
            pos += 2;
            return constants(ctx.prec_bits).pi;
        }
        if (s.compare(pos, 4, "log2") == 0) {
            pos += 4;
            return constants(ctx.prec_bits).log2;
        }
        return BigReal(parse_integer(), ctx.prec_bits);
    }

    BigReal parse_factor() {
        BigReal base = parse_atom();
        skip_ws();
        if (eat('^')) {
            long e = parse_integer();
            return pow_si(base, e);
        }
        return base;
    }

    BigReal parse_expr() {
        BigReal v = parse_factor();
        while (true) {
            skip_ws();
            if (!eat('*')) break;
            v *= parse_factor();
        }
        skip_ws();
        if (pos != s.size()) fail("trailing characters");
        return v;
    }
};

// ---------------------------------------------------------------------------
// subcommand payload state
// ---------------------------------------------------------------------------

struct EvalArgs {
    std::string family;
    std::string index;
    std::string route = "direct";
};

struct DimsArgs {
    int kmin = 2, kmax = 8;
    long digits = 0; // 0 = per-weight schedule
    std::string families = "T,t,union,intersection";
};

long dims_schedule(int k) {
    double d = 30.0 + 12.0 * std::pow(2.0, k - 4);
    long v = static_cast<long>(d + 0.5);
    return std::min(320L, std::max(100L, v));
}

int run_eval(GlobalOpts& g, const EvalArgs& a) {
    ValueContext ctx = g.context();
    Evaluated v(BigReal(ctx.prec_bits), 0.0);
    std::string label;
    if (a.family == "Z") {
        SignedIndex z = SignedIndex::parse(a.index);
        v = altZ_value(z, ctx);
        label = "Z" + z.display();
    } else {
        Index ix = Index::parse(a.index);
        if (a.family == "T") {
            TRoute route = TRoute::Direct;
            if (a.route == "expanded") route = TRoute::Expanded;
            else if (a.route == "signed") route = TRoute::Signed;
            else if (a.route != "direct")
                throw std::invalid_argument("eval: unknown route '" + a.route + "'");
            v = T_value(ix, ctx, route);
        } else if (a.family == "t") {
            v = t_value(ix, ctx);
        } else if (a.family == "zeta") {
            v = zeta_value(ix, ctx);
        } else {
            throw std::invalid_argument("eval: unknown family '" + a.family +
                                        "' (expected T, t, zeta or Z)");
        }
        label = a.family + ix.display();
    }
    std::string dec = v.value.to_decimal(static_cast<size_t>(g.digits));
    if (g.format == "json") {
        ordered_json o;
        o["family"] = a.family;
        o["index"] = a.index;
        o["digits"] = g.digits;
        o["value"] = dec;
        o["err_log10"] = v.err_log2 * LOG10_2;
        std::cout << o.dump(2) << "\n";
    } else if (g.format == "csv") {
        std::cout << "family,index,digits,value\n"
                  << a.family << "," << csv_quote(a.index) << "," << g.digits
                  << "," << dec << "\n";
    } else {
        std::cout << label << " = " << dec << "\n";
    }
    return 0;
}

int run_dual(GlobalOpts& g, const std::string& index) {
    Index ix = Index::parse(index);
    Index dx = dual(ix);
    if (g.format == "json") {
        ordered_json o;
        o["index"] = ix.to_string();
        o["dual"] = dx.to_string();
        std::cout << o.dump(2) << "\n";
    } else if (g.format == "csv") {
        std::cout << "index,dual\n" << csv_quote(ix.to_string()) << ","
                  << csv_quote(dx.to_string()) << "\n";
    } else {
        std::cout << ix.display() << " -> " << dx.display() << "\n";
    }
    return 0;
}

int run_word_product(GlobalOpts& g, const std::string& which,
                     const std::string& ia, const std::string& ib) {
    Index a = Index::parse(ia), b = Index::parse(ib);
    LinearCombo<Index> result;
    if (which == "shuffle") {
        result = shuffle(index_to_word(a), index_to_word(b))
                     .map_terms([](const TWord& w) { return word_to_index(w); });
    } else {
        result = stuffle(a, b);
    }
    if (g.format == "json") {
        ordered_json o;
        o["op"] = which;
        o["a"] = a.to_string();
        o["b"] = b.to_string();
        ordered_json terms = ordered_json::array();
        for (const auto& [ix, c] : result.terms()) {
            ordered_json t;
            t["index"] = ix.to_string();
            t["coeff"] = c.to_string();
            terms.push_back(std::move(t));
        }
        o["terms"] = std::move(terms);
        o["display"] = result.to_string();
        std::cout << o.dump(2) << "\n";
    } else if (g.format == "csv") {
        std::cout << "index,coeff\n";
        for (const auto& [ix, c] : result.terms())
            std::cout << csv_quote(ix.to_string()) << "," << c.to_string() << "\n";
    } else {
        std::cout << result.to_string() << "\n";
    }
    return 0;
}

int run_genfun(GlobalOpts& g, const std::string& xs, const std::string& ys) {
    Rational X(xs), Y(ys);
    Evaluated lhs = genfun_lhs(X, Y, g.digits, g.cache_ptr());
    Evaluated rhs = genfun_rhs(X, Y, g.digits);
    BigReal diff = lhs.value - rhs.value;
    ErrAcc e;
    e.add(lhs.err_log2);
    e.add(rhs.err_log2);
    double tol_log2 = e.e + std::log2(10.0);
    bool pass = diff.log2_abs() <= tol_log2;
    size_t show = static_cast<size_t>(g.digits);
    if (g.format == "json") {
        ordered_json o;
        o["X"] = X.to_string();
        o["Y"] = Y.to_string();
        o["digits"] = g.digits;
        o["lhs"] = lhs.value.to_decimal(show);
        o["rhs"] = rhs.value.to_decimal(show);
        o["residual"] = sci_from_log10(diff.log2_abs() * LOG10_2);
        o["tolerance"] = sci_from_log10(tol_log2 * LOG10_2);
        o["status"] = pass ? "PASS" : "FAIL";
        std::cout << o.dump(2) << "\n";
    } else if (g.format == "csv") {
        std::cout << "X,Y,lhs,rhs,residual,tolerance,status\n"
                  << csv_quote(X.to_string()) << "," << csv_quote(Y.to_string())
                  << "," << lhs.value.to_decimal(show) << ","
                  << rhs.value.to_decimal(show) << ","
                  << sci_from_log10(diff.log2_abs() * LOG10_2) << ","
                  << sci_from_log10(tol_log2 * LOG10_2) << ","
                  << (pass ? "PASS" : "FAIL") << "\n";
    } else {
        std::cout << "genfun X=" << X.to_string() << " Y=" << Y.to_string()
                  << "\n  series   = " << lhs.value.to_decimal(show)
                  << "\n  closed   = " << rhs.value.to_decimal(show)
                  << "\n  residual = " << sci_from_log10(diff.log2_abs() * LOG10_2)
                  << " (tol " << sci_from_log10(tol_log2 * LOG10_2) << ")"
                  << "\n  status   = " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 3;
}

int run_lindep(GlobalOpts& g, const std::vector<std::string>& exprs,
               int coeff_bound_digits) {
    if (exprs.size() < 2)
        throw std::invalid_argument("lindep: needs at least two expressions");
    ValueContext ctx = g.context();
    std::vector<BigReal> xs;
    xs.reserve(exprs.size());
    for (const auto& e : exprs) xs.push_back(ExprParser(e, ctx).parse_expr());
    RelationOptions opt;
    opt.digits = g.digits;
    opt.coeff_bound_digits = coeff_bound_digits;
    RelationResult r = find_integer_relation(xs, opt);

    std::string status = r.status == RelationStatus::Found ? "FOUND"
                         : r.status == RelationStatus::None ? "NONE"
                                                            : "INCONCLUSIVE";
    std::string relation;
    if (r.status == RelationStatus::Found) {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < r.coeffs.size(); ++i) {
            if (r.coeffs[i].is_zero()) continue;
            Integer c = r.coeffs[i];
            if (!first) os << (c.sgn() >= 0 ? " + " : " - ");
            else if (c.sgn() < 0) os << "-";
            os << abs(c).to_string() << "*[" << exprs[i] << "]";
            first = false;
        }
        os << " = 0";
        relation = os.str();
    }
    if (g.format == "json") {
        ordered_json o;
        o["status"] = status;
        ordered_json cs = ordered_json::array();
        for (const auto& c : r.coeffs) cs.push_back(c.to_string());
        o["coefficients"] = std::move(cs);
        if (!relation.empty()) o["relation"] = relation;
        o["residual"] = sci_from_log10(r.residual_log10);
        o["accept_threshold"] = sci_from_log10(r.accept_log10);
        o["reject_threshold"] = sci_from_log10(r.reject_log10);
        std::cout << o.dump(2) << "\n";
    } else if (g.format == "csv") {
        std::cout << "status,coefficients,residual\n" << status << ",";
        std::string cs;
        for (size_t i = 0; i < r.coeffs.size(); ++i)
            cs += (i ? " " : "") + r.coeffs[i].to_string();
        std::cout << csv_quote(cs) << "," << sci_from_log10(r.residual_log10)
                  << "\n";
    } else {
        std::cout << "status: " << status << "\n";
        if (!relation.empty()) std::cout << "relation: " << relation << "\n";
        std::cout << "residual: " << sci_from_log10(r.residual_log10)
                  << " (accept < " << sci_from_log10(r.accept_log10)
                  << ", reject > " << sci_from_log10(r.reject_log10) << ")\n";
    }
    return 0;
}

int run_dims(GlobalOpts& g, const DimsArgs& a) {
    std::vector<std::string> fams;
    {
        std::stringstream ss(a.families);
        std::string f;
        while (std::getline(ss, f, ',')) fams.push_back(f);
    }
    auto wants = [&](const std::string& f) {
        for (const auto& x : fams)
            if (x == f) return true;
        return false;
    };
    bool need_union = wants("union") || wants("intersection");

    std::vector<DimensionReport> rows;
    for (int k = a.kmin; k <= a.kmax; ++k) {
        RankOptions opt;
        opt.digits = a.digits > 0 ? a.digits : dims_schedule(k);
        opt.cache = g.cache_ptr();
        opt.jobs = g.jobs;
        if (need_union) {
            DimensionReport rT, rt;
            auto [rU, rI] = dims_union_intersection(k, opt, &rT, &rt);
            if (wants("T")) rows.push_back(rT);
            if (wants("t")) rows.push_back(rt);
            if (wants("union")) rows.push_back(rU);
            if (wants("intersection")) rows.push_back(rI);
        } else {
            if (wants("T"))
                rows.push_back(relation_lattice_rank(ValueFamily::T, k, opt));
            if (wants("t"))
                rows.push_back(relation_lattice_rank(ValueFamily::t, k, opt));
        }
    }

    if (g.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json o;
            o["weight"] = r.weight;
            o["family"] = r.family;
            o["count"] = r.count;
            o["relations"] = r.relations;
            o["dimension"] = r.dimension;
            o["status"] = r.inconclusive ? "inconclusive" : "ok";
            arr.push_back(std::move(o));
        }
        std::cout << arr.dump(2) << "\n";
    } else if (g.format == "csv") {
        std::cout << "weight,family,count,relations,dimension,status\n";
        for (const auto& r : rows)
            std::cout << r.weight << "," << r.family << "," << r.count << ","
                      << r.relations << "," << r.dimension << ","
                      << (r.inconclusive ? "inconclusive" : "ok") << "\n";
    } else {
        std::cout << "weight  family        count  relations  dimension  status\n";
        for (const auto& r : rows) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "%-7d %-13s %-6d %-10d %-10d %s",
                          r.weight, r.family.c_str(), r.count, r.relations,
                          r.dimension, r.inconclusive ? "inconclusive" : "ok");
            std::cout << buf << "\n";
        }
    }
    for (const auto& r : rows)
        if (r.inconclusive) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    GlobalOpts g;
    CLI::App app{"multiple T-value calculator and identity verifier"};
    app.require_subcommand(1);
    // let global options (--digits, --format, ...) appear after the
    // subcommand name; subcommands created below inherit this setting
    app.fallthrough();
    app.add_option("--digits", g.digits, "decimal working precision")
        ->check(CLI::Range(15L, 100000L))
        ->capture_default_str();
    app.add_option("--terms", g.terms, "override series truncation order");
    app.add_option("--cache-dir", g.cache_dir,
                   "value cache directory (default: $MTV_CACHE_DIR)");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--jobs", g.jobs, "worker threads for bulk evaluation")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    app.add_flag("--timings", g.timings, "include wall-clock timings in output");

    // eval
    EvalArgs eval_args;
    auto* cmd_eval = app.add_subcommand("eval", "evaluate one value");
    cmd_eval->add_option("family", eval_args.family, "T, t, zeta or Z")->required();
    cmd_eval->add_option("index", eval_args.index,
                         "index, e.g. 1,3 (signed: 1,2;+,-)")->required();
    cmd_eval->add_option("--route", eval_args.route,
                         "T evaluation route: direct, expanded or signed");

    // dual
    std::string dual_index;
    auto* cmd_dual = app.add_subcommand("dual", "dual of an admissible index");
    cmd_dual->add_option("index", dual_index, "index, e.g. 1,3")->required();

    // shuffle / stuffle
    std::string pa, pb, sa, sb;
    auto* cmd_shuffle =
        app.add_subcommand("shuffle", "shuffle product of two index words");
    cmd_shuffle->add_option("a", pa, "first index")->required();
    cmd_shuffle->add_option("b", pb, "second index")->required();
    auto* cmd_stuffle =
        app.add_subcommand("stuffle", "quasi-shuffle product of two indices");
    cmd_stuffle->add_option("a", sa, "first index")->required();
    cmd_stuffle->add_option("b", sb, "second index")->required();

    // genfun
    std::string gx, gy;
    auto* cmd_genfun = app.add_subcommand(
        "genfun", "height-one generating function: series vs closed form");
    cmd_genfun->add_option("X", gx, "rational X, |X| <= 1/4")->required();
    cmd_genfun->add_option("Y", gy, "rational Y, -1/4 <= Y < 0")->required();

    // lindep
    std::vector<std::string> lin_exprs;
    int lin_coeff_digits = 6;
    auto* cmd_lindep = app.add_subcommand(
        "lindep", "integer-relation search among constant expressions");
    cmd_lindep->add_option("exprs", lin_exprs, "expressions (>= 2)")
        ->required()
        ->expected(-2);
    cmd_lindep->add_option("--coeff-bound-digits", lin_coeff_digits,
                           "accept coefficients below 10^this")
        ->check(CLI::Range(1, 18))
        ->capture_default_str();

    // dims
    DimsArgs dims_args;
    auto* cmd_dims =
        app.add_subcommand("dims", "conjectural dimension tables by weight");
    cmd_dims->add_option("--k-min", dims_args.kmin)->check(CLI::Range(2, 12));
    cmd_dims->add_option("--k-max", dims_args.kmax)->check(CLI::Range(2, 12));
    cmd_dims->add_option("--digits", dims_args.digits,
                         "override the per-weight precision schedule");
    cmd_dims->add_option("--families", dims_args.families,
                         "comma list from T,t,union,intersection")
        ->capture_default_str();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "verify identities");
    cmd_verify->require_subcommand(1);

    std::string v_index;
    int v_max_weight = 0, v_k = 0, v_kmin = 0, v_kmax = 0;
    int v_p = 0, v_q = 0, v_m = -1;
    std::string v_x, v_y;

    auto* vd = cmd_verify->add_subcommand("duality", "T(index) = T(dual)");
    vd->add_option("--index", v_index, "one index");
    vd->add_option("--max-weight", v_max_weight,
                   "all admissible indices of weight 2..W");

    auto* v2 = cmd_verify->add_subcommand("sf2", "depth-2 weighted sum formula");
    v2->add_option("--k", v_k);
    v2->add_option("--k-min", v_kmin);
    v2->add_option("--k-max", v_kmax);
    auto* v3 = cmd_verify->add_subcommand("sf3", "depth-3 sum formula");
    v3->add_option("--k", v_k);
    v3->add_option("--k-min", v_kmin);
    v3->add_option("--k-max", v_kmax);
    auto* vi = cmd_verify->add_subcommand("interm", "intermediate depth-2 sum");
    vi->add_option("--k", v_k);
    vi->add_option("--k-min", v_kmin);
    vi->add_option("--k-max", v_kmax);
    auto* vw = cmd_verify->add_subcommand("wdzv", "weighted double-zeta formula");
    vw->add_option("--k", v_k);
    vw->add_option("--k-min", v_kmin);
    vw->add_option("--k-max", v_kmax);
    auto* vp = cmd_verify->add_subcommand("parity", "depth-2 parity reduction");
    vp->add_option("--p", v_p);
    vp->add_option("--q", v_q);
    vp->add_option("--max-weight", v_max_weight, "all valid (p,q) with p+q <= W");
    auto* vs = cmd_verify->add_subcommand("shuffle-tt",
                                          "symbolic depth-1 x depth-1 shuffle");
    vs->add_option("--k", v_k);
    vs->add_option("--k-min", v_kmin);
    vs->add_option("--k-max", v_kmax);
    auto* vg = cmd_verify->add_subcommand("genfun", "generating function check");
    vg->add_option("--x", v_x)->required();
    vg->add_option("--y", v_y)->required();
    auto* vm = cmd_verify->add_subcommand("machide",
                                          "conjectural weighted depth-3 sum");
    vm->add_option("--k", v_k);
    vm->add_option("--k-min", v_kmin);
    vm->add_option("--k-max", v_kmax);
    auto* vc = cmd_verify->add_subcommand("conj53",
                                          "conjectural depth-2 span membership");
    vc->add_option("--p", v_p)->required();
    vc->add_option("--q", v_q)->required();
    vc->add_option("--m", v_m)->required();
    cmd_verify->add_subcommand("weight6", "low-weight reduction bundle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        g.open_cache();
        if (cmd_eval->parsed()) return run_eval(g, eval_args);
        if (cmd_dual->parsed()) return run_dual(g, dual_index);
        if (cmd_shuffle->parsed()) return run_word_product(g, "shuffle", pa, pb);
        if (cmd_stuffle->parsed()) return run_word_product(g, "stuffle", sa, sb);
        if (cmd_genfun->parsed()) return run_genfun(g, gx, gy);
        if (cmd_lindep->parsed()) return run_lindep(g, lin_exprs, lin_coeff_digits);
        if (cmd_dims->parsed()) return run_dims(g, dims_args);

        // verify subcommands
        std::vector<VerificationReport> reports;
        ValueCache* cache = g.cache_ptr();
        auto krange = [&](int defk) {
            int lo = v_kmin > 0 ? v_kmin : (v_k > 0 ? v_k : defk);
            int hi = v_kmax > 0 ? v_kmax : (v_k > 0 ? v_k : defk);
            return std::pair<int, int>(lo, hi);
        };
        if (vd->parsed()) {
            if (!v_index.empty()) {
                reports.push_back(check_duality(Index::parse(v_index), g.digits, cache));
            } else {
                int W = v_max_weight > 0 ? v_max_weight : 8;
                for (int w = 2; w <= W; ++w)
                    for (const auto& ix : enumerate_admissible(w))
                        reports.push_back(check_duality(ix, g.digits, cache));
            }
        } else if (v2->parsed()) {
            auto [lo, hi] = krange(5);
            for (int k = lo; k <= hi; ++k)
                reports.push_back(check_sum_formula_depth2(k, g.digits, cache));
        } else if (v3->parsed()) {
            auto [lo, hi] = krange(5);
            for (int k = lo; k <= hi; ++k)
                reports.push_back(check_sum_formula_depth3(k, g.digits, cache));
        } else if (vi->parsed()) {
            auto [lo, hi] = krange(5);
            for (int k = lo; k <= hi; ++k)
                reports.push_back(check_intermediate_sum(k, g.digits, cache));
        } else if (vw->parsed()) {
            auto [lo, hi] = krange(5);
            for (int k = lo; k <= hi; ++k)
                reports.push_back(check_weighted_dzv(k, g.digits, cache));
        } else if (vp->parsed()) {
            if (v_p > 0 && v_q > 0) {
                reports.push_back(check_parity_depth2(v_p, v_q, g.digits, cache));
            } else {
                int W = v_max_weight > 0 ? v_max_weight : 11;
                for (int w = 3; w <= W; w += 2)
                    for (int q = 2; q <= w - 1; ++q)
                        reports.push_back(
                            check_parity_depth2(w - q, q, g.digits, cache));
            }
        } else if (vs->parsed()) {
            auto [lo, hi] = krange(6);
            for (int k = lo; k <= hi; ++k)
                for (int j = 2; j <= k - 2; ++j)
                    reports.push_back(check_shuffle_TT_expansion(j, k));
        } else if (vg->parsed()) {
            reports.push_back(
                check_genfun(Rational(v_x), Rational(v_y), g.digits, cache));
        } else if (vm->parsed()) {
            auto [lo, hi] = krange(6);
            for (int k = lo; k <= hi; ++k)
                reports.push_back(check_machide(k, g.digits, cache));
        } else if (vc->parsed()) {
            reports.push_back(check_conj53(v_p, v_q, v_m, g.digits, cache));
        } else { // weight6
            reports = reduce_weight_le6(g.digits, cache);
        }
        print_reports(reports, g);
        return reports_exit(reports);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
