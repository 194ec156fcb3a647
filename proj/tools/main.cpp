// qexpand: command-line front end over the libqexpand C API.
#include <qexpand/qexpand.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

using json = nlohmann::ordered_json;

namespace {

struct CtxDeleter {
    void operator()(qx_ctx* c) const { qx_ctx_free(c); }
};
using Ctx = std::unique_ptr<qx_ctx, CtxDeleter>;

struct StrDeleter {
    void operator()(char* s) const { qx_free_str(s); }
};
using ApiStr = std::unique_ptr<char, StrDeleter>;

int exit_code(int qx_code) {
    switch (qx_code) {
    case QX_OK: return 0;
    case QX_EUSAGE: return 1;
    case QX_EDOMAIN: return 2;
    case QX_EPRECISION: return 2;   // precision ceiling: a domain-of-service limit
    default: return 3;              // verification failure / internal inconsistency
    }
}

int fail_from_ctx(const qx_ctx* ctx) {
    std::cerr << "error: " << qx_errmsg(ctx) << "\n";
    return exit_code(qx_errno(ctx));
}

int emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        if (payload.empty() || payload.back() != '\n') std::cout << "\n";
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        return 1;
    }
    f << payload;
    if (payload.empty() || payload.back() != '\n') f << "\n";
    return f ? 0 : 1;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// Generic deterministic renderers used by every command without a bespoke
// layout: nested keys are dotted, arrays are space-joined in text and
// row-expanded in csv.
void generic_text_walk(const json& doc, const std::string& prefix, std::ostream& os) {
    for (const auto& [key, value] : doc.items()) {
        std::string label = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            generic_text_walk(value, label, os);
        } else if (value.is_array()) {
            os << label << ":";
            for (const json& item : value) {
                if (item.is_array()) {
                    os << "\n  ";
                    for (const json& inner : item) os << " " << scalar_text(inner);
                } else {
                    os << " " << scalar_text(item);
                }
            }
            os << "\n";
        } else {
            os << label << ": " << scalar_text(value) << "\n";
        }
    }
}

std::string generic_text(const json& doc) {
    std::ostringstream os;
    generic_text_walk(doc, "", os);
    return os.str();
}

void generic_csv_walk(const json& doc, const std::string& prefix, std::ostream& os) {
    for (const auto& [key, value] : doc.items()) {
        std::string label = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            generic_csv_walk(value, label, os);
        } else if (value.is_array()) {
            std::size_t i = 0;
            for (const json& item : value) {
                if (item.is_array()) {
                    std::size_t j = 0;
                    for (const json& inner : item)
                        os << label << "," << i << "," << j++ << ","
                           << csv_escape(scalar_text(inner)) << "\n";
                } else {
                    os << label << "," << i << "," << csv_escape(scalar_text(item)) << "\n";
                }
                ++i;
            }
        } else {
            os << label << "," << csv_escape(scalar_text(value)) << "\n";
        }
    }
}

std::string generic_csv(const json& doc) {
    std::ostringstream os;
    generic_csv_walk(doc, "", os);
    return os.str();
}

std::string pretty_json(const json& doc) { return doc.dump(2); }

// Scalar result (a single integer or rational) dressed per format.
int emit_scalar(const std::string& value, json meta, const std::string& format,
                const std::string& out_path) {
    if (format == "json") {
        meta["value"] = value;
        return emit(pretty_json(meta), out_path);
    }
    return emit(value, out_path);
}

int emit_doc(const json& doc, const std::string& format, const std::string& out_path) {
    if (format == "json") return emit(pretty_json(doc), out_path);
    if (format == "csv") return emit(generic_csv(doc), out_path);
    return emit(generic_text(doc), out_path);
}

json meta(std::initializer_list<std::pair<const char*, json>> fields) {
    json j;
    j["schema"] = "1";
    for (const auto& [k, v] : fields) j[k] = v;
    return j;
}

struct Global {
    std::string format = "text";
    unsigned digits = 30;
    std::uint64_t seed = 0;
    std::string out;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact expansions of inverse-(hyperbolic-)cosine powers: "
                 "Stirling numbers, Q(k,m), Bell polynomials, series and pi diagnostics"};
    app.require_subcommand(1);

    Global g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--digits", g.digits, "Decimal digits for numeric results")
        ->capture_default_str();
    app.add_option("--seed", g.seed, "Seed for randomized identity sweeps")
        ->capture_default_str();
    app.add_option("--out", g.out, "Write output to a file instead of stdout");

    // stirling --n N [--k K]
    auto* cmd_stirling = app.add_subcommand("stirling", "Signed Stirling numbers s(n,k)");
    cmd_stirling->fallthrough();
    struct {
        unsigned n = 0;
        std::optional<unsigned> k;
    } st;
    cmd_stirling->add_option("--n", st.n, "Row index n")->required();
    cmd_stirling->add_option("--k", st.k, "Column k; omit for the whole row");

    // q --k K --m M | q --table KMAX MMAX
    auto* cmd_q = app.add_subcommand("q", "The central quantity Q(k,m)");
    cmd_q->fallthrough();
    struct {
        std::optional<unsigned> k, m;
        std::vector<unsigned> table;
    } qq;
    cmd_q->add_option("--k", qq.k, "First index, k >= 1");
    cmd_q->add_option("--m", qq.m, "Second index, m >= 0");
    cmd_q->add_option("--table", qq.table, "Emit the full table up to KMAX MMAX")
        ->expected(2);

    // bell --n N --k K --values "p/q,..." | bell --preset arccos --m M --k K
    auto* cmd_bell = app.add_subcommand("bell", "Partial Bell polynomials B_{n,k}");
    cmd_bell->fallthrough();
    struct {
        std::optional<unsigned> n, k, m;
        std::string values;
        std::string preset;
    } be;
    cmd_bell->add_option("--n", be.n, "Weight n");
    cmd_bell->add_option("--k", be.k, "Part count k");
    cmd_bell->add_option("--values", be.values, "Comma-separated rational arguments");
    cmd_bell->add_option("--preset", be.preset, "Built-in argument sequence (arccos)")
        ->check(CLI::IsMember({"arccos"}));
    cmd_bell->add_option("--m", be.m, "Weight m for the arccos preset");

    // prod --k K --variant consecutive|odd [--stirling]
    auto* cmd_prod = app.add_subcommand("prod", "Squared-product polynomials in beta");
    cmd_prod->fallthrough();
    struct {
        unsigned k = 0;
        std::string variant = "consecutive";
        bool via_stirling = false;
    } pr;
    cmd_prod->add_option("--k", pr.k, "Number of factors")->required();
    cmd_prod->add_option("--variant", pr.variant, "consecutive | odd")
        ->check(CLI::IsMember({"consecutive", "odd"}))
        ->capture_default_str();
    cmd_prod->add_flag("--stirling", pr.via_stirling,
                       "Use the Stirling-expansion route instead of direct multiplication");

    // series --expr E --k K | --alpha p/q --terms M [--eval x --digits D]
    auto* cmd_series = app.add_subcommand("series", "Taylor coefficient series");
    cmd_series->fallthrough();
    struct {
        std::string expr;
        unsigned k = 1;
        std::string alpha;
        unsigned terms = 0;
        std::string eval_x;
    } se;
    cmd_series->add_option("--expr", se.expr,
                           "arcsin-pow | arcsinh-pow | arccos-ratio | arccosh-ratio | "
                           "shifted | shifted-hyp | alpha-ratio")
        ->required();
    cmd_series->add_option("--k", se.k, "Power k for the k-indexed families")
        ->capture_default_str();
    cmd_series->add_option("--alpha", se.alpha, "Rational exponent for alpha-ratio");
    cmd_series->add_option("--terms", se.terms, "Truncation order")->required();
    cmd_series->add_option("--eval", se.eval_x, "Evaluate the partial sum at rational x");

    // pi --repr R [--k K | --alpha p/q] --terms M
    auto* cmd_pi = app.add_subcommand("pi", "Pi-series partial sums and diagnostics");
    cmd_pi->fallthrough();
    struct {
        std::string repr;
        unsigned k = 1;
        std::string alpha;
        unsigned terms = 0;
    } pp;
    cmd_pi->add_option("--repr", pp.repr,
                       "sq8 | pow8 | sqrt2 | alpha9 | classic-basel | classic-odd | "
                       "classic-alt | classic-central")
        ->required();
    cmd_pi->add_option("--k", pp.k, "Power for pow8 / sqrt2")->capture_default_str();
    cmd_pi->add_option("--alpha", pp.alpha, "Rational exponent for alpha9");
    cmd_pi->add_option("--terms", pp.terms, "Number of series terms")->required();

    // verify SUITE --max N
    auto* cmd_verify = app.add_subcommand("verify", "Run an identity verification suite");
    cmd_verify->fallthrough();
    struct {
        std::string suite;
        unsigned max_n = 12;
    } vf;
    cmd_verify->add_option("suite", vf.suite,
                           "stirling | q | bell | products | series | pi | all")
        ->required();
    cmd_verify->add_option("--max", vf.max_n, "Upper sweep bound")->capture_default_str();

    // diag {compare | maclaurin | l-estimate}
    auto* cmd_diag = app.add_subcommand("diag", "Numeric cross-checks and diagnostics");
    cmd_diag->fallthrough();
    cmd_diag->require_subcommand(1);

    auto* diag_compare =
        cmd_diag->add_subcommand("compare", "Truncated series vs direct oracle evaluation");
    diag_compare->fallthrough();
    struct {
        std::string expr;
        unsigned k = 1;
        std::string alpha;
        std::string x;
        unsigned terms = 40;
    } dc;
    diag_compare->add_option("--expr", dc.expr,
                             "arcsin-pow | arcsinh-pow | arccos-ratio | arccosh-ratio | "
                             "shifted | alpha-ratio")
        ->required();
    diag_compare->add_option("--k", dc.k, "Power k")->capture_default_str();
    diag_compare->add_option("--alpha", dc.alpha, "Rational exponent for alpha-ratio");
    diag_compare->add_option("--x", dc.x, "Evaluation point (rational)")->required();
    diag_compare->add_option("--terms", dc.terms, "Truncation order")->capture_default_str();

    auto* diag_mac =
        cmd_diag->add_subcommand("maclaurin", "Partial Maclaurin coefficient of (arccos x)^(2k)");
    diag_mac->fallthrough();
    struct {
        unsigned k = 1;
        unsigned j = 0;
        unsigned terms = 40;
    } dm;
    diag_mac->add_option("--k", dm.k, "Half-power k")->capture_default_str();
    diag_mac->add_option("--j", dm.j, "Coefficient index j")->required();
    diag_mac->add_option("--terms", dm.terms, "Inner sum truncation")->capture_default_str();

    auto* diag_l = cmd_diag->add_subcommand("l-estimate", "Convergence-rate diagnostics");
    diag_l->fallthrough();
    struct {
        unsigned k = 1;
        unsigned terms = 100;
    } dl;
    diag_l->add_option("--k", dl.k, "Series power k")->capture_default_str();
    diag_l->add_option("--terms", dl.terms, "Term count M")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    Ctx ctx(qx_ctx_new());
    if (!ctx) {
        std::cerr << "error: cannot allocate context\n";
        return 1;
    }

    if (*cmd_stirling) {
        if (st.k) {
            ApiStr s(qx_stirling(ctx.get(), st.n, *st.k));
            if (!s) return fail_from_ctx(ctx.get());
            return emit_scalar(s.get(), meta({{"n", st.n}, {"k", *st.k}}), g.format, g.out);
        }
        ApiStr s(qx_stirling_row(ctx.get(), st.n));
        if (!s) return fail_from_ctx(ctx.get());
        json doc = json::parse(s.get());
        if (g.format == "csv") {
            std::ostringstream os;
            os << "k,value\n";
            unsigned k = 0;
            for (const json& v : doc["row"]) os << k++ << "," << v.get<std::string>() << "\n";
            return emit(os.str(), g.out);
        }
        return emit_doc(doc, g.format, g.out);
    }

    if (*cmd_q) {
        if (!qq.table.empty()) {
            if (qq.k || qq.m) {
                std::cerr << "error: --table excludes --k/--m\n";
                return 1;
            }
            ApiStr s(qx_q_table(ctx.get(), qq.table[0], qq.table[1]));
            if (!s) return fail_from_ctx(ctx.get());
            json doc = json::parse(s.get());
            if (g.format == "csv") {
                // Rectangular: row k holds Q(k,0..m_max).
                std::ostringstream os;
                for (const json& row : doc["rows"]) {
                    bool first = true;
                    for (const json& v : row) {
                        if (!first) os << ",";
                        os << v.get<std::string>();
                        first = false;
                    }
                    os << "\n";
                }
                return emit(os.str(), g.out);
            }
            return emit_doc(doc, g.format, g.out);
        }
        if (!qq.k || !qq.m) {
            std::cerr << "error: q needs --k and --m (or --table KMAX MMAX)\n";
            return 1;
        }
        ApiStr s(qx_q(ctx.get(), *qq.k, *qq.m));
        if (!s) return fail_from_ctx(ctx.get());
        return emit_scalar(s.get(), meta({{"k", *qq.k}, {"m", *qq.m}}), g.format, g.out);
    }

    if (*cmd_bell) {
        if (be.preset == "arccos") {
            if (!be.m || !be.k) {
                std::cerr << "error: bell --preset arccos needs --m and --k\n";
                return 1;
            }
            ApiStr s(qx_bell_arccos(ctx.get(), *be.m, *be.k));
            if (!s) return fail_from_ctx(ctx.get());
            return emit_scalar(
                s.get(), meta({{"preset", "arccos"}, {"m", *be.m}, {"k", *be.k}}), g.format,
                g.out);
        }
        if (!be.n || !be.k || be.values.empty()) {
            std::cerr << "error: bell needs --n, --k and --values\n";
            return 1;
        }
        ApiStr s(qx_bell(ctx.get(), *be.n, *be.k, be.values.c_str()));
        if (!s) return fail_from_ctx(ctx.get());
        return emit_scalar(s.get(), meta({{"n", *be.n}, {"k", *be.k}}), g.format, g.out);
    }

    if (*cmd_prod) {
        ApiStr s(qx_prod(ctx.get(), pr.k, pr.variant.c_str(), pr.via_stirling ? 1 : 0));
        if (!s) return fail_from_ctx(ctx.get());
        json doc = json::parse(s.get());
        if (g.format == "csv") {
            std::ostringstream os;
            os << "j,coeff\n";
            unsigned j = 0;
            for (const json& v : doc["coeffs"]) os << j++ << "," << v.get<std::string>() << "\n";
            return emit(os.str(), g.out);
        }
        return emit_doc(doc, g.format, g.out);
    }

    if (*cmd_series) {
        const char* alpha = se.alpha.empty() ? nullptr : se.alpha.c_str();
        ApiStr s(se.eval_x.empty()
                     ? qx_series(ctx.get(), se.expr.c_str(), se.k, alpha, se.terms)
                     : qx_series_eval(ctx.get(), se.expr.c_str(), se.k, alpha, se.terms,
                                      se.eval_x.c_str(), g.digits));
        if (!s) return fail_from_ctx(ctx.get());
        json doc = json::parse(s.get());
        if (g.format == "csv") {
            std::ostringstream os;
            os << "n,coeff\n";
            unsigned n = 0;
            for (const json& v : doc["coeffs"]) os << n++ << "," << v.get<std::string>() << "\n";
            return emit(os.str(), g.out);
        }
        return emit_doc(doc, g.format, g.out);
    }

    if (*cmd_pi) {
        const char* alpha = pp.alpha.empty() ? nullptr : pp.alpha.c_str();
        ApiStr s(qx_pi(ctx.get(), pp.repr.c_str(), pp.k, alpha, pp.terms, g.digits));
        if (!s) return fail_from_ctx(ctx.get());
        return emit_doc(json::parse(s.get()), g.format, g.out);
    }

    if (*cmd_verify) {
        char* report = nullptr;
        int rc = qx_verify(ctx.get(), vf.suite.c_str(), vf.max_n, g.seed, &report);
        ApiStr guard(report);
        if (rc != QX_OK && rc != QX_EVERIFY) return fail_from_ctx(ctx.get());
        if (!guard) {
            std::cerr << "error: missing verification report\n";
            return 1;
        }
        json doc = json::parse(guard.get());
        int emit_rc;
        if (g.format == "csv") {
            std::ostringstream os;
            os << "name,pass,detail\n";
            for (const json& c : doc["cases"])
                os << csv_escape(c["name"].get<std::string>()) << ","
                   << (c["pass"].get<bool>() ? "true" : "false") << ","
                   << csv_escape(c["detail"].get<std::string>()) << "\n";
            emit_rc = emit(os.str(), g.out);
        } else if (g.format == "text") {
            std::ostringstream os;
            for (const json& c : doc["cases"]) {
                os << (c["pass"].get<bool>() ? "PASS" : "FAIL") << " "
                   << c["name"].get<std::string>();
                std::string detail = c["detail"].get<std::string>();
                if (!detail.empty()) os << " (" << detail << ")";
                os << "\n";
            }
            os << "suite: " << doc["suite"].get<std::string>()
               << "  cases: " << doc["cases"].size()
               << "  failures: " << doc["failures"].get<unsigned>() << "\n";
            emit_rc = emit(os.str(), g.out);
        } else {
            emit_rc = emit(pretty_json(doc), g.out);
        }
        if (emit_rc != 0) return emit_rc;
        return exit_code(rc);
    }

    if (*cmd_diag) {
        if (*diag_compare) {
            const char* alpha = dc.alpha.empty() ? nullptr : dc.alpha.c_str();
            ApiStr s(qx_compare(ctx.get(), dc.expr.c_str(), dc.k, alpha, dc.x.c_str(),
                                dc.terms, g.digits));
            if (!s) return fail_from_ctx(ctx.get());
            return emit_doc(json::parse(s.get()), g.format, g.out);
        }
        if (*diag_mac) {
            ApiStr s(qx_maclaurin(ctx.get(), dm.k, dm.j, dm.terms));
            if (!s) return fail_from_ctx(ctx.get());
            return emit_doc(json::parse(s.get()), g.format, g.out);
        }
        ApiStr s(qx_pi_l_estimate(ctx.get(), dl.k, dl.terms, g.digits));
        if (!s) return fail_from_ctx(ctx.get());
        return emit_doc(json::parse(s.get()), g.format, g.out);
    }

    std::cerr << "error: no subcommand\n";
    return 1;
}
