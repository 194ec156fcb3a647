#include "qexpand/qexpand.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qexpand/bell.hpp"
#include "qexpand/errors.hpp"
#include "qexpand/oracle.hpp"
#include "qexpand/pirepr.hpp"
#include "qexpand/prodexpand.hpp"
#include "qexpand/qfunc.hpp"
#include "qexpand/rational.hpp"
#include "qexpand/series.hpp"
#include "qexpand/stirling.hpp"
#include "qexpand/verify.hpp"

using json = nlohmann::ordered_json;

struct qx_ctx {
    int code = QX_OK;
    std::string msg;
};

namespace {

void set_err(qx_ctx* ctx, int code, std::string msg) {
    ctx->code = code;
    ctx->msg = std::move(msg);
}

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

int code_for(const std::exception& e) {
    if (dynamic_cast<const qx::UsageError*>(&e)) return QX_EUSAGE;
    if (dynamic_cast<const qx::DomainError*>(&e)) return QX_EDOMAIN;
    if (dynamic_cast<const qx::PrecisionError*>(&e)) return QX_EPRECISION;
    return QX_EINTERNAL;
}

// Runs body() -> std::string under the context's error protocol.
template <typename F>
char* run_str(qx_ctx* ctx, F&& body) {
    if (!ctx) return nullptr;
    set_err(ctx, QX_OK, "");
    try {
        return dup_string(body());
    } catch (const std::exception& e) {
        set_err(ctx, code_for(e), e.what());
        return nullptr;
    }
}

std::string require_text(const char* s, const char* what) {
    if (!s || !*s) throw qx::UsageError(std::string(what) + " must be provided");
    return s;
}

qx::Rational parse_rational(const char* s, const char* what) {
    return qx::Rational::from_string(require_text(s, what));
}

std::vector<qx::Rational> parse_rational_list(const char* s) {
    std::string text = require_text(s, "argument values");
    std::vector<qx::Rational> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::size_t end = comma == std::string::npos ? text.size() : comma;
        out.push_back(qx::Rational::from_string(text.substr(pos, end - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

const char* center_name(qx::Center c) {
    switch (c) {
    case qx::Center::zero: return "0";
    case qx::Center::one: return "1";
    case qx::Center::minus_one: return "-1";
    }
    return "?";
}

const char* variable_name(qx::Variable v) {
    switch (v) {
    case qx::Variable::x: return "x";
    case qx::Variable::x_minus_1: return "x-1";
    case qx::Variable::one_minus_x: return "1-x";
    case qx::Variable::x_plus_1: return "x+1";
    }
    return "?";
}

// The family names shared by qx_series and qx_compare.
qx::CoeffSeries build_series(qx::StirlingTable& table, const std::string& expr, unsigned k,
                             const char* alpha, unsigned terms) {
    if (expr == "arcsin-pow") return qx::arcsin_pow(table, k, terms, false);
    if (expr == "arcsinh-pow") return qx::arcsin_pow(table, k, terms, true);
    if (expr == "arccos-ratio") return qx::arccos_ratio_pow(table, k, terms, false);
    if (expr == "arccosh-ratio") return qx::arccos_ratio_pow(table, k, terms, true);
    if (expr == "shifted")
        return qx::shifted_forms(table, k, terms, qx::ShiftedVariant::pi_minus_arccos);
    if (expr == "shifted-hyp")
        return qx::shifted_forms(table, k, terms, qx::ShiftedVariant::pi_plus_i_arccosh);
    if (expr == "alpha-ratio")
        return qx::ratio_pow_alpha(table, parse_rational(alpha, "alpha"), terms);
    throw qx::UsageError("unknown series family: " + expr);
}

json series_json(const std::string& expr, unsigned k, const char* alpha,
                 const qx::CoeffSeries& s) {
    json j;
    j["schema"] = "1";
    j["expr"] = expr;
    j["k"] = k;
    if (alpha && *alpha) j["alpha"] = qx::Rational::from_string(alpha).to_string();
    j["center"] = center_name(s.center);
    j["variable"] = variable_name(s.variable);
    j["parity"] = s.parity == qx::Parity::even_only ? "even" : "all";
    j["global_sign"] = s.global_sign;
    j["truncation_order"] = s.truncation_order;
    json coeffs = json::array();
    for (const qx::Rational& c : s.coeffs) coeffs.push_back(c.to_string());
    j["coeffs"] = std::move(coeffs);
    return j;
}

qx::CompareExpr compare_expr(const std::string& expr) {
    if (expr == "arcsin-pow") return qx::CompareExpr::arcsin_pow;
    if (expr == "arcsinh-pow") return qx::CompareExpr::arcsinh_pow;
    if (expr == "arccos-ratio") return qx::CompareExpr::arccos_ratio;
    if (expr == "arccosh-ratio") return qx::CompareExpr::arccosh_ratio;
    if (expr == "shifted") return qx::CompareExpr::shifted;
    if (expr == "alpha-ratio") return qx::CompareExpr::alpha_ratio;
    throw qx::UsageError("unknown comparison family: " + expr);
}

} // namespace

extern "C" {

qx_ctx* qx_ctx_new(void) { return new (std::nothrow) qx_ctx(); }

void qx_ctx_free(qx_ctx* ctx) { delete ctx; }

int qx_errno(const qx_ctx* ctx) { return ctx ? ctx->code : QX_EUSAGE; }

const char* qx_errmsg(const qx_ctx* ctx) { return ctx ? ctx->msg.c_str() : "null context"; }

void qx_free_str(char* s) { std::free(s); }

char* qx_stirling(qx_ctx* ctx, unsigned n, unsigned k) {
    return run_str(ctx, [&] { return qx::stirling1(n, k).get_str(); });
}

char* qx_stirling_row(qx_ctx* ctx, unsigned n) {
    return run_str(ctx, [&] {
        qx::StirlingTable table;
        json row = json::array();
        for (unsigned k = 0; k <= n; ++k) row.push_back(table.s(n, k).get_str());
        json j;
        j["schema"] = "1";
        j["n"] = n;
        j["row"] = std::move(row);
        return j.dump();
    });
}

char* qx_q(qx_ctx* ctx, unsigned k, unsigned m) {
    return run_str(ctx, [&] { return qx::q_km(k, m).to_string(); });
}

char* qx_q_table(qx_ctx* ctx, unsigned k_max, unsigned m_max) {
    return run_str(ctx, [&] {
        auto table = qx::q_table(k_max, m_max);
        json rows = json::array();
        for (const auto& row : table) {
            json r = json::array();
            for (const qx::Rational& v : row) r.push_back(v.to_string());
            rows.push_back(std::move(r));
        }
        json j;
        j["schema"] = "1";
        j["k_max"] = k_max;
        j["m_max"] = m_max;
        j["rows"] = std::move(rows);
        return j.dump();
    });
}

char* qx_bell(qx_ctx* ctx, unsigned n, unsigned k, const char* values) {
    return run_str(ctx, [&] {
        qx::BellArgs args = parse_rational_list(values);
        qx::Rational direct = qx::bell(n, k, args);
        if (direct != qx::bell_rec(n, k, args))
            throw qx::InternalInconsistency("bell partition and recurrence routes disagree");
        return direct.to_string();
    });
}

char* qx_bell_arccos(qx_ctx* ctx, unsigned m, unsigned k) {
    return run_str(ctx, [&] { return qx::bell_arccos(m, k).to_string(); });
}

char* qx_prod(qx_ctx* ctx, unsigned k, const char* variant, int via_stirling) {
    return run_str(ctx, [&] {
        std::string name = require_text(variant, "variant");
        qx::ProdVariant v;
        if (name == "consecutive")
            v = qx::ProdVariant::consecutive;
        else if (name == "odd")
            v = qx::ProdVariant::odd;
        else
            throw qx::UsageError("unknown product variant: " + name);
        qx::IntPoly poly = via_stirling ? qx::prod_squares_stirling(k, v) : qx::prod_squares(k, v);
        json coeffs = json::array();
        for (const qx::Integer& c : poly.coeffs()) coeffs.push_back(c.get_str());
        json j;
        j["schema"] = "1";
        j["k"] = k;
        j["variant"] = name;
        j["via_stirling"] = via_stirling != 0;
        j["coeffs"] = std::move(coeffs);
        j["text"] = poly.to_string();
        return j.dump();
    });
}

char* qx_series(qx_ctx* ctx, const char* expr, unsigned k, const char* alpha, unsigned terms) {
    return run_str(ctx, [&] {
        std::string name = require_text(expr, "series family");
        qx::StirlingTable table;
        qx::CoeffSeries s = build_series(table, name, k, alpha, terms);
        return series_json(name, k, alpha, s).dump();
    });
}

char* qx_series_eval(qx_ctx* ctx, const char* expr, unsigned k, const char* alpha,
                     unsigned terms, const char* x, unsigned digits) {
    return run_str(ctx, [&] {
        std::string name = require_text(expr, "series family");
        qx::Rational xv = parse_rational(x, "x");
        qx::StirlingTable table;
        qx::CoeffSeries s = build_series(table, name, k, alpha, terms);
        qx::FixNum value = qx::eval_truncated(s, xv, digits);
        json j = series_json(name, k, alpha, s);
        json ev;
        ev["x"] = xv.to_string();
        ev["digits"] = digits;
        ev["value"] = value.to_string();
        ev["certified_digits"] = value.certified_digits();
        j["eval"] = std::move(ev);
        return j.dump();
    });
}

char* qx_pi(qx_ctx* ctx, const char* repr, unsigned k, const char* alpha,
            unsigned terms, unsigned digits) {
    return run_str(ctx, [&] {
        std::string name = require_text(repr, "pi-series tag");
        qx::Rational a = alpha && *alpha ? qx::Rational::from_string(alpha) : qx::Rational(1);
        qx::PiTag tag = qx::PiTag::parse(name, k, a);
        qx::Rational partial = qx::partial_sum(tag, terms);
        qx::FixNum partial_fix = qx::fix_from_rational(partial, digits);
        qx::FixNum target = qx::target_value(tag, digits);
        qx::FixNum res = qx::residual(tag, terms, digits);
        json j;
        j["schema"] = "1";
        j["repr"] = tag.name();
        j["k"] = tag.k;
        j["alpha"] = tag.alpha.to_string();
        j["terms"] = terms;
        j["digits"] = digits;
        j["partial_sum"] = partial.to_string();
        j["partial_sum_decimal"] = partial_fix.to_string();
        j["target"] = target.to_string();
        j["residual"] = res.to_string();
        if (terms >= 2) j["root_estimate"] = qx::root_estimate(tag, terms, digits).to_string();
        return j.dump();
    });
}

char* qx_pi_l_estimate(qx_ctx* ctx, unsigned k, unsigned terms, unsigned digits) {
    return run_str(ctx, [&] {
        qx::LEstimate est = qx::empirical_L(k, terms, digits);
        json ratios = json::array();
        for (const qx::FixNum& r : est.ratios) ratios.push_back(r.to_string());
        json j;
        j["schema"] = "1";
        j["k"] = k;
        j["terms"] = terms;
        j["digits"] = digits;
        j["root_estimate"] = est.root.to_string();
        j["ratios"] = std::move(ratios);
        return j.dump();
    });
}

char* qx_compare(qx_ctx* ctx, const char* expr, unsigned k, const char* alpha,
                 const char* x, unsigned terms, unsigned digits) {
    return run_str(ctx, [&] {
        std::string name = require_text(expr, "comparison family");
        qx::CompareExpr ce = compare_expr(name);
        qx::Rational a = alpha && *alpha ? qx::Rational::from_string(alpha) : qx::Rational(1);
        qx::Rational xv = parse_rational(x, "x");
        qx::CompareReport rep = qx::compare(ce, k, a, xv, terms, digits);
        json j;
        j["schema"] = "1";
        j["expr"] = name;
        j["k"] = k;
        j["alpha"] = a.to_string();
        j["x"] = xv.to_string();
        j["terms"] = terms;
        j["digits"] = digits;
        j["domain_ok"] = rep.domain_ok;
        j["note"] = rep.note;
        if (rep.domain_ok) {
            j["series_value"] = rep.series_value.to_string();
            j["direct_value"] = rep.direct_value.to_string();
            j["residual"] = rep.residual.to_string();
            j["tail_bound"] = rep.tail_bound.to_string();
        }
        j["pass"] = rep.pass;
        return j.dump();
    });
}

char* qx_maclaurin(qx_ctx* ctx, unsigned k, unsigned j, unsigned terms) {
    return run_str(ctx, [&] {
        qx::MaclaurinPartial mp = qx::maclaurin_even_pow(k, j, terms);
        json out;
        out["schema"] = "1";
        out["k"] = k;
        out["j"] = j;
        out["terms"] = terms;
        out["value"] = mp.value.to_string();
        out["tail_bound"] = mp.tail_bound.to_string();
        out["tail_valid"] = mp.tail_valid;
        return out.dump();
    });
}

int qx_verify(qx_ctx* ctx, const char* suite, unsigned max_n, uint64_t seed,
              char** report_json) {
    if (report_json) *report_json = nullptr;
    if (!ctx) return QX_EUSAGE;
    set_err(ctx, QX_OK, "");
    try {
        std::string name = require_text(suite, "suite");
        qx::VerifyReport rep = qx::verify_suite(name, max_n, seed);
        json cases = json::array();
        for (const qx::VerifyCase& c : rep.cases) {
            json jc;
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            jc["detail"] = c.detail;
            cases.push_back(std::move(jc));
        }
        json j;
        j["schema"] = "1";
        j["suite"] = rep.suite;
        j["max_n"] = rep.max_n;
        j["seed"] = rep.seed;
        j["cases"] = std::move(cases);
        j["failures"] = rep.failures;
        if (report_json) *report_json = dup_string(j.dump());
        if (rep.failures > 0) {
            set_err(ctx, QX_EVERIFY,
                    std::to_string(rep.failures) + " verification case(s) failed");
            return QX_EVERIFY;
        }
        return QX_OK;
    } catch (const std::exception& e) {
        set_err(ctx, code_for(e), e.what());
        return ctx->code;
    }
}

} /* extern "C" */
