#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <string>

#include <json.hpp>

#include "qexpand/qexpand.h"

using json = nlohmann::json;

namespace {

struct CtxDeleter {
    void operator()(qx_ctx* c) const { qx_ctx_free(c); }
};
struct StrDeleter {
    void operator()(char* s) const { qx_free_str(s); }
};
using Ctx = std::unique_ptr<qx_ctx, CtxDeleter>;
using Str = std::unique_ptr<char, StrDeleter>;

Ctx make_ctx() { return Ctx(qx_ctx_new()); }

std::string str_of(Str s) {
    REQUIRE(s != nullptr);
    return std::string(s.get());
}

json json_of(Str s) { return json::parse(str_of(std::move(s))); }

} // namespace

TEST_CASE("context lifecycle and null handling") {
    Ctx ctx = make_ctx();
    REQUIRE(ctx != nullptr);
    CHECK(qx_errno(ctx.get()) == QX_OK);
    CHECK(std::string(qx_errmsg(ctx.get())).empty());

    CHECK(qx_errno(nullptr) == QX_EUSAGE);
    CHECK(std::string(qx_errmsg(nullptr)) == "null context");
    qx_ctx_free(nullptr);
    qx_free_str(nullptr);
    CHECK(qx_stirling(nullptr, 3, 1) == nullptr);
}

TEST_CASE("scalar endpoints: stirling, q, bell") {
    Ctx ctx = make_ctx();

    CHECK(str_of(Str(qx_stirling(ctx.get(), 5, 2))) == "-50");
    CHECK(str_of(Str(qx_stirling(ctx.get(), 0, 0))) == "1");
    CHECK(str_of(Str(qx_stirling(ctx.get(), 7, 3))) == "1624");

    Str bad(qx_stirling(ctx.get(), 3, 5));
    CHECK(bad == nullptr);
    CHECK(qx_errno(ctx.get()) == QX_EDOMAIN);
    CHECK_FALSE(std::string(qx_errmsg(ctx.get())).empty());

    // A successful call resets the error state.
    CHECK(str_of(Str(qx_q(ctx.get(), 2, 2))) == "-1");
    CHECK(qx_errno(ctx.get()) == QX_OK);

    CHECK(str_of(Str(qx_q(ctx.get(), 1, 2))) == "-1/4");
    CHECK(qx_q(ctx.get(), 0, 0) == nullptr);
    CHECK(qx_errno(ctx.get()) == QX_EDOMAIN);

    CHECK(str_of(Str(qx_bell(ctx.get(), 4, 2, "1,2,3"))) == "24");
    CHECK(qx_bell(ctx.get(), 4, 2, "1,x") == nullptr);
    CHECK(qx_errno(ctx.get()) == QX_EDOMAIN);
    CHECK(qx_bell(ctx.get(), 6, 2, "1,1,1") == nullptr);
    CHECK(qx_errno(ctx.get()) == QX_EDOMAIN);
    CHECK(qx_bell(ctx.get(), 4, 2, nullptr) == nullptr);
    CHECK(qx_errno(ctx.get()) == QX_EUSAGE);
    CHECK(qx_bell(ctx.get(), 4, 2, "") == nullptr);
    CHECK(qx_errno(ctx.get()) == QX_EUSAGE);

    CHECK(str_of(Str(qx_bell_arccos(ctx.get(), 1, 1))) == "-1/6");
    CHECK(str_of(Str(qx_bell_arccos(ctx.get(), 2, 2))) == "1/36");
}

TEST_CASE("row and table documents") {
    Ctx ctx = make_ctx();

    json row = json_of(Str(qx_stirling_row(ctx.get(), 5)));
    CHECK(row["schema"] == "1");
    CHECK(row["n"] == 5);
    CHECK(row["row"] == json::array({"0", "24", "-50", "35", "-10", "1"}));

    json table = json_of(Str(qx_q_table(ctx.get(), 3, 4)));
    CHECK(table["schema"] == "1");
    CHECK(table["k_max"] == 3);
    CHECK(table["m_max"] == 4);
    REQUIRE(table["rows"].size() == 3);
    REQUIRE(table["rows"][0].size() == 5);
    CHECK(table["rows"][0][0] == "1");
    CHECK(table["rows"][0][1] == "0");
    CHECK(table["rows"][0][2] == "-1/4");
    CHECK(table["rows"][0][4] == "9/16");
    CHECK(table["rows"][1][2] == "-1");
    CHECK(table["rows"][1][4] == "4");
}

TEST_CASE("product expansion document") {
    Ctx ctx = make_ctx();

    json direct = json_of(Str(qx_prod(ctx.get(), 2, "consecutive", 0)));
    CHECK(direct["schema"] == "1");
    CHECK(direct["k"] == 2);
    CHECK(direct["variant"] == "consecutive");
    CHECK(direct["via_stirling"] == false);
    CHECK(direct["coeffs"] == json::array({"4", "5", "1"}));
    CHECK(direct["text"] == "beta^2 + 5*beta + 4");

    json via = json_of(Str(qx_prod(ctx.get(), 2, "odd", 1)));
    CHECK(via["via_stirling"] == true);
    CHECK(via["coeffs"] == json::array({"9", "10", "1"}));

    json unit = json_of(Str(qx_prod(ctx.get(), 0, "odd", 0)));
    CHECK(unit["coeffs"] == json::array({"1"}));
    CHECK(unit["text"] == "1");

    CHECK(qx_prod(ctx.get(), 2, "bogus", 0) == nullptr);
    CHECK(qx_errno(ctx.get()) == QX_EUSAGE);
    CHECK(qx_prod(ctx.get(), 2, nullptr, 0) == nullptr);
    CHECK(qx_errno(ctx.get()) == QX_EUSAGE);
}

TEST_CASE("series documents") {
    Ctx ctx = make_ctx();

    json s = json_of(Str(qx_series(ctx.get(), "arcsin-pow", 1, nullptr, 3)));
    CHECK(s["schema"] == "1");
    CHECK(s["expr"] == "arcsin-pow");
    CHECK(s["k"] == 1);
    CHECK_FALSE(s.contains("alpha"));
    CHECK(s["center"] == "0");
    CHECK(s["variable"] == "x");
    CHECK(s["parity"] == "even");
    CHECK(s["global_sign"] == 1);
    CHECK(s["truncation_order"] == 6);
    REQUIRE(s["coeffs"].size() == 7);
    CHECK(s["coeffs"][0] == "1");
    CHECK(s["coeffs"][1] == "0");
    CHECK(s["coeffs"][2] == "1/6");
    CHECK(s["coeffs"][4] == "3/40");

    json r = json_of(Str(qx_series(ctx.get(), "arccos-ratio", 1, nullptr, 2)));
    CHECK(r["center"] == "1");
    CHECK(r["variable"] == "x-1");
    CHECK(r["parity"] == "all");
    CHECK(r["coeffs"] == json::array({"1", "-1/6", "2/45"}));

    json sh = json_of(Str(qx_series(ctx.get(), "shifted-hyp", 1, nullptr, 2)));
    CHECK(sh["global_sign"] == -1);
    CHECK(sh["variable"] == "x+1");

    json al = json_of(Str(qx_series(ctx.get(), "alpha-ratio", 0, "1/2", 4)));
    CHECK(al["alpha"] == "1/2");
    CHECK(al["coeffs"][1] == "-1/12");

    CHECK(qx_series(ctx.get(), "alpha-ratio", 0, nullptr, 4) == nullptr);
    CHECK(qx_errno(ctx.get()) == QX_EUSAGE);
    CHECK(qx_series(ctx.get(), "bogus", 1, nullptr, 4) == nullptr);
    CHECK(qx_errno(ctx.get()) == QX_EUSAGE);
    CHECK(qx_series(ctx.get(), "arcsin-pow", 0, nullptr, 4) == nullptr);
    CHECK(qx_errno(ctx.get()) == QX_EDOMAIN);
}

TEST_CASE("series evaluation document") {
    Ctx ctx = make_ctx();

    json s = json_of(Str(qx_series_eval(ctx.get(), "arcsin-pow", 1, nullptr, 10, "1/2", 30)));
    REQUIRE(s.contains("eval"));
    CHECK(s["eval"]["x"] == "1/2");
    CHECK(s["eval"]["digits"] == 30);
    std::string value = s["eval"]["value"];
    CHECK(value.substr(0, 6) == "1.0471");  // arcsin(1/2)/(1/2) = pi/3
    CHECK(s["eval"]["certified_digits"].get<unsigned>() >= 25);

    CHECK(qx_series_eval(ctx.get(), "arcsin-pow", 1, nullptr, 10, "2", 30) == nullptr);
    CHECK(qx_errno(ctx.get()) == QX_EDOMAIN);
    CHECK(qx_series_eval(ctx.get(), "arcsin-pow", 1, nullptr, 10, nullptr, 30) == nullptr);
    CHECK(qx_errno(ctx.get()) == QX_EUSAGE);
}

TEST_CASE("pi-series documents") {
    Ctx ctx = make_ctx();

    json p = json_of(Str(qx_pi(ctx.get(), "sq8", 1, nullptr, 3, 30)));
    CHECK(p["schema"] == "1");
    CHECK(p["repr"] == "sq8");
    CHECK(p["alpha"] == "1");
    CHECK(p["partial_sum"] == "109/90");
    std::string dec = p["partial_sum_decimal"];
    CHECK(dec.substr(0, 6) == "1.2111");
    std::string target = p["target"];
    CHECK(target.substr(0, 6) == "1.2337");
    CHECK(p.contains("residual"));
    CHECK(p.contains("root_estimate"));

    json single = json_of(Str(qx_pi(ctx.get(), "sq8", 1, nullptr, 1, 20)));
    CHECK_FALSE(single.contains("root_estimate"));

    json a9 = json_of(Str(qx_pi(ctx.get(), "alpha9", 1, "1/2", 5, 25)));
    CHECK(a9["repr"] == "alpha9(1/2)");

    CHECK(qx_pi(ctx.get(), "bogus", 1, nullptr, 5, 20) == nullptr);
    CHECK(qx_errno(ctx.get()) == QX_EUSAGE);
    CHECK(qx_pi(ctx.get(), "pow8", 0, nullptr, 5, 20) == nullptr);
    CHECK(qx_errno(ctx.get()) == QX_EDOMAIN);

    json l = json_of(Str(qx_pi_l_estimate(ctx.get(), 1, 12, 20)));
    CHECK(l["schema"] == "1");
    CHECK(l["ratios"].size() == 11);
    CHECK_FALSE(l["root_estimate"].get<std::string>().empty());
    CHECK(qx_pi_l_estimate(ctx.get(), 0, 12, 20) == nullptr);
    CHECK(qx_errno(ctx.get()) == QX_EDOMAIN);
}

TEST_CASE("comparison and Maclaurin documents") {
    Ctx ctx = make_ctx();

    json ok = json_of(Str(qx_compare(ctx.get(), "arcsin-pow", 2, nullptr, "1/2", 30, 25)));
    CHECK(ok["schema"] == "1");
    CHECK(ok["domain_ok"] == true);
    CHECK(ok["pass"] == true);
    CHECK(ok.contains("series_value"));
    CHECK(ok.contains("direct_value"));
    CHECK(ok.contains("residual"));
    CHECK(ok.contains("tail_bound"));

    json rej = json_of(Str(qx_compare(ctx.get(), "arccosh-ratio", 1, nullptr, "3/2", 10, 20)));
    CHECK(rej["domain_ok"] == false);
    CHECK(rej["pass"] == false);
    CHECK_FALSE(rej.contains("series_value"));
    std::string note = rej["note"];
    CHECK(note.find("outside") != std::string::npos);

    CHECK(qx_compare(ctx.get(), "shifted-hyp", 1, nullptr, "0", 10, 20) == nullptr);
    CHECK(qx_errno(ctx.get()) == QX_EUSAGE);
    CHECK(qx_compare(ctx.get(), "arcsin-pow", 1, nullptr, nullptr, 10, 20) == nullptr);
    CHECK(qx_errno(ctx.get()) == QX_EUSAGE);

    json mac = json_of(Str(qx_maclaurin(ctx.get(), 1, 0, 40)));
    CHECK(mac["schema"] == "1");
    CHECK(mac["tail_valid"] == true);
    CHECK_FALSE(mac["value"].get<std::string>().empty());
    CHECK(qx_maclaurin(ctx.get(), 0, 0, 40) == nullptr);
    CHECK(qx_errno(ctx.get()) == QX_EDOMAIN);
}

TEST_CASE("verification runner") {
    Ctx ctx = make_ctx();

    char* report = nullptr;
    int rc = qx_verify(ctx.get(), "stirling", 8, 1, &report);
    CHECK(rc == QX_OK);
    REQUIRE(report != nullptr);
    json j = json_of(Str(report));
    CHECK(j["schema"] == "1");
    CHECK(j["suite"] == "stirling");
    CHECK(j["max_n"] == 8);
    CHECK(j["seed"] == 1);
    CHECK(j["failures"] == 0);
    REQUIRE(j["cases"].is_array());
    REQUIRE(!j["cases"].empty());
    std::string prev;
    for (const auto& c : j["cases"]) {
        CHECK(c["pass"] == true);
        std::string name = c["name"];
        CHECK(prev <= name);  // sorted output
        prev = name;
        CHECK(c.contains("detail"));
    }

    // Same seed, same report, byte for byte.
    char* first = nullptr;
    char* second = nullptr;
    REQUIRE(qx_verify(ctx.get(), "stirling", 8, 7, &first) == QX_OK);
    REQUIRE(qx_verify(ctx.get(), "stirling", 8, 7, &second) == QX_OK);
    CHECK(str_of(Str(first)) == str_of(Str(second)));

    char* bad = nullptr;
    CHECK(qx_verify(ctx.get(), "bogus", 8, 1, &bad) == QX_EUSAGE);
    CHECK(bad == nullptr);
    CHECK(qx_verify(ctx.get(), "q", 0, 1, &bad) == QX_EUSAGE);
    CHECK(bad == nullptr);

    // Null report sink is allowed.
    CHECK(qx_verify(ctx.get(), "stirling", 6, 1, nullptr) == QX_OK);
}
